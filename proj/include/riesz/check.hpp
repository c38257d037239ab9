#pragma once

#include <string>
#include <vector>

namespace riesz {

/// One verification outcome. A failing check always carries a witness
/// naming the mask, coordinate or pair that broke it.
struct Check {
    std::string name;
    std::string scope;
    bool pass = true;
    std::string witness; // empty on pass
};

inline bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace riesz
