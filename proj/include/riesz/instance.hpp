#pragma once

#include "riesz/functional.hpp"

#include <optional>
#include <string>
#include <vector>

namespace riesz {

// A problem instance as read from a JSON file. Rationals travel as
// "num/den" strings; unknown fields are rejected; all structural
// invariants (partition coverage, refinement, weight positivity) are
// validated at parse time.
struct Instance {
    std::size_t dimension = 0;
    std::vector<Rat> weights;
    std::vector<std::vector<int>> expectation_partition;
    std::vector<std::vector<int>> algebra_atoms;
    std::optional<std::vector<Rat>> charge_values; // one per algebra atom
    std::optional<Element> density;

    struct FunctionalSpec {
        bool is_density = true;
        Element y;                          // density form
        std::vector<std::vector<Rat>> rows; // matrix form
    };
    std::optional<FunctionalSpec> functional;

    struct Options {
        Rat theta = Rat(2);
        int depth = 8;
        bool oracle = false;
    };
    Options options;

    std::string digest; // content hash of the source bytes

    Expectation expectation() const;
    Partition algebra() const;
    Charge charge() const;              // from charge_values or density
    Functional make_functional() const; // from the functional spec
};

/// Parse and validate instance bytes. Throws parse_error with a
/// JSON-pointer-style path on malformed input or invariant violations.
Instance parse_instance(const std::string& bytes);

/// FNV-1a 64-bit content hash, rendered as "fnv1a64:<hex>".
std::string content_digest(const std::string& bytes);

} // namespace riesz
