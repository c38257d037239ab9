#pragma once

#include "riesz/check.hpp"
#include "riesz/instance.hpp"
#include "riesz/partial_inverse.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>

namespace riesz {

// The output contract of every command: what ran, on which instance, what
// came out, and the list of verified facts. Serialization is a pure
// function of (instance bytes, command, options, seed) so reruns are
// byte-identical; wall-clock time is reported separately by the CLI.
struct Certificate {
    std::string command;
    nlohmann::ordered_json arguments = nlohmann::ordered_json::object();
    std::string instance_digest;
    nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
    std::vector<Check> checks;

    bool all_passed() const { return all_pass(checks); }
    nlohmann::ordered_json to_json() const;
    /// Human-readable summary, one line per check.
    std::string pretty() const;
};

struct RunOptions {
    std::optional<Rat> theta;
    std::optional<int> depth;
    std::optional<bool> oracle;
    std::size_t oracle_bound = 12;
};

/// Hahn-Jordan decomposition of the instance charge, with the envelope
/// sandwich and positive-piece side checks; exhaustive quantifiers when the
/// oracle option is set.
Certificate run_decompose(const Instance& inst, const RunOptions& opts = {});

/// Exact and dyadic representation of the instance functional, with norm
/// equality and error-bound checks.
Certificate run_represent(const Instance& inst, const RunOptions& opts = {});

/// Canonical partial inverse of the instance density, with the dyadic
/// construction verified at the requested depth.
Certificate run_invert(const Instance& inst, const RunOptions& opts = {});

/// Every check applicable to the instance payloads.
Certificate run_verify(const Instance& inst, const RunOptions& opts = {});

/// Randomized property campaign over all module invariant suites.
/// Deterministic for a fixed seed.
Certificate run_selftest(std::uint64_t seed, std::uint64_t trials);

/// Helpers shared by vector-valued outputs: arrays of "num/den" strings.
nlohmann::ordered_json element_json(const Element& v);

} // namespace riesz
