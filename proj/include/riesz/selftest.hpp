#pragma once

#include "riesz/check.hpp"
#include "riesz/charge.hpp"
#include "riesz/functional.hpp"

#include <cstdint>
#include <random>

namespace riesz {

// Deterministic bounded draws straight off the engine, so certificates are
// identical across platforms and runs for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; } // bound >= 1
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    /// Rational with numerator in [lo, hi] and denominator in [1, dmax].
    Rat rat(long lo, long hi, long dmax) {
        return Rat(Int(range(lo, hi)), Int(range(1, dmax)));
    }

private:
    std::mt19937_64 eng_;
};

Element random_element(Rng& rng, std::size_t n, long lo = -9, long hi = 9, long dmax = 4);
Element random_nonneg_element(Rng& rng, std::size_t n, long hi = 9, long dmax = 4);
Partition random_partition(Rng& rng, std::size_t n);
Partition random_refinement(Rng& rng, const Partition& coarse);
Expectation random_expectation(Rng& rng, std::size_t n);
Charge random_charge(Rng& rng, std::size_t n);

/// Run every module invariant suite on `trials` random instances with
/// dimension <= 12, appending one aggregated Check row per property.
void selftest_campaign(std::uint64_t seed, std::uint64_t trials, std::vector<Check>& out);

} // namespace riesz
