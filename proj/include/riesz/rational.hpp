#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace riesz {

// All coordinates, weights and charge values are exact rationals with
// arbitrary-precision integer parts. Order comparisons are exact; nothing
// in the library ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical textual form "num/den", lowest terms, denominator positive.
std::string format_rat(const Rat& r);

/// Parse "num" or "num/den" (optional leading '-'). Throws precondition_error
/// on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// Largest integer <= r.
Int floor_rat(const Rat& r);

/// Smallest integer >= r.
Int ceil_rat(const Rat& r);

/// 2^k as a rational, k may be negative.
Rat pow2(long k);

/// Smallest nonnegative integer s with s*s >= v (v >= 0).
Int isqrt_ceil(const Int& v);

} // namespace riesz
