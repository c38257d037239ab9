#pragma once

#include "riesz/mask.hpp"

#include <utility>
#include <vector>

namespace riesz {

// Dyadic cell decomposition of a nonnegative f at resolution 2^-depth.
// Cell j flags the coordinates with f_i in (j/2^n, (j+1)/2^n]; only the
// nonempty cells are stored (there are at most dim many). Cells are
// pairwise disjoint and their join is the support of f.
struct Ladder {
    int depth = 1;
    std::vector<std::pair<Int, Mask>> cells; // ascending by level
    Int truncation;                          // least J with all cells below J
    Mask support;

    Mask mask_at(const Int& level) const;
};

/// The unique h supported on the band of g with g*h equal to the band mask
/// of g: coordinatewise reciprocal on the support, zero elsewhere. g is in
/// turn the canonical partial inverse of h.
Element canonical_inverse(const Element& g);

/// Build the dyadic ladder of f >= 0 at the given depth (>= 1).
Ladder spectral_masks(const Element& f, int depth);

/// (lower, upper): the dyadic envelopes of f >= 0 from the ladder, with
/// lower <= f <= upper and upper - lower = 2^-depth on the support.
std::pair<Element, Element> dyadic_bounds(const Element& f, int depth);

/// Lower approximant of the partial inverse of f >= 0: sum over cells of
/// 2^n/(j+1) times the cell mask. Increases with depth and converges to
/// canonical_inverse(f) on the support.
Element spectral_inverse(const Element& f, int depth);

/// Correction term collecting the sub-resolution coordinates: sum over
/// levels j >= depth of 2^j times (small-cell mask at j minus at j+1).
/// Finitely supported: vanishes once 2^-j drops below the least positive
/// coordinate of f.
Element small_cell_correction(const Element& f, int depth);

/// Upper companion of spectral_inverse: the correction term plus
/// sum over cells j >= 1 of 2^n/j times the cell mask.
Element spectral_inverse_upper(const Element& f, int depth);

} // namespace riesz
