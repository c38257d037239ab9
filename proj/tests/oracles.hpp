// Independent reference computations used to freeze expected values.
// Everything here is straight loops over the raw data, deliberately not
// sharing code with the library paths under test.
#pragma once

#include "riesz/charge.hpp"
#include "riesz/expectation.hpp"

#include <vector>

namespace oracle {

using riesz::Element;
using riesz::Int;
using riesz::Mask;
using riesz::Rat;

/// Weighted mean per block, computed coordinate by coordinate.
inline Element block_average(const std::vector<std::vector<int>>& blocks,
                             const std::vector<Rat>& weights, const Element& f) {
    Element out(f.size());
    for (const auto& block : blocks) {
        Rat num(0), den(0);
        for (int i : block) {
            num += weights[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i)];
            den += weights[static_cast<std::size_t>(i)];
        }
        for (int i : block) out[static_cast<std::size_t>(i)] = num / den;
    }
    return out;
}

/// Charge value at p, summed per coordinate: coordinate i collects the
/// values of the atoms inside p that share i's g-block.
inline Element charge_at(const std::vector<std::vector<int>>& atoms,
                         const std::vector<Rat>& values,
                         const std::vector<std::vector<int>>& g_blocks, const Mask& p,
                         std::size_t n) {
    auto block_of = [&](int i) {
        for (std::size_t b = 0; b < g_blocks.size(); ++b)
            for (int j : g_blocks[b])
                if (j == i) return b;
        return g_blocks.size();
    };
    Element out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            bool inside = true;
            for (int j : atoms[a]) inside &= p[static_cast<std::size_t>(j)];
            if (inside && block_of(atoms[a].front()) == block_of(static_cast<int>(i)))
                out[i] += values[a];
        }
    }
    return out;
}

/// Supremum of the charge over all members below q, by full enumeration.
inline Element exhaustive_supremum(const riesz::Charge& psi, const Mask& q) {
    Element best(psi.dim());
    for (const Mask& p : psi.algebra().members())
        if (riesz::submask(p, q)) best = riesz::sup(best, psi.evaluate(p));
    return best;
}

/// All decomposition components by the defining double loop, no tables.
inline std::vector<Mask> naive_hahn_set(const riesz::Charge& psi) {
    std::vector<Mask> out;
    auto members = psi.algebra().members();
    for (const Mask& q : members) {
        bool ok = true;
        for (const Mask& p : members) {
            ok &= riesz::is_nonneg(psi.evaluate(riesz::meet(p, q)));
            ok &= riesz::leq(psi.evaluate(riesz::meet(p, riesz::complement(q))),
                             Element::zero(psi.dim()));
            if (!ok) break;
        }
        if (ok) out.push_back(q);
    }
    return out;
}

/// Strong negativity of v below p: every member under v has charge <= 0.
inline bool strongly_negative(const riesz::Charge& psi, const Mask& v) {
    for (const Mask& r : psi.algebra().members())
        if (riesz::submask(r, v) && !riesz::leq(psi.evaluate(r), Element::zero(psi.dim())))
            return false;
    return true;
}

/// Dyadic cell index of a value by direct interval membership
/// j/2^n < v <= (j+1)/2^n, scanning upward from zero.
inline Int cell_by_scan(const Rat& v, int depth) {
    Rat step = riesz::pow2(-depth);
    Int j(0);
    while (!(Rat(j) * step < v && v <= Rat(j + 1) * step)) ++j;
    return j;
}

} // namespace oracle
