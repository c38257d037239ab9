#include "riesz/charge.hpp"
#include "riesz/errors.hpp"

#include <algorithm>
#include <bit>

namespace riesz {

Charge::Charge(Partition algebra, Partition g_blocks, std::vector<Rat> atom_values)
    : algebra_(std::move(algebra)),
      g_blocks_(std::move(g_blocks)),
      atom_values_(std::move(atom_values)) {
    if (algebra_.dim() != g_blocks_.dim())
        throw dimension_error("algebra/g-block dimension mismatch");
    if (atom_values_.size() != algebra_.atom_count())
        throw dimension_error("need one value per algebra atom");
    if (!algebra_.refines(g_blocks_))
        throw precondition_error("algebra must refine the g-blocks");
    g_block_of_atom_.resize(algebra_.atom_count());
    for (std::size_t a = 0; a < algebra_.atom_count(); ++a)
        g_block_of_atom_[a] =
            g_blocks_.atom_of(static_cast<std::size_t>(algebra_.atoms()[a].front()));
}

Charge Charge::from_density(const Expectation& T, const Element& f, Partition B) {
    if (f.size() != T.dim()) throw dimension_error("density/operator dimension mismatch");
    if (!B.refines(T.blocks()))
        throw precondition_error("algebra must refine the expectation blocks");
    std::vector<Rat> values(B.atom_count());
    for (std::size_t a = 0; a < B.atom_count(); ++a) {
        Rat s(0);
        for (int i : B.atoms()[a]) s += T.weights()[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i)];
        values[a] = s / T.block_weight(static_cast<std::size_t>(B.atoms()[a].front()));
    }
    return Charge(std::move(B), T.blocks(), std::move(values));
}

std::uint64_t Charge::require_member(const Mask& p, const char* what) const {
    auto bits = algebra_.member_bits(p);
    if (!bits)
        throw precondition_error(std::string(what) + ": mask " + p.to_string() +
                                 " is not a member of the algebra");
    return *bits;
}

Element Charge::evaluate(const Mask& p) const {
    std::uint64_t bits = require_member(p, "evaluate");
    std::vector<Rat> block_sum(g_blocks_.atom_count(), Rat(0));
    for (std::size_t a = 0; a < atom_count(); ++a)
        if (bits & (std::uint64_t{1} << a)) block_sum[g_block_of_atom_[a]] += atom_values_[a];
    Element out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = block_sum[g_blocks_.atom_of(i)];
    return out;
}

Element Charge::charge_supremum(const Mask& q) const {
    std::uint64_t bits = require_member(q, "charge_supremum");
    std::vector<Rat> block_sum(g_blocks_.atom_count(), Rat(0));
    for (std::size_t a = 0; a < atom_count(); ++a)
        if ((bits & (std::uint64_t{1} << a)) && atom_values_[a] > 0)
            block_sum[g_block_of_atom_[a]] += atom_values_[a];
    Element out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = block_sum[g_blocks_.atom_of(i)];
    return out;
}

Mask Charge::maximal_member(const Mask& q, const Rat& theta) const {
    std::uint64_t qbits = require_member(q, "maximal_member");
    if (theta <= 1) throw precondition_error("theta must exceed 1");

    // Per g-block: envelope value and running charge of the chosen member.
    std::vector<Rat> envelope(g_blocks_.atom_count(), Rat(0));
    std::vector<Rat> chosen(g_blocks_.atom_count(), Rat(0));

    std::uint64_t picked = 0;
    std::vector<std::size_t> negatives;
    for (std::size_t a = 0; a < atom_count(); ++a) {
        if (!(qbits & (std::uint64_t{1} << a))) continue;
        if (atom_values_[a] >= 0) {
            picked |= (std::uint64_t{1} << a);
            chosen[g_block_of_atom_[a]] += atom_values_[a];
            if (atom_values_[a] > 0) envelope[g_block_of_atom_[a]] += atom_values_[a];
        } else {
            negatives.push_back(a);
        }
    }
    std::sort(negatives.begin(), negatives.end(), [&](std::size_t a, std::size_t b) {
        if (atom_values_[a] != atom_values_[b]) return atom_values_[a] > atom_values_[b];
        return a < b;
    });
    for (std::size_t a : negatives) {
        std::size_t g = g_block_of_atom_[a];
        if (theta * (chosen[g] + atom_values_[a]) >= envelope[g]) {
            picked |= (std::uint64_t{1} << a);
            chosen[g] += atom_values_[a];
        }
    }
    return algebra_.member_from_bits(picked);
}

Mask Charge::positive_piece(const Mask& q) const {
    Mask m = maximal_member(q, Rat(2));
    return meet(band_mask(evaluate(m)), m);
}

Mask Charge::strongly_negative_witness(const Mask& p) const {
    Element value = evaluate(p);
    if (!leq(value, Element::zero(dim())) || is_zero(value))
        throw precondition_error("witness needs a member of nonzero nonpositive charge");

    // Each extraction must remove at least one atom, so this terminates.
    Mask rest = p;
    unsigned atoms_left = std::popcount(*algebra_.member_bits(rest));
    while (!is_zero(charge_supremum(rest))) {
        rest = minus(rest, positive_piece(rest));
        unsigned now = std::popcount(*algebra_.member_bits(rest));
        if (now >= atoms_left)
            throw error("positive piece extraction failed to shrink the remainder");
        atoms_left = now;
    }
    return rest;
}

Mask Charge::negative_part_witness(const Mask& q) const {
    Element neg = negative_part(evaluate(q));
    if (is_zero(neg))
        throw precondition_error("charge at q has no negative part");
    Mask g = band_mask(neg);
    return strongly_negative_witness(meet(g, q));
}

Mask Charge::hahn_jordan() const {
    bool any_pos = false, any_neg = false;
    for (const Rat& v : atom_values_) {
        any_pos |= v > 0;
        any_neg |= v < 0;
    }
    if (!any_pos) return Mask::zeros(dim());
    if (!any_neg) return Mask::ones(dim());
    std::uint64_t bits = 0;
    for (std::size_t a = 0; a < atom_count(); ++a)
        if (atom_values_[a] > 0) bits |= (std::uint64_t{1} << a);
    return algebra_.member_from_bits(bits);
}

Mask Charge::strongly_positive_maximal() const {
    std::uint64_t bits = 0;
    for (std::size_t a = 0; a < atom_count(); ++a)
        if (atom_values_[a] >= 0) bits |= (std::uint64_t{1} << a);
    return algebra_.member_from_bits(bits);
}

std::vector<Mask> Charge::brute_force_hahn(std::size_t max_atoms) const {
    if (atom_count() > max_atoms || atom_count() >= 31)
        throw bound_error("brute-force enumeration over " + std::to_string(atom_count()) +
                          " atoms exceeds bound " + std::to_string(max_atoms));
    const std::uint64_t n = std::uint64_t{1} << atom_count();
    const std::uint64_t full = n - 1;

    // Sign of the charge at every member, indexed by atom-inclusion bits.
    std::vector<char> nonneg(n), nonpos(n);
    std::vector<Rat> block_sum(g_blocks_.atom_count());
    for (std::uint64_t bits = 0; bits < n; ++bits) {
        std::fill(block_sum.begin(), block_sum.end(), Rat(0));
        for (std::size_t a = 0; a < atom_count(); ++a)
            if (bits & (std::uint64_t{1} << a)) block_sum[g_block_of_atom_[a]] += atom_values_[a];
        bool ge = true, le = true;
        for (const Rat& s : block_sum) {
            ge &= s >= 0;
            le &= s <= 0;
        }
        nonneg[bits] = ge;
        nonpos[bits] = le;
    }

    std::vector<Mask> out;
    for (std::uint64_t qb = 0; qb < n; ++qb) {
        bool ok = true;
        for (std::uint64_t pb = 0; pb < n && ok; ++pb)
            ok = nonneg[pb & qb] && nonpos[pb & full & ~qb];
        if (ok) out.push_back(algebra_.member_from_bits(qb));
    }
    return out;
}

} // namespace riesz
