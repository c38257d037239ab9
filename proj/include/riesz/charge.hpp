#pragma once

#include "riesz/expectation.hpp"

#include <vector>

namespace riesz {

// An additive charge on the Boolean algebra generated by `algebra`, with
// values in the block-constant vectors over `g_blocks`. It is stored by one
// rational per algebra atom: the constant value the charge takes, on the
// enclosing g-block, when evaluated at that atom. Additivity and
// g-block homogeneity hold by construction of this encoding.
class Charge {
public:
    Charge(Partition algebra, Partition g_blocks, std::vector<Rat> atom_values);

    /// The charge p -> T(p*f) restricted to the algebra generated by B.
    static Charge from_density(const Expectation& T, const Element& f, Partition B);

    std::size_t dim() const { return algebra_.dim(); }
    const Partition& algebra() const { return algebra_; }
    const Partition& g_blocks() const { return g_blocks_; }
    std::size_t atom_count() const { return atom_values_.size(); }
    const Rat& atom_value(std::size_t a) const { return atom_values_[a]; }
    std::size_t g_block_of_atom(std::size_t a) const { return g_block_of_atom_[a]; }

    /// Value of the charge at a member p. Block-constant over g_blocks.
    Element evaluate(const Mask& p) const;

    /// Supremum of the charge over all members below q. Componentwise it is
    /// the per-g-block sum of positive atom values under q; always >= 0.
    Element charge_supremum(const Mask& q) const;

    /// A maximal member p <= q whose charge theta-dominates the supremum
    /// envelope: theta * charge(p) >= p * charge_supremum(q). Greedy: seed
    /// with every nonnegative atom under q, then admit negative atoms in
    /// descending value order while the condition survives. Requires
    /// theta > 1. The result m satisfies
    ///   charge_supremum(q) <= theta * charge(m) <= theta * charge_supremum(q).
    Mask maximal_member(const Mask& q, const Rat& theta) const;

    /// A member u <= q supported where its own charge lives, with
    /// charge(u) >= 0 and charge(u) <= charge_supremum(q) <= 2 * charge(u).
    Mask positive_piece(const Mask& q) const;

    /// For p with charge(p) <= 0, != 0: a member v <= p with
    /// charge(v) <= charge(p) and charge(r) <= 0 for every member r <= v.
    /// Iteratively strips positive pieces until the supremum vanishes.
    Mask strongly_negative_witness(const Mask& p) const;

    /// For q whose charge has a nonzero negative part: a strongly negative
    /// v <= q with charge(v) <= -(charge(q))^-.
    Mask negative_part_witness(const Mask& q) const;

    /// The canonical strongly positive component q: charge(p*q) >= 0 and
    /// charge(p*(e-q)) <= 0 for every member p. Canonical choice: the join
    /// of the atoms with strictly positive value; atoms of value zero go to
    /// the negative side, except in the all-nonnegative case which returns e.
    Mask hahn_jordan() const;

    /// The largest strongly positive component: join of atoms with value
    /// >= 0. Always a valid decomposition component; used for tie-inclusive
    /// level sets.
    Mask strongly_positive_maximal() const;

    /// Every member satisfying the two-sided decomposition condition, by
    /// double enumeration over the algebra. Throws bound_error when the
    /// algebra has more than `max_atoms` atoms.
    std::vector<Mask> brute_force_hahn(std::size_t max_atoms = 12) const;

    bool operator==(const Charge&) const = default;

private:
    std::uint64_t require_member(const Mask& p, const char* what) const;

    Partition algebra_;
    Partition g_blocks_;
    std::vector<Rat> atom_values_;
    std::vector<std::size_t> g_block_of_atom_;
};

} // namespace riesz
