#pragma once

#include "riesz/mask.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace riesz {

// A Boolean subalgebra of the components of e, generated by a partition of
// {0,...,n-1}. Membership means "union of atoms". Atoms are canonicalized:
// indices sorted within each atom, atoms sorted by smallest index.
class Partition {
public:
    Partition(std::size_t dim, std::vector<std::vector<int>> atoms);

    /// One atom per coordinate.
    static Partition singletons(std::size_t dim);
    /// The two-element algebra {0, e}.
    static Partition coarsest(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t atom_count() const { return atoms_.size(); }
    const std::vector<std::vector<int>>& atoms() const { return atoms_; }
    /// Index of the atom containing coordinate i.
    std::size_t atom_of(std::size_t i) const { return atom_of_[i]; }
    Mask atom_mask(std::size_t a) const;

    bool is_member(const Mask& p) const;
    /// Atom-inclusion bitmask of p, if p is a member.
    std::optional<std::uint64_t> member_bits(const Mask& p) const;
    /// The member whose atom-inclusion bitmask is `bits`.
    Mask member_from_bits(std::uint64_t bits) const;

    /// All 2^{atom_count} members, ordered by ascending atom-inclusion
    /// bitmask. Throws bound_error above `max_atoms`.
    std::vector<Mask> members(std::size_t max_atoms = 20) const;

    /// True iff every atom of this partition lies inside one atom of
    /// `coarser`, i.e. every member of the coarser algebra is a member here.
    bool refines(const Partition& coarser) const;

    bool operator==(const Partition&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::vector<int>> atoms_;
    std::vector<std::size_t> atom_of_;
};

} // namespace riesz
