#include "riesz/partition.hpp"
#include "riesz/errors.hpp"

#include <algorithm>

namespace riesz {

Partition::Partition(std::size_t dim, std::vector<std::vector<int>> atoms)
    : dim_(dim), atoms_(std::move(atoms)) {
    if (dim_ == 0) throw precondition_error("dimension must be positive");
    for (auto& a : atoms_) {
        if (a.empty()) throw precondition_error("empty atom");
        std::sort(a.begin(), a.end());
    }
    std::sort(atoms_.begin(), atoms_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    atom_of_.assign(dim_, atoms_.size());
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        for (int i : atoms_[a]) {
            if (i < 0 || static_cast<std::size_t>(i) >= dim_)
                throw precondition_error("atom index " + std::to_string(i) +
                                         " out of range for dimension " +
                                         std::to_string(dim_));
            if (atom_of_[static_cast<std::size_t>(i)] != atoms_.size())
                throw precondition_error("atoms overlap at index " + std::to_string(i));
            atom_of_[static_cast<std::size_t>(i)] = a;
        }
    }
    for (std::size_t i = 0; i < dim_; ++i)
        if (atom_of_[i] == atoms_.size())
            throw precondition_error("atoms do not cover index " + std::to_string(i));
    if (atoms_.size() > 64)
        throw bound_error("algebras beyond 64 atoms are not supported");
}

Partition Partition::singletons(std::size_t dim) {
    std::vector<std::vector<int>> atoms(dim);
    for (std::size_t i = 0; i < dim; ++i) atoms[i] = {static_cast<int>(i)};
    return Partition(dim, std::move(atoms));
}

Partition Partition::coarsest(std::size_t dim) {
    std::vector<int> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = static_cast<int>(i);
    return Partition(dim, {all});
}

Mask Partition::atom_mask(std::size_t a) const {
    return Mask::of_indices(dim_, atoms_[a]);
}

std::optional<std::uint64_t> Partition::member_bits(const Mask& p) const {
    if (p.size() != dim_) return std::nullopt;
    std::uint64_t bits = 0;
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        bool first = p[static_cast<std::size_t>(atoms_[a].front())];
        for (int i : atoms_[a])
            if (p[static_cast<std::size_t>(i)] != first) return std::nullopt;
        if (first) bits |= (std::uint64_t{1} << a);
    }
    return bits;
}

bool Partition::is_member(const Mask& p) const {
    return member_bits(p).has_value();
}

Mask Partition::member_from_bits(std::uint64_t bits) const {
    Mask m(dim_);
    for (std::size_t a = 0; a < atoms_.size(); ++a)
        if (bits & (std::uint64_t{1} << a))
            for (int i : atoms_[a]) m.set(static_cast<std::size_t>(i));
    return m;
}

std::vector<Mask> Partition::members(std::size_t max_atoms) const {
    if (atoms_.size() > max_atoms || atoms_.size() >= 63)
        throw bound_error("algebra has " + std::to_string(atoms_.size()) +
                          " atoms, enumeration bound is " + std::to_string(max_atoms));
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << atoms_.size());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << atoms_.size()); ++bits)
        out.push_back(member_from_bits(bits));
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (dim_ != coarser.dim()) return false;
    for (const auto& atom : atoms_) {
        std::size_t block = coarser.atom_of(static_cast<std::size_t>(atom.front()));
        for (int i : atom)
            if (coarser.atom_of(static_cast<std::size_t>(i)) != block) return false;
    }
    return true;
}

} // namespace riesz
