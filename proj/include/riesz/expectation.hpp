#pragma once

#include "riesz/partition.hpp"

#include <vector>

namespace riesz {

// A strictly positive conditional expectation operator: weighted averaging
// over the blocks of a partition. Its range is the block-constant vectors,
// itself an f-algebra. Strict positivity comes from the weights being > 0.
class Expectation {
public:
    Expectation(Partition blocks, std::vector<Rat> weights);

    std::size_t dim() const { return blocks_.dim(); }
    const Partition& blocks() const { return blocks_; }
    const std::vector<Rat>& weights() const { return weights_; }
    /// Sum of weights over the block containing coordinate i.
    const Rat& block_weight(std::size_t i) const;
    /// max_i (block weight / w_i); >= 1, controls dyadic error constants.
    Rat weight_ratio() const;

    /// Block-weighted average of f; a projection onto the block-constant
    /// vectors with T e = e.
    Element apply(const Element& f) const;

    /// Membership in the range, i.e. constant on every block.
    bool in_range(const Element& f) const;

    /// T|f|: the vector-valued 1-norm. Zero only at f = 0.
    Element norm1(const Element& f) const;

    /// T(f^2): the squared vector-valued 2-norm, kept squared so everything
    /// stays rational.
    Element norm2_squared(const Element& f) const;

    struct HolderCheck {
        Element lhs_squared; // (T|fg|)^2
        Element rhs;         // T(f^2) * T(g^2)
        bool holds = false;  // lhs_squared <= rhs componentwise
    };
    /// The Cauchy-Schwarz bound in squared form.
    HolderCheck holder(const Element& f, const Element& g) const;

    bool operator==(const Expectation&) const = default;

private:
    Partition blocks_;
    std::vector<Rat> weights_;
    std::vector<Rat> block_total_; // per block, indexed like atoms
};

} // namespace riesz
