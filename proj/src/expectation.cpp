#include "riesz/expectation.hpp"
#include "riesz/errors.hpp"

namespace riesz {

Expectation::Expectation(Partition blocks, std::vector<Rat> weights)
    : blocks_(std::move(blocks)), weights_(std::move(weights)) {
    if (weights_.size() != blocks_.dim())
        throw dimension_error("need one weight per coordinate");
    for (const Rat& w : weights_)
        if (w <= 0) throw precondition_error("weights must be strictly positive");
    block_total_.assign(blocks_.atom_count(), Rat(0));
    for (std::size_t i = 0; i < weights_.size(); ++i)
        block_total_[blocks_.atom_of(i)] += weights_[i];
}

const Rat& Expectation::block_weight(std::size_t i) const {
    return block_total_[blocks_.atom_of(i)];
}

Rat Expectation::weight_ratio() const {
    Rat best(1);
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        Rat r = block_weight(i) / weights_[i];
        if (r > best) best = r;
    }
    return best;
}

Element Expectation::apply(const Element& f) const {
    if (f.size() != dim()) throw dimension_error("operator/element dimension mismatch");
    std::vector<Rat> block_sum(blocks_.atom_count(), Rat(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        block_sum[blocks_.atom_of(i)] += weights_[i] * f[i];
    Element out(dim());
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::size_t b = blocks_.atom_of(i);
        out[i] = block_sum[b] / block_total_[b];
    }
    return out;
}

bool Expectation::in_range(const Element& f) const {
    if (f.size() != dim()) return false;
    for (const auto& block : blocks_.atoms()) {
        const Rat& first = f[static_cast<std::size_t>(block.front())];
        for (int i : block)
            if (f[static_cast<std::size_t>(i)] != first) return false;
    }
    return true;
}

Element Expectation::norm1(const Element& f) const {
    return apply(absolute(f));
}

Element Expectation::norm2_squared(const Element& f) const {
    return apply(f * f);
}

Expectation::HolderCheck Expectation::holder(const Element& f, const Element& g) const {
    HolderCheck c;
    Element t = apply(absolute(f * g));
    c.lhs_squared = t * t;
    c.rhs = norm2_squared(f) * norm2_squared(g);
    c.holds = leq(c.lhs_squared, c.rhs);
    return c;
}

} // namespace riesz
