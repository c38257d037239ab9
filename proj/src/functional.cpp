#include "riesz/functional.hpp"
#include "riesz/errors.hpp"

#include <algorithm>
#include <map>

namespace riesz {

namespace {
void internal_check(bool ok, const char* what) {
    if (!ok) throw error(std::string("internal invariant violated: ") + what);
}
} // namespace

Functional::Functional(Expectation T, std::optional<Element> y,
                       std::optional<std::vector<std::vector<Rat>>> rows)
    : T_(std::move(T)), y_(std::move(y)), rows_(std::move(rows)) {
    c_.resize(T_.dim());
    if (y_) {
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] = T_.weights()[i] * (*y_)[i] / T_.block_weight(i);
    } else {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            std::size_t row = static_cast<std::size_t>(
                T_.blocks().atoms()[T_.blocks().atom_of(i)].front());
            c_[i] = (*rows_)[row][i];
        }
    }
}

Functional Functional::density(Expectation T, Element y) {
    if (y.size() != T.dim()) throw dimension_error("density/operator dimension mismatch");
    return Functional(std::move(T), std::move(y), std::nullopt);
}

Functional Functional::matrix(Expectation T, std::vector<std::vector<Rat>> rows) {
    const std::size_t n = T.dim();
    if (rows.size() != n) throw dimension_error("matrix must be n x n");
    for (const auto& r : rows)
        if (r.size() != n) throw dimension_error("matrix must be n x n");

    // Column i is the image of the i-th indicator; it must be
    // block-constant.
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& block : T.blocks().atoms()) {
            const Rat& first = rows[static_cast<std::size_t>(block.front())][i];
            for (int j : block) {
                if (rows[static_cast<std::size_t>(j)][i] != first)
                    throw functional_error(
                        functional_error::kind_t::range,
                        "image of an indicator is not block-constant",
                        "column " + std::to_string(i) + ", rows " +
                            std::to_string(block.front()) + " and " + std::to_string(j));
            }
        }
    }
    // Homogeneity over block indicators forces column i to vanish outside
    // the block of i.
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t home = T.blocks().atom_of(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (T.blocks().atom_of(j) != home && rows[j][i] != 0)
                throw functional_error(
                    functional_error::kind_t::homogeneity,
                    "indicator image leaks outside its block",
                    "column " + std::to_string(i) + ", coordinate " + std::to_string(j));
        }
    }
    return Functional(std::move(T), std::nullopt, std::move(rows));
}

Element Functional::evaluate(const Element& g) const {
    if (g.size() != dim()) throw dimension_error("argument dimension mismatch");
    if (y_) return T_.apply(*y_ * g);
    Element out(dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        Rat s(0);
        for (std::size_t i = 0; i < dim(); ++i) s += (*rows_)[r][i] * g[i];
        out[r] = s;
    }
    return out;
}

Element Functional::exact_represent() const {
    Element y(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        y[i] = c_[i] * T_.block_weight(i) / T_.weights()[i];
    for (std::size_t i = 0; i < dim(); ++i) {
        Element chi = Element::indicator(dim(), i);
        internal_check(evaluate(chi) == T_.apply(y * chi),
                       "representer disagrees with the functional on an indicator");
    }
    return y;
}

Element Functional::norm_squared() const {
    return T_.norm2_squared(exact_represent());
}

Charge Functional::shifted_charge(const Rat& t) const {
    std::vector<Rat> values(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        values[i] = c_[i] - t * T_.weights()[i] / T_.block_weight(i);
    return Charge(Partition::singletons(dim()), T_.blocks(), std::move(values));
}

Mask Functional::positive_component() const {
    return shifted_charge(Rat(0)).hahn_jordan();
}

Mask Functional::level_component(const Rat& t) const {
    return shifted_charge(t).strongly_positive_maximal();
}

Functional Functional::negated() const {
    if (y_) return density(T_, -*y_);
    auto rows = *rows_;
    for (auto& r : rows)
        for (auto& v : r) v = -v;
    return Functional(T_, std::nullopt, std::move(rows));
}

Element Functional::level_sum(int depth) const {
    if (depth < 1) throw precondition_error("depth must be at least 1");
    const Rat step = pow2(-depth);

    // Levels that can carry a nonempty set: floor of the per-coordinate
    // threshold ratio at this resolution. Intermediate levels have empty
    // sets and contribute nothing.
    std::map<Int, bool> levels;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (c_[i] < 0) continue;
        Rat ratio = c_[i] * T_.block_weight(i) / T_.weights()[i];
        levels[floor_rat(ratio * pow2(depth))] = true;
    }
    Element s(dim());
    if (levels.empty()) {
        internal_check(level_component(Rat(0)).none(), "empty level table but nonempty base component");
        return s;
    }

    // Termination guard from the squared-norm bound: every level index must
    // stay under 2^depth * (1 + ceil sqrt of the largest norm-squared block
    // value times the weight ratio).
    Rat norm_bound(0);
    for (const Rat& v : norm_squared()) norm_bound = std::max(norm_bound, v);
    Int cap = (Int(1) << depth) * (1 + isqrt_ceil(ceil_rat(T_.weight_ratio() * norm_bound))) + 1;

    Mask seen(dim());
    Mask base = level_component(Rat(0));
    for (const auto& [k, unused] : levels) {
        internal_check(k < cap, "level index exceeded the norm-derived cap");
        Mask upper = level_component(Rat(k) * step);
        Mask lower_gone = complement(level_component(Rat(k + 1) * step));
        Mask h = meet(upper, lower_gone);
        internal_check(meet(h, seen).none(), "level sets overlap");
        seen = join(seen, h);
        s = s + (Rat(k) * step) * h.to_element();
    }
    internal_check(seen == base, "level sets do not exhaust the base component");
    internal_check(level_component(Rat(levels.rbegin()->first + 1) * step).none(),
                   "component above the top level should be empty");
    return s;
}

Element Functional::dyadic_represent(int depth) const {
    Functional neg = negated();
    // The two tie-inclusive components overlap exactly on the null
    // coordinates.
    Mask both = meet(level_component(Rat(0)), neg.level_component(Rat(0)));
    for (std::size_t i = 0; i < dim(); ++i)
        internal_check(!both[i] || c_[i] == 0, "components overlap off the null set");
    Element out = level_sum(depth) - neg.level_sum(depth);
    internal_check(submask(band_mask(positive_part(out)), level_component(Rat(0))),
                   "positive part of the approximant leaks outside its component");
    return out;
}

std::vector<Check> bijection_report(const Expectation& T, const Element& y) {
    std::vector<Check> out;
    Functional fy = Functional::density(T, y);
    const std::size_t n = T.dim();

    out.push_back({"represent-round-trip", "density vector", fy.exact_represent() == y, ""});
    out.push_back({"norm-equality-squared", "density vector",
                   fy.norm_squared() == T.norm2_squared(y), ""});

    bool additive = true;
    std::string witness;
    std::vector<Element> others = {Element::unit(n), y};
    for (std::size_t i = 0; i < n; ++i) others.push_back(Element::indicator(n, i));
    for (std::size_t zi = 0; zi < others.size() && additive; ++zi) {
        Functional fz = Functional::density(T, others[zi]);
        Functional fsum = Functional::density(T, y + others[zi]);
        for (std::size_t i = 0; i < n && additive; ++i) {
            Element chi = Element::indicator(n, i);
            if (fsum.evaluate(chi) != fy.evaluate(chi) + fz.evaluate(chi)) {
                additive = false;
                witness = "pair " + std::to_string(zi) + ", indicator " + std::to_string(i);
            }
        }
    }
    out.push_back({"additivity-on-indicators",
                   std::to_string(others.size()) + " companion vectors", additive, witness});

    bool homogeneous = true;
    witness.clear();
    for (std::size_t b = 0; b < T.blocks().atom_count() && homogeneous; ++b) {
        Element r = T.blocks().atom_mask(b).to_element();
        Functional fry = Functional::density(T, r * y);
        for (std::size_t i = 0; i < n && homogeneous; ++i) {
            Element chi = Element::indicator(n, i);
            if (fry.evaluate(chi) != r * fy.evaluate(chi)) {
                homogeneous = false;
                witness = "block " + std::to_string(b) + ", indicator " + std::to_string(i);
            }
        }
    }
    out.push_back({"homogeneity-over-blocks",
                   std::to_string(T.blocks().atom_count()) + " block multipliers", homogeneous,
                   witness});
    return out;
}

} // namespace riesz
