#pragma once

#include "riesz/charge.hpp"
#include "riesz/check.hpp"

#include <optional>
#include <vector>

namespace riesz {

// A functional from the lattice into the block-constant vectors that is
// additive, homogeneous over block-constant multipliers, and bounded by a
// block-constant multiple of the 2-norm. Two input forms: a density vector
// y acting as g -> T(y*g), or a generic matrix validated to have the same
// shape of action. Every valid functional is represented by a unique
// density vector, recoverable coordinatewise.
class Functional {
public:
    static Functional density(Expectation T, Element y);
    /// Validates range (every column image block-constant) and homogeneity
    /// (columns supported inside their own block); throws functional_error
    /// with a witness otherwise.
    static Functional matrix(Expectation T, std::vector<std::vector<Rat>> rows);

    const Expectation& expectation() const { return T_; }
    std::size_t dim() const { return T_.dim(); }
    bool is_density_form() const { return y_.has_value(); }

    Element evaluate(const Element& g) const;

    /// Block value of the functional at the i-th coordinate indicator.
    const Rat& indicator_value(std::size_t i) const { return c_[i]; }

    /// The unique density vector y with evaluate(g) == T.apply(y*g):
    /// y_i = indicator_value(i) * block_weight(i) / w_i. Verified on all
    /// coordinate indicators before returning.
    Element exact_represent() const;

    /// Squared operator norm: T((exact representer)^2). Dominates the
    /// functional in the squared Cauchy-Schwarz sense.
    Element norm_squared() const;

    /// Canonical strongly positive component of the induced charge on the
    /// full component algebra (singleton atoms, values at indicators).
    Mask positive_component() const;

    /// Tie-inclusive strongly positive component of (this - t*T): flags the
    /// coordinates whose shifted indicator charge is >= 0.
    Mask level_component(const Rat& t) const;

    /// Dyadic approximant at resolution 2^-depth: the level-set sum for the
    /// positive side minus the one for the negated functional. Differs from
    /// exact_represent() by less than 2^-depth per coordinate, one-sidedly
    /// on each sign band.
    Element dyadic_represent(int depth) const;

    Functional negated() const;

private:
    Functional(Expectation T, std::optional<Element> y,
               std::optional<std::vector<std::vector<Rat>>> rows);

    /// Charge of the shifted functional this - t*T over singleton atoms.
    Charge shifted_charge(const Rat& t) const;

    /// Sum of k/2^depth over the tie-inclusive level sets of this
    /// functional; the approximant of the positive part of the representer.
    Element level_sum(int depth) const;

    Expectation T_;
    std::optional<Element> y_;
    std::optional<std::vector<std::vector<Rat>>> rows_;
    std::vector<Rat> c_; // indicator block values
};

/// Round-trip, norm-equality, additivity and homogeneity checks for the
/// correspondence y <-> (g -> T(y*g)) at one y. Deterministic.
std::vector<Check> bijection_report(const Expectation& T, const Element& y);

} // namespace riesz
