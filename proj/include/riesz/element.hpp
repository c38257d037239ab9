#pragma once

#include "riesz/rational.hpp"

#include <cstddef>
#include <vector>

namespace riesz {

// A point of the n-dimensional vector lattice with componentwise order.
// Immutable by convention: every operation returns a fresh value.
class Element {
public:
    Element() = default;
    explicit Element(std::size_t n) : coords_(n, Rat(0)) {}
    explicit Element(std::vector<Rat> coords) : coords_(std::move(coords)) {}

    static Element zero(std::size_t n) { return Element(n); }
    /// The weak order unit e = (1,...,1), also the algebraic unit.
    static Element unit(std::size_t n);
    /// Coordinate indicator vector chi_i.
    static Element indicator(std::size_t n, std::size_t i);

    std::size_t size() const { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    Rat& operator[](std::size_t i) { return coords_[i]; }

    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    const std::vector<Rat>& coords() const { return coords_; }

    bool operator==(const Element&) const = default;

private:
    std::vector<Rat> coords_;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
/// f-algebra product: componentwise, with unit(n) as identity.
Element operator*(const Element& a, const Element& b);
Element operator*(const Rat& s, const Element& a);

/// Componentwise supremum and infimum.
Element sup(const Element& a, const Element& b);
Element inf(const Element& a, const Element& b);

struct SignParts {
    Element pos; // a+
    Element neg; // a-
    Element abs; // |a| = a+ + a-
};
SignParts sign_parts(const Element& a);
Element positive_part(const Element& a);
Element negative_part(const Element& a);
Element absolute(const Element& a);

/// Componentwise partial order a <= b.
bool leq(const Element& a, const Element& b);
bool is_nonneg(const Element& a);
bool is_zero(const Element& a);

/// Max over coordinates of |a_i|.
Rat sup_norm(const Element& a);

/// Throws dimension_error unless a and b have equal length.
void require_same_dim(const Element& a, const Element& b);

} // namespace riesz
