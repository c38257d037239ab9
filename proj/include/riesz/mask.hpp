#pragma once

#include "riesz/element.hpp"

#include <string>
#include <vector>

namespace riesz {

// A component of the weak order unit e: a 0/1 vector, equivalently the band
// projection onto the coordinates it flags. Meet is the componentwise
// product, so masks multiply like idempotent elements of the f-algebra.
class Mask {
public:
    Mask() = default;
    explicit Mask(std::size_t n) : bits_(n, false) {}
    explicit Mask(std::vector<bool> bits) : bits_(std::move(bits)) {}

    static Mask zeros(std::size_t n) { return Mask(n); }
    static Mask ones(std::size_t n);
    static Mask of_indices(std::size_t n, const std::vector<int>& indices);

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, bool v = true) { bits_[i] = v; }

    std::size_t count() const;
    bool none() const { return count() == 0; }
    bool all() const { return count() == size(); }

    Element to_element() const;
    /// Bit string, index 0 leftmost, e.g. "1010".
    std::string to_string() const;
    static Mask from_string(const std::string& s);

    bool operator==(const Mask&) const = default;

private:
    std::vector<bool> bits_;
};

Mask meet(const Mask& p, const Mask& q);
Mask join(const Mask& p, const Mask& q);
/// e - p.
Mask complement(const Mask& p);
/// p \ q = p meet complement(q).
Mask minus(const Mask& p, const Mask& q);
/// p <= q as elements.
bool submask(const Mask& p, const Mask& q);

/// Support mask of f: the component implementing the band projection onto
/// the band generated by f. Multiplying by it equals applying the projection.
Mask band_mask(const Element& f);

/// Band projection applied through the mask: p * g coordinatewise.
Element apply_mask(const Mask& p, const Element& g);

} // namespace riesz
