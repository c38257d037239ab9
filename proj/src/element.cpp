#include "riesz/element.hpp"
#include "riesz/errors.hpp"

#include <algorithm>

namespace riesz {

Element Element::unit(std::size_t n) {
    std::vector<Rat> c(n, Rat(1));
    return Element(std::move(c));
}

Element Element::indicator(std::size_t n, std::size_t i) {
    Element v(n);
    v[i] = 1;
    return v;
}

void require_same_dim(const Element& a, const Element& b) {
    if (a.size() != b.size())
        throw dimension_error("dimension mismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
}

namespace {
template <class F>
Element zip(const Element& a, const Element& b, F f) {
    require_same_dim(a, b);
    std::vector<Rat> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = f(a[i], b[i]);
    return Element(std::move(c));
}
} // namespace

Element operator+(const Element& a, const Element& b) {
    return zip(a, b, [](const Rat& x, const Rat& y) { return x + y; });
}

Element operator-(const Element& a, const Element& b) {
    return zip(a, b, [](const Rat& x, const Rat& y) { return x - y; });
}

Element operator-(const Element& a) {
    std::vector<Rat> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return Element(std::move(c));
}

Element operator*(const Element& a, const Element& b) {
    return zip(a, b, [](const Rat& x, const Rat& y) { return x * y; });
}

Element operator*(const Rat& s, const Element& a) {
    std::vector<Rat> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
    return Element(std::move(c));
}

Element sup(const Element& a, const Element& b) {
    return zip(a, b, [](const Rat& x, const Rat& y) { return x > y ? x : y; });
}

Element inf(const Element& a, const Element& b) {
    return zip(a, b, [](const Rat& x, const Rat& y) { return x < y ? x : y; });
}

SignParts sign_parts(const Element& a) {
    SignParts p{Element(a.size()), Element(a.size()), Element(a.size())};
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0) p.pos[i] = a[i];
        else p.neg[i] = -a[i];
        p.abs[i] = p.pos[i] + p.neg[i];
    }
    return p;
}

Element positive_part(const Element& a) { return sign_parts(a).pos; }
Element negative_part(const Element& a) { return sign_parts(a).neg; }
Element absolute(const Element& a) { return sign_parts(a).abs; }

bool leq(const Element& a, const Element& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_nonneg(const Element& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x >= 0; });
}

bool is_zero(const Element& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Rat sup_norm(const Element& a) {
    Rat m(0);
    for (const Rat& x : a) {
        Rat v = x < 0 ? Rat(-x) : x;
        if (v > m) m = v;
    }
    return m;
}

} // namespace riesz
