#include "riesz/mask.hpp"
#include "riesz/errors.hpp"

namespace riesz {

Mask Mask::ones(std::size_t n) {
    return Mask(std::vector<bool>(n, true));
}

Mask Mask::of_indices(std::size_t n, const std::vector<int>& indices) {
    Mask m(n);
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= n)
            throw precondition_error("index " + std::to_string(i) + " out of range");
        m.set(static_cast<std::size_t>(i));
    }
    return m;
}

std::size_t Mask::count() const {
    std::size_t c = 0;
    for (bool b : bits_) c += b;
    return c;
}

Element Mask::to_element() const {
    Element v(size());
    for (std::size_t i = 0; i < size(); ++i)
        if (bits_[i]) v[i] = 1;
    return v;
}

std::string Mask::to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

Mask Mask::from_string(const std::string& s) {
    std::vector<bool> bits(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw precondition_error("bad mask string '" + s + "'");
        bits[i] = s[i] == '1';
    }
    return Mask(std::move(bits));
}

namespace {
void same_dim(const Mask& p, const Mask& q) {
    if (p.size() != q.size())
        throw dimension_error("mask dimension mismatch: " + std::to_string(p.size()) +
                              " vs " + std::to_string(q.size()));
}
} // namespace

Mask meet(const Mask& p, const Mask& q) {
    same_dim(p, q);
    Mask r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r.set(i, p[i] && q[i]);
    return r;
}

Mask join(const Mask& p, const Mask& q) {
    same_dim(p, q);
    Mask r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r.set(i, p[i] || q[i]);
    return r;
}

Mask complement(const Mask& p) {
    Mask r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r.set(i, !p[i]);
    return r;
}

Mask minus(const Mask& p, const Mask& q) {
    return meet(p, complement(q));
}

bool submask(const Mask& p, const Mask& q) {
    same_dim(p, q);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] && !q[i]) return false;
    return true;
}

Mask band_mask(const Element& f) {
    Mask m(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) m.set(i, f[i] != 0);
    return m;
}

Element apply_mask(const Mask& p, const Element& g) {
    if (p.size() != g.size())
        throw dimension_error("mask/element dimension mismatch");
    Element v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (p[i]) v[i] = g[i];
    return v;
}

} // namespace riesz
