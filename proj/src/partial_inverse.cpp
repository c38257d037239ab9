#include "riesz/partial_inverse.hpp"
#include "riesz/errors.hpp"

#include <algorithm>
#include <map>

namespace riesz {

namespace {

void require_nonneg(const Element& f) {
    if (!is_nonneg(f))
        throw precondition_error("ladder construction needs a nonnegative element");
}

void require_depth(int depth) {
    if (depth < 1) throw precondition_error("depth must be at least 1");
}

// Cell index of a positive value v at resolution 2^-n: the j with
// v in (j/2^n, (j+1)/2^n], i.e. j = ceil(v * 2^n) - 1.
Int cell_of(const Rat& v, int depth) {
    return ceil_rat(v * pow2(depth)) - 1;
}

} // namespace

Mask Ladder::mask_at(const Int& level) const {
    for (const auto& [j, m] : cells)
        if (j == level) return m;
    return Mask::zeros(support.size());
}

Element canonical_inverse(const Element& g) {
    Element h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) h[i] = Rat(1) / g[i];
    return h;
}

Ladder spectral_masks(const Element& f, int depth) {
    require_nonneg(f);
    require_depth(depth);
    Ladder ladder;
    ladder.depth = depth;
    ladder.support = band_mask(f);

    std::map<Int, Mask> cells;
    Int top(0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        Int j = cell_of(f[i], depth);
        auto [it, fresh] = cells.try_emplace(j, Mask(f.size()));
        it->second.set(i);
        if (j + 1 > top) top = j + 1;
    }
    ladder.truncation = top;
    ladder.cells.assign(cells.begin(), cells.end());
    return ladder;
}

std::pair<Element, Element> dyadic_bounds(const Element& f, int depth) {
    Ladder ladder = spectral_masks(f, depth);
    Element lower(f.size()), upper(f.size());
    Rat step = pow2(-depth);
    for (const auto& [j, m] : ladder.cells) {
        Rat base = Rat(j) * step;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (!m[i]) continue;
            lower[i] = base;
            upper[i] = base + step;
        }
    }
    return {lower, upper};
}

Element spectral_inverse(const Element& f, int depth) {
    Ladder ladder = spectral_masks(f, depth);
    Element h(f.size());
    Rat scale = pow2(depth);
    for (const auto& [j, m] : ladder.cells) {
        Rat v = scale / Rat(j + 1);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (m[i]) h[i] = v;
    }
    return h;
}

Element small_cell_correction(const Element& f, int depth) {
    require_nonneg(f);
    require_depth(depth);

    // Mask of coordinates with 0 < f_i <= 2^-j.
    auto small_mask = [&](int j) {
        Mask m(f.size());
        Rat bound = pow2(-j);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] != 0 && f[i] <= bound) m.set(i);
        return m;
    };

    Element out(f.size());
    Mask cur = small_mask(depth);
    for (int j = depth; !cur.none(); ++j) {
        Mask next = small_mask(j + 1);
        Rat term = pow2(j);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (cur[i] && !next[i]) out[i] = term;
        cur = next;
    }
    return out;
}

Element spectral_inverse_upper(const Element& f, int depth) {
    Ladder ladder = spectral_masks(f, depth);
    Element h = small_cell_correction(f, depth);
    Rat scale = pow2(depth);
    for (const auto& [j, m] : ladder.cells) {
        if (j == 0) continue;
        Rat v = scale / Rat(j);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (m[i]) h[i] = v;
    }
    return h;
}

} // namespace riesz
