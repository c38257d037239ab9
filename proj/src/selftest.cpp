#include "riesz/selftest.hpp"
#include "riesz/errors.hpp"
#include "riesz/partial_inverse.hpp"

#include <algorithm>
#include <map>

namespace riesz {

Element random_element(Rng& rng, std::size_t n, long lo, long hi, long dmax) {
    Element v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.rat(lo, hi, dmax);
    return v;
}

Element random_nonneg_element(Rng& rng, std::size_t n, long hi, long dmax) {
    Element v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.rat(0, hi, dmax);
    return v;
}

Partition random_partition(Rng& rng, std::size_t n) {
    std::size_t buckets = static_cast<std::size_t>(rng.range(1, static_cast<long>(n)));
    std::map<std::size_t, std::vector<int>> groups;
    for (std::size_t i = 0; i < n; ++i)
        groups[rng.below(buckets)].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> atoms;
    for (auto& [unused, g] : groups) atoms.push_back(std::move(g));
    return Partition(n, std::move(atoms));
}

Partition random_refinement(Rng& rng, const Partition& coarse) {
    std::vector<std::vector<int>> atoms;
    for (const auto& block : coarse.atoms()) {
        std::size_t buckets = static_cast<std::size_t>(rng.range(1, static_cast<long>(block.size())));
        std::map<std::size_t, std::vector<int>> groups;
        for (int i : block) groups[rng.below(buckets)].push_back(i);
        for (auto& [unused, g] : groups) atoms.push_back(std::move(g));
    }
    return Partition(coarse.dim(), std::move(atoms));
}

Expectation random_expectation(Rng& rng, std::size_t n) {
    std::vector<Rat> weights(n);
    for (auto& w : weights) w = rng.rat(1, 9, 4);
    return Expectation(random_partition(rng, n), std::move(weights));
}

Charge random_charge(Rng& rng, std::size_t n) {
    Partition g = random_partition(rng, n);
    Partition b = random_refinement(rng, g);
    std::vector<Rat> values(b.atom_count());
    for (auto& v : values) v = rng.rat(-6, 6, 3);
    return Charge(std::move(b), std::move(g), std::move(values));
}

namespace {

// One aggregated row per property: counts trials, keeps the first failure.
class Suite {
public:
    Suite(std::string name, std::vector<Check>& out) : name_(std::move(name)), out_(out) {}

    void record(const std::string& prop, bool ok, const std::string& witness) {
        Row& r = rows_[prop];
        ++r.count;
        if (!ok && r.pass) {
            r.pass = false;
            r.witness = witness;
        }
    }

    ~Suite() {
        for (auto& [prop, r] : rows_)
            out_.push_back({name_ + "." + prop, std::to_string(r.count) + " cases", r.pass,
                            r.witness});
    }

private:
    struct Row {
        std::uint64_t count = 0;
        bool pass = true;
        std::string witness;
    };
    std::string name_;
    std::vector<Check>& out_;
    std::map<std::string, Row> rows_;
};

std::string trial_tag(std::uint64_t t) { return "trial " + std::to_string(t); }

void lattice_trial(Rng& rng, Suite& s, std::uint64_t t) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 12));
    Element a = random_element(rng, n), b = random_element(rng, n);

    s.record("modular-identity", sup(a, b) + inf(a, b) == a + b, trial_tag(t));

    auto parts = sign_parts(a);
    s.record("sign-decomposition",
             parts.pos - parts.neg == a && inf(parts.pos, parts.neg) == Element::zero(n) &&
                 parts.abs == parts.pos + parts.neg,
             trial_tag(t));

    Partition alg = random_partition(rng, n);
    auto members = alg.members();
    Mask p = members[rng.below(members.size())];
    Mask q = members[rng.below(members.size())];
    s.record("mask-closure",
             alg.is_member(meet(p, q)) && alg.is_member(join(p, q)) &&
                 alg.is_member(complement(p)),
             trial_tag(t));
    s.record("meet-is-product", meet(p, q).to_element() == p.to_element() * q.to_element(),
             trial_tag(t));

    Element f = random_element(rng, n), g = random_element(rng, n);
    Element masked = band_mask(f).to_element() * g;
    bool band_ok = true;
    for (std::size_t i = 0; i < n; ++i)
        band_ok &= f[i] != 0 ? masked[i] == g[i] : masked[i] == 0;
    s.record("band-mask-action", band_ok, trial_tag(t));

    if (alg.atom_count() <= 10) {
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < members.size() && distinct; ++i)
            distinct = !(members[i] == members[i + 1]);
        s.record("member-enumeration",
                 members.size() == (std::size_t{1} << alg.atom_count()) && distinct,
                 trial_tag(t));
    }

    s.record("refinement-direction",
             Partition::singletons(n).refines(alg) && alg.refines(Partition::coarsest(n)),
             trial_tag(t));
}

void expectation_trial(Rng& rng, Suite& s, std::uint64_t t) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 12));
    Expectation T = random_expectation(rng, n);
    Element f = random_element(rng, n), g = random_element(rng, n);

    s.record("unit-fixed", T.apply(Element::unit(n)) == Element::unit(n), trial_tag(t));
    s.record("projection", T.apply(T.apply(f)) == T.apply(f), trial_tag(t));

    Element r = T.apply(random_element(rng, n)); // arbitrary range vector
    s.record("averaging", T.apply(r * g) == r * T.apply(g), trial_tag(t));

    Element fp = random_nonneg_element(rng, n);
    s.record("strict-positivity", is_zero(fp) || !is_zero(T.norm1(fp)), trial_tag(t));

    s.record("norm1-homogeneity", T.norm1(r * f) == absolute(r) * T.norm1(f), trial_tag(t));
    s.record("norm2-homogeneity", T.norm2_squared(r * f) == r * r * T.norm2_squared(f),
             trial_tag(t));

    s.record("holder", T.holder(f, g).holds, trial_tag(t));
    auto eq = T.holder(f, f);
    s.record("holder-equality-at-diagonal", eq.lhs_squared == eq.rhs, trial_tag(t));
}

// Exhaustive supremum of the charge below q, straight over all members.
Element exhaustive_supremum(const Charge& psi, const Mask& q) {
    Element best(psi.dim()); // contains psi(0) = 0
    for (const Mask& p : psi.algebra().members())
        if (submask(p, q)) best = sup(best, psi.evaluate(p));
    return best;
}

void charge_trial(Rng& rng, Suite& s, std::uint64_t t) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 12));
    Charge psi = random_charge(rng, n);
    auto members = psi.algebra().members();
    Mask q = members[rng.below(members.size())];
    Mask p = members[rng.below(members.size())];

    // Homogeneity over members of the g-block algebra and additivity.
    {
        auto gmembers = psi.g_blocks().members();
        Mask k = gmembers[rng.below(gmembers.size())];
        s.record("g-homogeneity",
                 psi.evaluate(meet(p, k)) == k.to_element() * psi.evaluate(p), trial_tag(t));
    }
    Mask disj = meet(p, complement(q));
    s.record("additivity",
             psi.evaluate(join(disj, q)) == psi.evaluate(disj) + psi.evaluate(q), trial_tag(t));

    if (psi.atom_count() <= 10)
        s.record("supremum-exhaustive", psi.charge_supremum(q) == exhaustive_supremum(psi, q),
                 trial_tag(t));

    for (const Rat& theta : {Rat(3, 2), Rat(2), Rat(3)}) {
        Mask m = psi.maximal_member(q, theta);
        Element sup_q = psi.charge_supremum(q);
        Element at_m = psi.evaluate(m);
        s.record("envelope-sandwich",
                 submask(m, q) && leq(sup_q, theta * at_m) && leq(theta * at_m, theta * sup_q),
                 trial_tag(t) + " theta " + format_rat(theta));
        s.record("envelope-defect-disjoint",
                 is_zero(positive_part(sup_q - theta * at_m) * m.to_element()),
                 trial_tag(t) + " theta " + format_rat(theta));
        // Maximality: no single atom extension survives, and none is needed.
        bool maximal = true;
        for (std::size_t a = 0; a < psi.atom_count() && maximal; ++a) {
            Mask am = psi.algebra().atom_mask(a);
            if (!submask(am, q) || submask(am, m)) continue;
            Mask ext = join(m, am);
            Element at_ext = psi.evaluate(ext);
            maximal = !leq(ext.to_element() * sup_q, theta * at_ext);
        }
        s.record("envelope-maximality", maximal, trial_tag(t) + " theta " + format_rat(theta));
    }

    {
        Mask u = psi.positive_piece(q);
        Element at_u = psi.evaluate(u);
        Element sup_q = psi.charge_supremum(q);
        s.record("positive-piece",
                 submask(u, meet(band_mask(at_u), q)) && is_nonneg(at_u) && leq(at_u, sup_q) &&
                     leq(sup_q, Rat(2) * at_u),
                 trial_tag(t));
    }

    Element at_q = psi.evaluate(q);
    if (leq(at_q, Element::zero(n)) && !is_zero(at_q)) {
        Mask v = psi.strongly_negative_witness(q);
        bool strongly_negative = true;
        if (psi.atom_count() <= 10) {
            for (const Mask& r : members)
                if (submask(r, v)) strongly_negative &= leq(psi.evaluate(r), Element::zero(n));
        } else {
            strongly_negative = is_zero(psi.charge_supremum(v));
        }
        s.record("strongly-negative-witness",
                 submask(v, q) && leq(psi.evaluate(v), at_q) && strongly_negative, trial_tag(t));
    }
    if (!is_zero(negative_part(at_q))) {
        Mask v = psi.negative_part_witness(q);
        s.record("negative-part-witness",
                 submask(v, q) && is_zero(psi.charge_supremum(v)) &&
                     leq(psi.evaluate(v), -negative_part(at_q)),
                 trial_tag(t));
    }

    Mask hq = psi.hahn_jordan();
    bool split_ok = true;
    for (std::size_t a = 0; a < psi.atom_count(); ++a) {
        bool inside = submask(psi.algebra().atom_mask(a), hq);
        split_ok &= inside ? psi.atom_value(a) >= 0 : psi.atom_value(a) <= 0;
    }
    s.record("hahn-atom-split", split_ok, trial_tag(t));
    if (psi.atom_count() <= 8) {
        auto sols = psi.brute_force_hahn(8);
        bool member = std::any_of(sols.begin(), sols.end(), [&](const Mask& m) { return m == hq; });
        bool maximal_in = std::any_of(sols.begin(), sols.end(),
                                      [&](const Mask& m) { return m == psi.strongly_positive_maximal(); });
        s.record("hahn-in-oracle-set", member && maximal_in, trial_tag(t));
    }

    // Density-induced charge agrees with applying the operator directly.
    Expectation T(psi.g_blocks(), [&] {
        std::vector<Rat> w(n);
        for (auto& x : w) x = rng.rat(1, 9, 4);
        return w;
    }());
    Element f = random_element(rng, n);
    Charge from_f = Charge::from_density(T, f, psi.algebra());
    s.record("density-coherence", from_f.evaluate(p) == T.apply(p.to_element() * f),
             trial_tag(t));
    Mask qf = from_f.hahn_jordan();
    s.record("density-decomposition",
             is_nonneg(from_f.evaluate(meet(p, qf))) &&
                 leq(from_f.evaluate(meet(p, complement(qf))), Element::zero(n)),
             trial_tag(t));
}

void inverse_trial(Rng& rng, Suite& s, std::uint64_t t) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 12));
    Element g = random_element(rng, n);

    Element h = canonical_inverse(g);
    s.record("product-is-band", g * h == band_mask(g).to_element(), trial_tag(t));
    s.record("involution", canonical_inverse(h) == apply_mask(band_mask(g), g), trial_tag(t));
    Element f = random_nonneg_element(rng, n, 9, 6);
    s.record("positivity", is_nonneg(canonical_inverse(f)), trial_tag(t));

    int depth = static_cast<int>(rng.range(1, 8));
    Ladder lad = spectral_masks(f, depth);
    Mask seen(n);
    bool disjoint = true;
    for (const auto& [lvl, m] : lad.cells) {
        disjoint &= meet(m, seen).none();
        seen = join(seen, m);
    }
    s.record("ladder-partition", disjoint && seen == band_mask(f), trial_tag(t));

    auto [lo, hi] = dyadic_bounds(f, depth);
    s.record("dyadic-sandwich",
             leq(lo, f) && leq(f, hi) &&
                 hi - lo == pow2(-depth) * band_mask(f).to_element(),
             trial_tag(t));
    auto [lo2, hi2] = dyadic_bounds(f, depth + 1);
    s.record("dyadic-monotone", leq(lo, lo2) && leq(hi2, hi), trial_tag(t));

    Element inv = canonical_inverse(f);
    Element lower = spectral_inverse(f, depth);
    Element upper = spectral_inverse_upper(f, depth);
    s.record("inverse-lower-bound", leq(lower, inv), trial_tag(t));
    s.record("inverse-companion-order", leq(lower, upper), trial_tag(t));
    s.record("inverse-chain",
             band_mask(f).to_element() - pow2(-depth) * lower == lower * lo &&
                 leq(lower * lo, lower * f) && lower * hi == band_mask(f).to_element(),
             trial_tag(t));

    // Error on the support falls like 2^-depth once cells clear level zero.
    Rat min_pos(0);
    for (std::size_t i = 0; i < n; ++i)
        if (f[i] > 0 && (min_pos == 0 || f[i] < min_pos)) min_pos = f[i];
    if (min_pos > 0) {
        Rat prev_err(-1);
        bool monotone = true, bounded = true;
        Rat hmax(0);
        for (std::size_t i = 0; i < n; ++i)
            if (inv[i] > hmax) hmax = inv[i];
        for (int d = 1; d <= 8; ++d) {
            Element approx = spectral_inverse(f, d);
            Rat err(0);
            for (std::size_t i = 0; i < n; ++i) {
                if (f[i] == 0) continue;
                Rat dd = inv[i] - approx[i];
                if (dd < 0) dd = -dd;
                if (dd > err) err = dd;
            }
            if (prev_err >= 0) monotone &= err <= prev_err;
            prev_err = err;
            if (pow2(-d) < min_pos) bounded &= err <= pow2(-d + 1) * hmax * hmax;
        }
        s.record("inverse-convergence", monotone && bounded, trial_tag(t));
    }
}

void functional_trial(Rng& rng, Suite& s, std::uint64_t t) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 12));
    Expectation T = random_expectation(rng, n);
    Element y = random_element(rng, n);
    Functional fy = Functional::density(T, y);

    s.record("round-trip", fy.exact_represent() == y, trial_tag(t));
    s.record("norm-equality", fy.norm_squared() == T.norm2_squared(y), trial_tag(t));

    Element g = random_element(rng, n);
    Element val = fy.evaluate(g);
    s.record("strong-bound-squared", leq(val * val, fy.norm_squared() * T.norm2_squared(g)),
             trial_tag(t));

    Element z = random_element(rng, n);
    Element chi = Element::indicator(n, rng.below(n));
    s.record("map-additivity",
             Functional::density(T, y + z).evaluate(chi) ==
                 fy.evaluate(chi) + Functional::density(T, z).evaluate(chi),
             trial_tag(t));
    Element r = T.apply(random_element(rng, n));
    s.record("map-homogeneity",
             Functional::density(T, r * y).evaluate(chi) == r * fy.evaluate(chi), trial_tag(t));

    Mask qp = fy.positive_component();
    if (n <= 8) {
        bool two_sided = true;
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
            Mask p(n);
            for (std::size_t i = 0; i < n; ++i)
                if (bits & (std::uint32_t{1} << i)) p.set(i);
            two_sided &= is_nonneg(fy.evaluate(meet(p, qp).to_element())) &&
                         leq(fy.evaluate(meet(p, complement(qp)).to_element()), Element::zero(n));
        }
        s.record("positive-component-two-sided", two_sided, trial_tag(t));
    }

    Rat ratio = T.weight_ratio();
    Element prev_err_pos(n), prev_err_neg(n);
    bool first = true, bounded = true, monotone = true;
    for (int d = 1; d <= 6; ++d) {
        Element approx = fy.dyadic_represent(d);
        Element err = y - approx;
        bounded &= sup_norm(err) <= ratio * pow2(-d);
        // On each sign band the approximant approaches one-sidedly.
        Element err_pos(n), err_neg(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i] > 0) err_pos[i] = err[i];
            if (y[i] < 0) err_neg[i] = -err[i];
        }
        if (!first)
            monotone &= leq(err_pos, prev_err_pos) && leq(err_neg, prev_err_neg) &&
                        is_nonneg(err_pos) && is_nonneg(err_neg);
        prev_err_pos = err_pos;
        prev_err_neg = err_neg;
        first = false;
    }
    s.record("dyadic-error-bound", bounded, trial_tag(t));
    s.record("dyadic-error-monotone", monotone, trial_tag(t));

    // Matrix route: the matrix of g -> T(y*g) validates and agrees.
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        Element col = T.apply(y * Element::indicator(n, i));
        for (std::size_t j = 0; j < n; ++j) rows[j][i] = col[j];
    }
    Functional fm = Functional::matrix(T, rows);
    bool agree = fm.exact_represent() == y;
    for (std::size_t i = 0; i < n && agree; ++i) {
        Element ind = Element::indicator(n, i);
        agree &= fm.evaluate(ind) == fy.evaluate(ind);
    }
    s.record("matrix-form-agreement", agree, trial_tag(t));
}

} // namespace

void selftest_campaign(std::uint64_t seed, std::uint64_t trials, std::vector<Check>& out) {
    {
        Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
        Suite s("lattice", out);
        for (std::uint64_t t = 0; t < trials; ++t) lattice_trial(rng, s, t);
    }
    {
        Rng rng(seed ^ 0xbf58476d1ce4e5b9ull);
        Suite s("expectation", out);
        for (std::uint64_t t = 0; t < trials; ++t) expectation_trial(rng, s, t);
    }
    {
        Rng rng(seed ^ 0x94d049bb133111ebull);
        Suite s("charge", out);
        for (std::uint64_t t = 0; t < trials; ++t) charge_trial(rng, s, t);
    }
    {
        Rng rng(seed ^ 0xd6e8feb86659fd93ull);
        Suite s("partial-inverse", out);
        for (std::uint64_t t = 0; t < trials; ++t) inverse_trial(rng, s, t);
    }
    {
        Rng rng(seed ^ 0xa0761d6478bd642full);
        Suite s("functional", out);
        for (std::uint64_t t = 0; t < trials; ++t) functional_trial(rng, s, t);
    }
}

} // namespace riesz
