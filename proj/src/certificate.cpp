#include "riesz/certificate.hpp"
#include "riesz/errors.hpp"
#include "riesz/selftest.hpp"

#include <sstream>

namespace riesz {

using nlohmann::ordered_json;

nlohmann::ordered_json element_json(const Element& v) {
    ordered_json arr = ordered_json::array();
    for (const Rat& x : v) arr.push_back(format_rat(x));
    return arr;
}

ordered_json Certificate::to_json() const {
    ordered_json j;
    j["command"] = command;
    j["arguments"] = arguments;
    j["instanceDigest"] = instance_digest;
    j["outputs"] = outputs;
    ordered_json rows = ordered_json::array();
    for (const Check& c : checks) {
        ordered_json row;
        row["name"] = c.name;
        row["scope"] = c.scope;
        row["pass"] = c.pass;
        if (!c.pass) row["witness"] = c.witness;
        rows.push_back(std::move(row));
    }
    j["checks"] = rows;
    j["allPassed"] = all_passed();
    return j;
}

std::string Certificate::pretty() const {
    std::ostringstream os;
    os << command << "  [" << instance_digest << "]\n";
    for (auto it = outputs.begin(); it != outputs.end(); ++it)
        os << "  " << it.key() << " = " << it.value().dump() << "\n";
    for (const Check& c : checks) {
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.scope << ")";
        if (!c.pass) os << "  witness: " << c.witness;
        os << "\n";
    }
    os << (all_passed() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

namespace {

struct Ctx {
    Rat theta = Rat(2);
    int depth = 8;
    bool oracle = false;
    std::size_t oracle_bound = 12;
};

Ctx make_ctx(const Instance& inst, const RunOptions& opts) {
    Ctx c;
    c.theta = opts.theta.value_or(inst.options.theta);
    c.depth = opts.depth.value_or(inst.options.depth);
    c.oracle = opts.oracle.value_or(inst.options.oracle);
    c.oracle_bound = opts.oracle_bound;
    if (c.theta <= 1) throw precondition_error("theta must exceed 1");
    if (c.depth < 1) throw precondition_error("depth must be at least 1");
    return c;
}

ordered_json ctx_json(const Ctx& c) {
    ordered_json j;
    j["theta"] = format_rat(c.theta);
    j["depth"] = c.depth;
    j["oracle"] = c.oracle;
    j["oracleBound"] = c.oracle_bound;
    return j;
}

std::string mask_witness(const Mask& m) { return "mask " + m.to_string(); }

/// charge(p*q) >= 0 and charge(p*(e-q)) <= 0 for every member p.
Check two_sided_check(const Charge& psi, const Mask& q, std::size_t bound) {
    Check c{"decomposition-two-sided", "", true, ""};
    auto members = psi.algebra().members(bound);
    c.scope = "all " + std::to_string(members.size()) + " members p";
    Mask comp = complement(q);
    for (const Mask& p : members) {
        if (!is_nonneg(psi.evaluate(meet(p, q)))) {
            c.pass = false;
            c.witness = "positive side fails at " + mask_witness(p);
            return c;
        }
        if (!is_nonneg(-psi.evaluate(meet(p, comp)))) {
            c.pass = false;
            c.witness = "negative side fails at " + mask_witness(p);
            return c;
        }
    }
    return c;
}

Check atom_split_check(const Charge& psi, const Mask& q) {
    Check c{"decomposition-atom-split", "all " + std::to_string(psi.atom_count()) + " atoms",
            true, ""};
    for (std::size_t a = 0; a < psi.atom_count(); ++a) {
        bool inside = submask(psi.algebra().atom_mask(a), q);
        if (inside && psi.atom_value(a) < 0) {
            c.pass = false;
            c.witness = "atom " + std::to_string(a) + " negative inside q";
            return c;
        }
        if (!inside && psi.atom_value(a) > 0) {
            c.pass = false;
            c.witness = "atom " + std::to_string(a) + " positive outside q";
            return c;
        }
    }
    return c;
}

void sandwich_checks(std::vector<Check>& out, const Charge& psi, const Mask& q,
                     const Rat& theta, const std::string& label) {
    Mask m = psi.maximal_member(q, theta);
    Element sup = psi.charge_supremum(q);
    Element at_m = psi.evaluate(m);
    bool lower = leq(sup, theta * at_m);
    bool upper = leq(theta * at_m, theta * sup);
    out.push_back({"envelope-sandwich", label, lower && upper,
                   lower ? (upper ? "" : "upper bound fails at " + mask_witness(q))
                         : "lower bound fails at " + mask_witness(q)});
    Element defect = positive_part(sup - theta * at_m) * m.to_element();
    out.push_back({"envelope-defect-disjoint", label, is_zero(defect),
                   is_zero(defect) ? "" : "nonzero defect at " + mask_witness(q)});

    Mask u = psi.positive_piece(q);
    Element at_u = psi.evaluate(u);
    bool ok = is_nonneg(at_u) && leq(at_u, sup) && leq(sup, Rat(2) * at_u) &&
              submask(u, meet(band_mask(at_u), q));
    out.push_back({"positive-piece-sandwich", label, ok,
                   ok ? "" : "piece conditions fail at " + mask_witness(q)});
}

void append_decompose_checks(std::vector<Check>& checks, ordered_json& outputs,
                             const Charge& psi, const Ctx& ctx) {
    Mask q = psi.hahn_jordan();
    outputs["hahnComponent"] = q.to_string();
    outputs["chargeAtUnit"] = element_json(psi.evaluate(Mask::ones(psi.dim())));
    outputs["supremumAtUnit"] = element_json(psi.charge_supremum(Mask::ones(psi.dim())));

    checks.push_back(atom_split_check(psi, q));
    sandwich_checks(checks, psi, Mask::ones(psi.dim()), ctx.theta, "q = e, theta = " + format_rat(ctx.theta));

    if (ctx.oracle) {
        checks.push_back(two_sided_check(psi, q, ctx.oracle_bound));
        auto solutions = psi.brute_force_hahn(ctx.oracle_bound);
        bool found = false;
        for (const Mask& s : solutions) found |= s == q;
        checks.push_back({"oracle-membership",
                          std::to_string(solutions.size()) + " enumerated solutions", found,
                          found ? "" : "canonical component not in the enumerated set"});
        auto members = psi.algebra().members(ctx.oracle_bound);
        for (const Mask& qq : members)
            sandwich_checks(checks, psi, qq, ctx.theta,
                            "member " + qq.to_string() + ", theta = " + format_rat(ctx.theta));
    }
}

} // namespace

Certificate run_decompose(const Instance& inst, const RunOptions& opts) {
    Ctx ctx = make_ctx(inst, opts);
    Certificate cert;
    cert.command = "decompose";
    cert.arguments = ctx_json(ctx);
    cert.instance_digest = inst.digest;
    Charge psi = inst.charge();
    append_decompose_checks(cert.checks, cert.outputs, psi, ctx);
    return cert;
}

Certificate run_represent(const Instance& inst, const RunOptions& opts) {
    Ctx ctx = make_ctx(inst, opts);
    Certificate cert;
    cert.command = "represent";
    cert.arguments = ctx_json(ctx);
    cert.instance_digest = inst.digest;

    std::optional<Functional> maybe;
    try {
        maybe = inst.make_functional();
    } catch (const functional_error& e) {
        const char* kind = e.kind == functional_error::kind_t::range ? "RangeViolation"
                                                                     : "HomogeneityViolation";
        cert.checks.push_back({"functional-validation", "matrix functional", false,
                               std::string(kind) + ": " + e.what() + " [" + e.witness + "]"});
        return cert;
    }
    const Functional& f = *maybe;
    cert.checks.push_back({"functional-validation",
                           f.is_density_form() ? "density functional" : "matrix functional",
                           true, ""});

    const Expectation& T = f.expectation();
    Element y = f.exact_represent();
    Element approx = f.dyadic_represent(ctx.depth);
    Element err = y - approx;
    Rat bound = T.weight_ratio() * pow2(-ctx.depth);

    cert.outputs["exactRepresenter"] = element_json(y);
    cert.outputs["dyadicApproximant"] = element_json(approx);
    cert.outputs["maxError"] = format_rat(sup_norm(err));
    cert.outputs["errorBound"] = format_rat(bound);
    cert.outputs["normSquared"] = element_json(f.norm_squared());
    cert.outputs["positiveComponent"] = f.positive_component().to_string();

    if (f.is_density_form()) {
        bool rt = y == inst.functional->y;
        cert.checks.push_back({"represent-round-trip", "density vector", rt,
                               rt ? "" : "representer differs from the input density"});
    }

    cert.checks.push_back({"dyadic-error-bound",
                           "depth " + std::to_string(ctx.depth), sup_norm(err) <= bound,
                           sup_norm(err) <= bound ? "" : "error " + format_rat(sup_norm(err))});

    bool norm_ok = f.norm_squared() == T.norm2_squared(y);
    cert.checks.push_back({"norm-equality-squared", "representer", norm_ok,
                           norm_ok ? "" : "norms differ"});

    // Squared strong bound on a deterministic sample of arguments.
    {
        std::vector<Element> sample = {Element::unit(f.dim()), y};
        for (std::size_t i = 0; i < f.dim(); ++i) sample.push_back(Element::indicator(f.dim(), i));
        Element n2 = f.norm_squared();
        bool ok = true;
        std::string witness;
        for (std::size_t s = 0; s < sample.size() && ok; ++s) {
            Element val = f.evaluate(sample[s]);
            if (!leq(val * val, n2 * T.norm2_squared(sample[s]))) {
                ok = false;
                witness = "argument " + std::to_string(s);
            }
        }
        cert.checks.push_back({"strong-bound-squared",
                               std::to_string(sample.size()) + " sampled arguments", ok, witness});
    }

    for (const Check& c : bijection_report(T, y)) cert.checks.push_back(c);

    if (ctx.oracle && f.dim() <= ctx.oracle_bound) {
        Charge psi = Charge(Partition::singletons(f.dim()), T.blocks(),
                            [&] {
                                std::vector<Rat> v(f.dim());
                                for (std::size_t i = 0; i < f.dim(); ++i)
                                    v[i] = f.indicator_value(i);
                                return v;
                            }());
        cert.checks.push_back(two_sided_check(psi, f.positive_component(), ctx.oracle_bound));
    }
    return cert;
}

namespace {

void append_invert_checks(std::vector<Check>& checks, ordered_json& outputs, const Element& g,
                          int depth) {
    Element h = canonical_inverse(g);
    Mask band = band_mask(g);
    outputs["inverse"] = element_json(h);
    outputs["band"] = band.to_string();

    bool prod_ok = g * h == band.to_element();
    checks.push_back({"product-is-band-projection", "exact", prod_ok,
                      prod_ok ? "" : "product differs from the band mask"});
    bool invol = canonical_inverse(h) == apply_mask(band, g);
    checks.push_back({"inverse-involution", "exact", invol, invol ? "" : "double inverse drifted"});
    if (is_nonneg(g)) {
        checks.push_back({"inverse-positivity", "exact", is_nonneg(h),
                          is_nonneg(h) ? "" : "negative coordinate in the inverse"});
    }

    auto parts = sign_parts(g);
    for (auto [sign, f] : {std::pair<const char*, Element>{"positive part", parts.pos},
                           {"negative part", parts.neg}}) {
        std::string label = std::string(sign) + ", depth " + std::to_string(depth);
        Ladder lad = spectral_masks(f, depth);
        Mask support = band_mask(f);
        Mask seen(f.size());
        bool disjoint = true;
        for (const auto& [lvl, m] : lad.cells) {
            disjoint &= meet(m, seen).none();
            seen = join(seen, m);
        }
        bool partition_ok = disjoint && seen == support;
        checks.push_back({"ladder-partition", label, partition_ok,
                          partition_ok ? "" : "cells do not tile the support"});

        auto [lo, hi] = dyadic_bounds(f, depth);
        bool sandwich = leq(lo, f) && leq(f, hi) &&
                        hi - lo == pow2(-depth) * support.to_element();
        checks.push_back({"dyadic-sandwich", label, sandwich,
                          sandwich ? "" : "envelopes do not pin f"});

        Element hf = canonical_inverse(f);
        Element lower = spectral_inverse(f, depth);
        Element upper = spectral_inverse_upper(f, depth);
        bool lower_ok = leq(lower, hf);
        checks.push_back({"inverse-lower-bound", label, lower_ok,
                          lower_ok ? "" : "approximant exceeds the inverse"});
        bool chain = support.to_element() - pow2(-depth) * lower == lower * lo &&
                     leq(lower * lo, lower * f) && lower * hi == support.to_element();
        checks.push_back({"inverse-chain-identities", label, chain,
                          chain ? "" : "chain identities fail"});
        bool companions = leq(lower, upper);
        checks.push_back({"inverse-companion-order", label, companions,
                          companions ? "" : "lower approximant exceeds upper"});

        Rat min_pos(0);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] > 0 && (min_pos == 0 || f[i] < min_pos)) min_pos = f[i];
        if (min_pos > 0 && pow2(-depth) < min_pos) {
            Rat err(0), hmax(0);
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i] == 0) continue;
                Rat d = hf[i] - lower[i];
                if (d < 0) d = -d;
                if (d > err) err = d;
                if (hf[i] > hmax) hmax = hf[i];
            }
            bool conv = err <= pow2(-depth + 1) * hmax * hmax;
            checks.push_back({"inverse-convergence-bound", label, conv,
                              conv ? "" : "error " + format_rat(err)});
        }
    }
}

} // namespace

Certificate run_invert(const Instance& inst, const RunOptions& opts) {
    Ctx ctx = make_ctx(inst, opts);
    Certificate cert;
    cert.command = "invert";
    cert.arguments = ctx_json(ctx);
    cert.instance_digest = inst.digest;
    if (!inst.density) throw precondition_error("invert needs a density vector");
    append_invert_checks(cert.checks, cert.outputs, *inst.density, ctx.depth);
    return cert;
}

Certificate run_verify(const Instance& inst, const RunOptions& opts) {
    Ctx ctx = make_ctx(inst, opts);
    Certificate cert;
    cert.command = "verify";
    cert.arguments = ctx_json(ctx);
    cert.instance_digest = inst.digest;

    Expectation T = inst.expectation();
    const std::size_t n = T.dim();

    bool unit_fixed = T.apply(Element::unit(n)) == Element::unit(n);
    cert.checks.push_back({"core.unit-fixed", "T e = e", unit_fixed, ""});
    bool projection = true;
    bool positive = true;
    for (std::size_t i = 0; i < n && (projection || positive); ++i) {
        Element chi = Element::indicator(n, i);
        Element once = T.apply(chi);
        projection &= T.apply(once) == once;
        positive &= is_nonneg(once) && !is_zero(once);
    }
    cert.checks.push_back({"core.projection", "coordinate indicators", projection, ""});
    cert.checks.push_back({"core.strict-positivity", "coordinate indicators", positive, ""});

    if (inst.charge_values || inst.density) {
        Certificate d = run_decompose(inst, opts);
        for (auto& c : d.checks) {
            c.name = "decompose." + c.name;
            cert.checks.push_back(c);
        }
        cert.outputs["decompose"] = d.outputs;
    }
    if (inst.density) {
        Certificate iv = run_invert(inst, opts);
        for (auto& c : iv.checks) {
            c.name = "invert." + c.name;
            cert.checks.push_back(c);
        }
        cert.outputs["invert"] = iv.outputs;
        auto hc = T.holder(*inst.density, Element::unit(n));
        cert.checks.push_back({"core.holder-with-unit", "density vector", hc.holds, ""});
    }
    if (inst.functional) {
        Certificate r = run_represent(inst, opts);
        for (auto& c : r.checks) {
            c.name = "represent." + c.name;
            cert.checks.push_back(c);
        }
        cert.outputs["represent"] = r.outputs;
    }
    return cert;
}

Certificate run_selftest(std::uint64_t seed, std::uint64_t trials) {
    if (trials < 1) throw precondition_error("trials must be at least 1");
    Certificate cert;
    cert.command = "selftest";
    cert.arguments["seed"] = seed;
    cert.arguments["trials"] = trials;
    cert.instance_digest = "fnv1a64:0000000000000000";
    selftest_campaign(seed, trials, cert.checks);
    cert.outputs["suites"] = static_cast<std::uint64_t>(cert.checks.size());
    return cert;
}

} // namespace riesz
