#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "riesz/errors.hpp"
#include "riesz/selftest.hpp"

#include <algorithm>

using namespace riesz;

namespace {

Element el(std::vector<long> v) {
    std::vector<Rat> c;
    for (long x : v) c.emplace_back(x);
    return Element(std::move(c));
}

// n = 4, g-blocks {0,1},{2,3}, singleton atoms, values (3, -1, 2, -2).
Charge fixture() {
    return Charge(Partition::singletons(4), Partition(4, {{0, 1}, {2, 3}}),
                  {Rat(3), Rat(-1), Rat(2), Rat(-2)});
}

Mask mk(const std::string& s) { return Mask::from_string(s); }

bool contains(const std::vector<Mask>& set, const Mask& m) {
    return std::any_of(set.begin(), set.end(), [&](const Mask& x) { return x == m; });
}

} // namespace

TEST_CASE("construction validates the refinement") {
    CHECK_THROWS_AS(Charge(Partition(4, {{0, 1}, {2, 3}}), Partition::singletons(4),
                           {Rat(1), Rat(1)}),
                    precondition_error);
    CHECK_THROWS_AS(Charge(Partition::singletons(2), Partition(2, {{0, 1}}), {Rat(1)}),
                    dimension_error);
}

TEST_CASE("evaluation sums atom contributions per g-block") {
    Charge psi = fixture();
    CHECK(psi.evaluate(mk("0000")) == Element::zero(4));
    CHECK(psi.evaluate(mk("1100")) == el({2, 2, 0, 0}));
    CHECK(psi.evaluate(mk("1111")) == el({2, 2, 0, 0}));

    // independent per-coordinate summation
    for (const Mask& p : psi.algebra().members())
        CHECK(psi.evaluate(p) ==
              oracle::charge_at({{0}, {1}, {2}, {3}}, {Rat(3), Rat(-1), Rat(2), Rat(-2)},
                                {{0, 1}, {2, 3}}, p, 4));

    CHECK_THROWS_AS(fixture().evaluate(Mask::from_string("10")), precondition_error);
}

TEST_CASE("supremum envelope") {
    Charge psi = fixture();
    CHECK(psi.charge_supremum(mk("1111")) == el({3, 3, 2, 2}));
    CHECK(psi.charge_supremum(mk("0101")) == Element::zero(4));
    CHECK(psi.charge_supremum(mk("0000")) == Element::zero(4));
    for (const Mask& q : psi.algebra().members())
        CHECK(psi.charge_supremum(q) == oracle::exhaustive_supremum(psi, q));
}

TEST_CASE("maximal dominating member and the envelope sandwich") {
    Charge psi = fixture();
    Mask m = psi.maximal_member(mk("1111"), Rat(2));
    CHECK(m.to_string() == "1110");
    CHECK(psi.evaluate(m) == el({2, 2, 2, 2}));
    CHECK(leq(el({3, 3, 2, 2}), el({4, 4, 4, 4})));
    CHECK(leq(el({4, 4, 4, 4}), el({6, 6, 4, 4})));

    // all values nonnegative: the member is q itself
    Charge pos(Partition::singletons(2), Partition::singletons(2), {Rat(1), Rat(0)});
    CHECK(pos.maximal_member(mk("11"), Rat(2)) == mk("11"));

    CHECK(psi.maximal_member(mk("0000"), Rat(2)).none());
    CHECK_THROWS_AS(psi.maximal_member(mk("1111"), Rat(1)), precondition_error);

    // sandwich and defect disjointness, exhaustively, for several factors
    for (const Rat& theta : {Rat(3, 2), Rat(2), Rat(3)}) {
        for (const Mask& q : psi.algebra().members()) {
            Mask qm = psi.maximal_member(q, theta);
            Element sup_q = psi.charge_supremum(q);
            Element at = psi.evaluate(qm);
            CHECK(submask(qm, q));
            CHECK(leq(sup_q, theta * at));
            CHECK(leq(theta * at, theta * sup_q));
            CHECK(is_zero(positive_part(sup_q - theta * at) * qm.to_element()));
            // no member strictly above qm below q stays dominating
            for (const Mask& p : psi.algebra().members()) {
                if (!submask(p, q) || !submask(qm, p) || p == qm) continue;
                CHECK(!leq(p.to_element() * sup_q, theta * psi.evaluate(p)));
            }
        }
    }
}

TEST_CASE("positive piece") {
    Charge psi = fixture();
    Mask u = psi.positive_piece(mk("1111"));
    CHECK(u.to_string() == "1110");
    CHECK(psi.evaluate(u) == el({2, 2, 2, 2}));
    CHECK(leq(psi.evaluate(u), el({3, 3, 2, 2})));
    CHECK(leq(el({3, 3, 2, 2}), Rat(2) * psi.evaluate(u)));

    Charge neg(Partition::singletons(2), Partition::singletons(2), {Rat(-1), Rat(-2)});
    CHECK(neg.positive_piece(mk("11")).none());
    CHECK(neg.charge_supremum(mk("11")) == Element::zero(2));
    CHECK(psi.positive_piece(mk("0000")).none());
}

TEST_CASE("strongly negative witness") {
    Charge psi = fixture();

    Mask v = psi.strongly_negative_witness(mk("0101"));
    CHECK(v == mk("0101"));
    CHECK(oracle::strongly_negative(psi, v));

    // extraction strips the positive atom 2 from 0111
    CHECK(psi.evaluate(mk("0111")) == el({-1, -1, 0, 0}));
    Mask w = psi.strongly_negative_witness(mk("0111"));
    CHECK(w == mk("0101"));
    CHECK(leq(psi.evaluate(w), psi.evaluate(mk("0111"))));
    CHECK(oracle::strongly_negative(psi, w));

    Charge neg(Partition::singletons(2), Partition::singletons(2), {Rat(-1), Rat(-2)});
    CHECK(neg.strongly_negative_witness(mk("11")) == mk("11"));

    CHECK_THROWS_AS(psi.strongly_negative_witness(mk("1111")), precondition_error);
}

TEST_CASE("negative part witness") {
    Charge psi = fixture();
    CHECK(psi.evaluate(mk("1101")) == el({2, 2, -2, -2}));
    Mask v = psi.negative_part_witness(mk("1101"));
    CHECK(v == mk("0001"));
    CHECK(psi.evaluate(v) == el({0, 0, -2, -2}));
    CHECK(psi.evaluate(v) == -negative_part(psi.evaluate(mk("1101"))));
    CHECK(oracle::strongly_negative(psi, v));

    CHECK_THROWS_AS(psi.negative_part_witness(mk("1010")), precondition_error);

    Charge neg(Partition::singletons(2), Partition::singletons(2), {Rat(-1), Rat(-2)});
    CHECK(neg.negative_part_witness(mk("11")) == mk("11"));
}

TEST_CASE("decomposition component") {
    Charge psi = fixture();
    Mask q = psi.hahn_jordan();
    CHECK(q.to_string() == "1010");
    for (const Mask& p : psi.algebra().members()) {
        CHECK(is_nonneg(psi.evaluate(meet(p, q))));
        CHECK(leq(psi.evaluate(meet(p, complement(q))), Element::zero(4)));
    }

    Charge pos(Partition::singletons(2), Partition::singletons(2), {Rat(1), Rat(0)});
    CHECK(pos.hahn_jordan() == mk("11"));
    Charge neg(Partition::singletons(2), Partition::singletons(2), {Rat(0), Rat(-2)});
    CHECK(neg.hahn_jordan() == mk("00"));
    Charge zero(Partition::singletons(2), Partition::singletons(2), {Rat(0), Rat(0)});
    CHECK(zero.hahn_jordan() == mk("00"));
}

TEST_CASE("enumerated solution sets") {
    Charge psi = fixture();
    auto sols = psi.brute_force_hahn();
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].to_string() == "1010");
    CHECK(sols == oracle::naive_hahn_set(psi));

    Charge swing(Partition::singletons(2), Partition::singletons(2), {Rat(1), Rat(0)});
    auto s2 = swing.brute_force_hahn();
    REQUIRE(s2.size() == 2);
    CHECK(contains(s2, mk("10")));
    CHECK(contains(s2, mk("11")));
    CHECK(contains(s2, swing.hahn_jordan()));

    Charge zero(Partition::singletons(2), Partition::singletons(2), {Rat(0), Rat(0)});
    CHECK(zero.brute_force_hahn().size() == 4);

    CHECK_THROWS_AS(Charge(Partition::singletons(14), Partition::singletons(14),
                           std::vector<Rat>(14, Rat(1)))
                        .brute_force_hahn(),
                    bound_error);
}

TEST_CASE("charge from a density") {
    Expectation T(Partition(4, {{0, 1}, {2, 3}}), std::vector<Rat>(4, Rat(1)));
    Partition B = Partition::singletons(4);

    Charge zero = Charge::from_density(T, Element::zero(4), B);
    for (std::size_t a = 0; a < 4; ++a) CHECK(zero.atom_value(a) == Rat(0));

    Charge psi = Charge::from_density(T, el({3, -1, 2, -2}), B);
    CHECK(psi.atom_value(0) == Rat(3, 2));
    CHECK(psi.atom_value(1) == Rat(-1, 2));
    CHECK(psi.atom_value(2) == Rat(1));
    CHECK(psi.atom_value(3) == Rat(-1));

    Charge unit = Charge::from_density(T, Element::unit(4), B);
    for (std::size_t a = 0; a < 4; ++a) CHECK(unit.atom_value(a) == Rat(1, 2));

    // coherence with applying the operator directly
    Element f = el({3, -1, 2, -2});
    for (const Mask& p : B.members())
        CHECK(psi.evaluate(p) == T.apply(p.to_element() * f));

    CHECK_THROWS_AS(Charge::from_density(Expectation(Partition::singletons(4),
                                                     std::vector<Rat>(4, Rat(1))),
                                         f, Partition(4, {{0, 1}, {2, 3}})),
                    precondition_error);
}

TEST_CASE("supremum matches the exhaustive oracle on a full 12-atom algebra") {
    Charge psi(Partition::singletons(12),
               Partition(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}),
               {Rat(3), Rat(-1), Rat(0), Rat(2), Rat(-2), Rat(0), Rat(1), Rat(-4), Rat(5),
                Rat(0), Rat(-1), Rat(1)});
    Rng rng(12);
    auto members = psi.algebra().members();
    for (int t = 0; t < 12; ++t) {
        Mask q = members[rng.below(members.size())];
        CHECK(psi.charge_supremum(q) == oracle::exhaustive_supremum(psi, q));
    }
    CHECK(psi.charge_supremum(Mask::ones(12)) ==
          oracle::exhaustive_supremum(psi, Mask::ones(12)));
}

TEST_CASE("encoding laws and oracle agreement on random charges") {
    Rng rng(5150);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 8));
        Charge psi = random_charge(rng, n);
        auto members = psi.algebra().members();
        Mask p = members[rng.below(members.size())];
        Mask q = members[rng.below(members.size())];

        // homogeneity over g-members and additivity over disjoint members
        auto gmembers = psi.g_blocks().members();
        Mask k = gmembers[rng.below(gmembers.size())];
        CHECK(psi.evaluate(meet(p, k)) == k.to_element() * psi.evaluate(p));
        Mask disj = meet(p, complement(q));
        CHECK(psi.evaluate(join(disj, q)) == psi.evaluate(disj) + psi.evaluate(q));

        CHECK(psi.charge_supremum(q) == oracle::exhaustive_supremum(psi, q));

        Mask h = psi.hahn_jordan();
        CHECK(contains(psi.brute_force_hahn(), h));
    }
}
