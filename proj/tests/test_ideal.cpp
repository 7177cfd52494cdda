#include "qslice/ideal.hpp"
#include "qslice/parser.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qslice;

namespace {
SlicePoly P1(const std::string& s) { return parse_poly(s, 1); }
SlicePoly P2(const std::string& s) { return parse_poly(s, 2); }
}  // namespace

TEST_CASE("groebner basis of <q-i, q-j> is the unit ideal") {
    RightIdealBasis ideal({P1("q - i"), P1("q - j")});
    auto gb = ideal.groebner_polys();
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == SlicePoly::one(1));
    CHECK(ideal.is_unit_ideal());
    auto m = ideal.member(P1("q^3 + 7"));
    CHECK(m.member);
    CHECK(m.certificate.recomposes(ideal.generators()));
}

TEST_CASE("groebner basis of a principal ideal is its monic generator") {
    RightIdealBasis ideal({P1("(q+1)^2")});
    auto gb = ideal.groebner_polys();
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == P1("(q+1)^2"));
}

TEST_CASE("groebner basis with a linear relation collapses a variable") {
    RightIdealBasis ideal({P2("q1^2 + 1"), P2("q2^2 + 1"), P2("q1 - q2")});
    CHECK(ideal.contains(P2("q1^2 + 1")));
    CHECK(ideal.contains(P2("q2^2 + 1")));
    CHECK(ideal.contains(P2("q1 - q2")));
    CHECK_FALSE(ideal.contains(P2("q1 + q2")));
    CHECK_FALSE(ideal.is_unit_ideal());
}

TEST_CASE("membership in <q1^2+1, q2^2+1>") {
    RightIdealBasis ideal({P2("q1^2 + 1"), P2("q2^2 + 1")});

    SECTION("q1^2 - q2^2 is a member with a recomposing certificate") {
        auto m = ideal.member(P2("q1^2 - q2^2"));
        REQUIRE(m.member);
        CHECK(m.certificate.recomposes(ideal.generators()));
        SlicePoly acc = SlicePoly::zero(2);
        for (std::size_t i = 0; i < 2; ++i)
            acc += star_mul(ideal.generators()[i], m.certificate.cofactors[i]);
        CHECK(acc == P2("q1^2 - q2^2"));
    }

    SECTION("q1 - q2 is not a member") {
        auto m = ideal.member(P2("q1 - q2"));
        CHECK_FALSE(m.member);
        CHECK(m.remainder == P2("q1 - q2"));
    }

    SECTION("(q1+q2)^s reduces to 2 q1 q2 - 2, hence not a member") {
        SlicePoly s = symmetrization(P2("q1 + q2"));
        CHECK(s == P2("q1^2 + 2 q1 q2 + q2^2"));
        auto m = ideal.member(s);
        CHECK_FALSE(m.member);
        CHECK(m.remainder == P2("2 q1 q2 - 2"));
    }
}

TEST_CASE("normal form of a member recombines exactly") {
    RandomQuat rnd(81);
    for (int t = 0; t < 25; ++t) {
        std::vector<SlicePoly> gens;
        for (int g = 0; g < 2; ++g) {
            SlicePoly p = random_poly(rnd, 2, 2, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        RightIdealBasis ideal(gens);
        // manufactured member
        SlicePoly combo = SlicePoly::zero(2);
        for (const auto& g : gens) combo += star_mul(g, random_poly(rnd, 2, 2, 2));
        auto m = ideal.member(combo);
        CHECK(m.member);

        // p minus its normal form is always a member
        SlicePoly p = random_poly(rnd, 2, 3, 4);
        auto mp = ideal.member(p);
        CHECK(ideal.member(p - mp.remainder).member);
    }
}

TEST_CASE("ideal is closed under addition and right multiplication") {
    RandomQuat rnd(82);
    RightIdealBasis ideal({P2("q1^2 + 1"), P2("q2^2 + 1")});
    for (int t = 0; t < 20; ++t) {
        SlicePoly a = star_mul(P2("q1^2 + 1"), random_poly(rnd, 2, 2, 2));
        SlicePoly b = star_mul(P2("q2^2 + 1"), random_poly(rnd, 2, 2, 2));
        CHECK(ideal.member(a + b).member);
        CHECK(ideal.member(star_mul(a, random_poly(rnd, 2, 1, 2))).member);
    }
}

TEST_CASE("linear oracle agrees with groebner membership") {
    RandomQuat rnd(83);
    int done = 0;
    while (done < 40) {
        int nv = 1 + static_cast<int>(rnd.raw() % 2);
        std::vector<SlicePoly> gens;
        for (int g = 0; g < 2; ++g) {
            SlicePoly p = random_poly(rnd, nv, 2, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        RightIdealBasis ideal(gens);
        SlicePoly p = (rnd.raw() % 2) ? random_poly(rnd, nv, 3, 4)
                                      : star_mul(gens[rnd.raw() % gens.size()],
                                                 random_poly(rnd, nv, 1, 2));
        if (p.degree() > 3) continue;
        auto m = ideal.member(p);
        if (m.member) {
            // size the oracle window from the witnessed certificate
            int bound = static_cast<int>(p.degree());
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (!m.certificate.cofactors[i].is_zero())
                    bound = std::max<int>(bound, static_cast<int>(gens[i].degree() +
                                                                  m.certificate.cofactors[i].degree()));
            CHECK(member_linear_oracle(p, ideal, bound));
        } else {
            // no representation exists at any bound, so none at this one
            CHECK_FALSE(member_linear_oracle(p, ideal, 5));
        }
        ++done;
    }
}

TEST_CASE("linear oracle exact on the worked examples") {
    RightIdealBasis i1({P2("q1^2 + 1"), P2("q2^2 + 1")});
    CHECK(member_linear_oracle(P2("q1^2 - q2^2"), i1, 3));
    CHECK_FALSE(member_linear_oracle(P2("q1 - q2"), i1, 4));
    CHECK_FALSE(member_linear_oracle(symmetrization(P2("q1 + q2")), i1, 4));

    RightIdealBasis i2({P1("(q+1)^2")});
    CHECK_FALSE(member_linear_oracle(P1("q + 1"), i2, 4));
    CHECK(member_linear_oracle(P1("(q+1)^2 (q - i)"), i2, 4));
}

TEST_CASE("radical witnesses for <(q+1)^2>") {
    RightIdealBasis ideal({P1("(q+1)^2")});
    CHECK_FALSE(ideal.member(P1("q + 1")).member);

    // generic scaling needs exponent exactly 2
    RandomQuat rnd(84);
    for (int t = 0; t < 10; ++t) {
        Quaternion a = rnd.nonzero_quaternion(3, 2);
        auto w = find_radical_witness(P1("q + 1"), ideal, a, 3);
        REQUIRE(w);
        CHECK(w->n == 2);
        CHECK(radical_witness_check(*w, ideal));
    }

    // ((q+1)a)^{*1} = (q+1)a is never in the ideal
    auto w1 = find_radical_witness(P1("q + 1"), ideal, Quaternion(1), 1);
    CHECK_FALSE(w1);
}

TEST_CASE("radical witnesses for <(q+1)^3> need exponent 3") {
    RightIdealBasis ideal({P1("(q+1)^3")});
    RandomQuat rnd(85);
    for (int t = 0; t < 6; ++t) {
        Quaternion a = rnd.nonzero_quaternion(3, 2);
        auto w = find_radical_witness(P1("q + 1"), ideal, a, 4);
        REQUIRE(w);
        CHECK(w->n == 3);
        CHECK(radical_witness_check(*w, ideal));
    }
}

TEST_CASE("malformed radical certificates are rejected, not read as negative") {
    RightIdealBasis ideal({P1("(q+1)^2")});
    auto w = find_radical_witness(P1("q + 1"), ideal, Quaternion(1), 2);
    REQUIRE(w);

    RadicalWitness bad = *w;
    bad.certificate.cofactors.pop_back();
    CHECK_THROWS_AS(radical_witness_check(bad, ideal), CertificateError);

    RadicalWitness bad2 = *w;
    bad2.certificate.cofactors[0] += SlicePoly::one(1);
    CHECK_THROWS_AS(radical_witness_check(bad2, ideal), CertificateError);

    RadicalWitness bad3 = *w;
    bad3.n = 0;
    CHECK_THROWS_AS(radical_witness_check(bad3, ideal), std::invalid_argument);
}

TEST_CASE("bounded radical report") {
    RightIdealBasis ideal({P1("(q+1)^2")});
    RandomQuat rnd(86);
    std::vector<Quaternion> samples;
    for (int t = 0; t < 12; ++t) samples.push_back(rnd.nonzero_quaternion(3, 2));
    auto rep = radical_member_bounded(P1("q + 1"), ideal, 2, samples);
    CHECK(rep.all_succeeded);
    for (const auto& s : rep.samples) {
        REQUIRE(s.least_n);
        CHECK(*s.least_n == 2);
    }
    CHECK(rep.disclaimer.find("evidence") != std::string::npos);

    // N_max = 1 cannot succeed
    auto rep1 = radical_member_bounded(P1("q + 1"), ideal, 1, samples);
    CHECK_FALSE(rep1.all_succeeded);
}

TEST_CASE("quasi-prime violation of <(q+1)^3> verifies clause by clause") {
    RightIdealBasis ideal({P1("(q+1)^3")});
    SlicePoly p = P1("(q+1)^2"), q = P1("q + 1");
    auto m = ideal.member(star_mul(p, q));
    REQUIRE(m.member);
    QuasiPrimeViolation v{p, q, m.certificate, ideal.member(p).remainder,
                          ideal.member(symmetrization(q)).remainder};
    std::string why;
    CHECK(quasi_prime_violation_verify(v, ideal, &why));

    // tampering is caught with the failing clause named
    QuasiPrimeViolation bad = v;
    bad.p = P1("(q+1)^3");  // now P is a member
    bad.inclusion = ideal.member(star_mul(bad.p, bad.q)).certificate;
    CHECK_FALSE(quasi_prime_violation_verify(bad, ideal, &why));
    CHECK(why == "P is a member of the ideal");

    QuasiPrimeViolation bad2 = v;
    bad2.inclusion.cofactors[0] += SlicePoly::one(1);
    CHECK_FALSE(quasi_prime_violation_verify(bad2, ideal, &why));
    CHECK(why.find("recompose") != std::string::npos);

    QuasiPrimeViolation bad3 = v;
    bad3.q = P1("(q+1)^3");  // Q^s lands in the ideal
    bad3.inclusion = ideal.member(star_mul(bad3.p, bad3.q)).certificate;
    CHECK_FALSE(quasi_prime_violation_verify(bad3, ideal, &why));
    CHECK(why == "Q^s is a member of the ideal");
}

TEST_CASE("bounded search finds the <(q+1)^3> violation") {
    RightIdealBasis ideal({P1("(q+1)^3")});
    QpSearchOptions opt;
    opt.random_budget = 0;
    auto v = quasi_prime_search_bounded(ideal, opt);
    REQUIRE(v);
    CHECK(quasi_prime_violation_verify(*v, ideal));
}

TEST_CASE("bounded search is quiet on <(q+1)^2>") {
    RightIdealBasis ideal({P1("(q+1)^2")});
    QpSearchOptions opt;
    opt.random_budget = 200;
    CHECK_FALSE(quasi_prime_search_bounded(ideal, opt));
}

TEST_CASE("user-supplied pairs short-circuit the search") {
    RightIdealBasis ideal({P2("q1^2 + 1"), P2("q2^2 + 1")});
    QpSearchOptions opt;
    opt.user_pairs = {{P2("q1 - q2"), P2("q1 + q2")}};
    opt.random_budget = 0;
    auto v = quasi_prime_search_bounded(ideal, opt);
    REQUIRE(v);
    CHECK(v->p == P2("q1 - q2"));
    CHECK(quasi_prime_violation_verify(*v, ideal));
}

TEST_CASE("symmetrized ideal: principal case is exact") {
    RightIdealBasis ideal({P1("q - i")});
    auto s = symmetrized_ideal(ideal, 0);
    CHECK(s.exact);
    REQUIRE(s.basis.generators().size() == 1);
    CHECK(s.basis.generators()[0] == P1("q^2 + 1"));
}

TEST_CASE("symmetrized ideal: bounded approximation sits inside the ideal") {
    RightIdealBasis ideal({P2("q1^2 + 1"), P2("q2^2 + 1")});
    auto s = symmetrized_ideal(ideal, 0);
    CHECK_FALSE(s.exact);
    for (const auto& g : s.basis.generators()) {
        CHECK(g.has_real_coefficients());
        CHECK(ideal.member(g).member);  // S(I) subset of I: right ideals absorb P^c
        CHECK(orbit_vanishing_check(g, ArrangedOrbit{{0, 0}, {1, 1}, {1, 1}}));
        CHECK(orbit_vanishing_check(g, ArrangedOrbit{{0, 0}, {1, 1}, {1, -1}}));
    }
    // the symmetrizations of the generators themselves are present
    CHECK(s.basis.member(symmetrization(P2("q1^2 + 1"))).member);
    CHECK(s.basis.member(symmetrization(P2("q1^2 + q2^2 + 2"))).member);
}

TEST_CASE("constructor rejects bad generator lists") {
    CHECK_THROWS_AS(RightIdealBasis({}), std::invalid_argument);
    CHECK_THROWS_AS(RightIdealBasis({SlicePoly::zero(1)}), std::invalid_argument);
    CHECK_THROWS_AS(RightIdealBasis({P1("q"), P2("q1")}), std::invalid_argument);
}
