#include "qslice/parser.hpp"
#include "qslice/slice_poly.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qslice;

namespace {

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();

// Independent expansion oracle: schoolbook double loop over term lists,
// kept separate from the SlicePoly implementation path.
SlicePoly naive_star(const SlicePoly& p, const SlicePoly& q) {
    std::vector<std::pair<MultiIndex, Quaternion>> acc;
    for (const auto& [ep, cp] : p.terms)
        for (const auto& [eq, cq] : q.terms) {
            MultiIndex e(ep.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
            acc.emplace_back(e, cp * cq);
        }
    SlicePoly out(p.nvars);
    for (auto& [e, c] : acc) out.add_term(e, c);
    return out;
}

SlicePoly P1(const std::string& s) { return parse_poly(s, 1); }
SlicePoly P2(const std::string& s) { return parse_poly(s, 2); }

}  // namespace

TEST_CASE("star product monomial rule") {
    SlicePoly qi = P1("q i"), qj = P1("q j");
    CHECK(star_mul(qi, qj) == P1("q^2 k"));
}

TEST_CASE("star product (q+1)*(q-i)") {
    SlicePoly lhs = star_mul(P1("q+1"), P1("q - i"));
    SlicePoly expect = naive_star(P1("q+1"), P1("q - i"));
    CHECK(lhs == expect);
    CHECK(lhs == P1("q^2 + q(1 - i) - i"));
}

TEST_CASE("one is a two-sided star unit") {
    RandomQuat rnd(31);
    for (int t = 0; t < 20; ++t) {
        SlicePoly p = random_poly(rnd, 2, 3, 4);
        CHECK(star_mul(p, SlicePoly::one(2)) == p);
        CHECK(star_mul(SlicePoly::one(2), p) == p);
    }
}

TEST_CASE("nvars mismatch is a usage error") {
    CHECK_THROWS_AS(star_mul(P1("q"), P2("q1")), std::invalid_argument);
}

TEST_CASE("regular conjugate") {
    CHECK(regular_conj(P1("q^2 i + q j + 1")) == P1("-q^2 i - q j + 1"));
    SlicePoly r = P1("3q^2 - q + 5");
    CHECK(regular_conj(r) == r);
    CHECK(regular_conj(regular_conj(P1("q^2 k + q i - j"))) == P1("q^2 k + q i - j"));
}

TEST_CASE("(P*Q)^c = Q^c * P^c") {
    RandomQuat rnd(32);
    for (int t = 0; t < 100; ++t) {
        SlicePoly p = random_poly(rnd, 2, 3, 3), q = random_poly(rnd, 2, 3, 3);
        CHECK(regular_conj(star_mul(p, q)) == star_mul(regular_conj(q), regular_conj(p)));
        CHECK(regular_conj(star_mul(p, q)) == naive_star(regular_conj(q), regular_conj(p)));
    }
}

TEST_CASE("symmetrization examples") {
    CHECK(symmetrization(P1("q - i")) == P1("q^2 + 1"));
    CHECK(symmetrization(P1("q + 1")) == P1("(q+1)^2"));
    CHECK(symmetrization(P2("q1 + q2")) == P2("q1^2 + 2 q1 q2 + q2^2"));
}

TEST_CASE("symmetrization is real and two-sided") {
    RandomQuat rnd(33);
    for (int t = 0; t < 100; ++t) {
        SlicePoly p = random_poly(rnd, 2, 3, 3);
        SlicePoly s = symmetrization(p);
        CHECK(s.has_real_coefficients());
        CHECK(s == star_mul(regular_conj(p), p));
    }
}

TEST_CASE("pointwise evaluation") {
    CHECK(eval_pointwise(P1("q^2 + 1"), {J}).is_zero());
    CHECK(eval_pointwise(P2("q1 q2"), {I, J}) == K);
    CHECK(eval_pointwise(P2("q1^2 - q2^2"), {I, I}).is_zero());
}

TEST_CASE("transport_point") {
    CHECK_THROWS_AS(canonicalize({I, J}), std::domain_error);
    CommutingPoint a = canonicalize({I, I});
    CHECK(transport_point(a, Quaternion(1)).coords == a.coords);
    CommutingPoint b = canonicalize({I, I * Rational(2)});
    auto moved = transport_point(b, J);
    CHECK(moved.coords == std::vector<Quaternion>{-I, I * Rational(-2)});
    CHECK_THROWS_AS(transport_point(a, Quaternion(0)), std::domain_error);
}

TEST_CASE("transport preserves similarity classes") {
    RandomQuat rnd(34);
    for (int t = 0; t < 50; ++t) {
        Quaternion u = rnd.unit_imaginary();
        std::vector<Quaternion> coords = {Quaternion(rnd.rational()) + u * rnd.rational(),
                                          Quaternion(rnd.rational()) + u * rnd.rational()};
        CommutingPoint p = canonicalize(coords);
        Quaternion lam = rnd.nonzero_quaternion();
        CommutingPoint moved = transport_point(p, lam);
        for (std::size_t k = 0; k < coords.size(); ++k)
            CHECK(similar(moved.coords[k], coords[k]));
    }
}

TEST_CASE("slice_split examples") {
    auto [pp, ps] = slice_split(P1("q^2 + 1"), I, J);
    CHECK(pp == P1("q^2 + 1"));
    CHECK(ps.is_zero());

    auto [p2, s2] = slice_split(P1("q - j"), I, J);
    CHECK(p2 == P1("q"));
    CHECK(s2 == P1("-1"));

    CHECK_THROWS_AS(slice_split(P1("q"), I, I), std::invalid_argument);
    CHECK_THROWS_AS(slice_split(P1("q"), I + J, J), std::invalid_argument);
}

TEST_CASE("slice_split reassembles the evaluation") {
    RandomQuat rnd(35);
    std::vector<std::pair<Quaternion, Quaternion>> frames = {
        {I, J},
        {Quaternion(0, Rational(3, 5), Rational(4, 5), 0),
         Quaternion(0, Rational(-4, 5), Rational(3, 5), 0)}};
    for (int t = 0; t < 20; ++t) {
        auto [Jf, Jp] = frames[t % frames.size()];
        SlicePoly p = random_poly(rnd, 2, 3, 4);
        auto [pa, pb] = slice_split(p, Jf, Jp);
        // random point of C_J^2
        std::vector<Quaternion> zq(2), zc(2);
        for (int k = 0; k < 2; ++k) {
            Rational x = rnd.rational(), y = rnd.rational();
            zq[k] = Quaternion(x) + Jf * y;
            zc[k] = Quaternion(x, y, 0, 0);
        }
        Quaternion va = eval_pointwise(pa, zc), vb = eval_pointwise(pb, zc);
        auto lift = [&](const Quaternion& c) { return Quaternion(c.w) + Jf * c.x; };
        Quaternion recomposed = lift(va) + lift(vb) * Jp;
        CHECK(recomposed == eval_pointwise(p, zq));
    }
}

TEST_CASE("orbit vanishing checks") {
    ArrangedOrbit sphere_i{{Rational(0)}, {Rational(1)}, {1}};
    CHECK(orbit_vanishing_check(P1("q^2 + 1"), sphere_i));
    CHECK_FALSE(orbit_vanishing_check(P1("q - i"), sphere_i));

    auto orbit_ii = orbit_of(canonicalize({I, I}));
    REQUIRE(orbit_ii);
    CHECK(orbit_vanishing_check(P2("q1^2 - q2^2"), *orbit_ii));
    // cross-check at rational points of the orbit
    RandomQuat rnd(36);
    for (int t = 0; t < 5; ++t) {
        Quaternion u = rnd.unit_imaginary();
        CHECK(eval_pointwise(P2("q1^2 - q2^2"), {u, u}).is_zero());
    }
}

TEST_CASE("orbit vanishing over irrational magnitudes") {
    // sphere of i+j: y^2 = 2; q^2 + 2 vanishes on it
    auto orb = orbit_of(canonicalize({I + J}));
    REQUIRE(orb);
    CHECK((*orb).y2 == std::vector<Rational>{Rational(2)});
    CHECK(orbit_vanishing_check(P1("q^2 + 2"), *orb));
    CHECK_FALSE(orbit_vanishing_check(P1("q^2 + 1"), *orb));
}

TEST_CASE("ring laws on random triples") {
    RandomQuat rnd(37);
    for (int t = 0; t < 300; ++t) {
        SlicePoly p = random_poly(rnd, 2, 2, 3), q = random_poly(rnd, 2, 2, 3),
                  r = random_poly(rnd, 2, 2, 3);
        CHECK(star_mul(star_mul(p, q), r) == star_mul(p, star_mul(q, r)));
        CHECK(star_mul(p, q + r) == star_mul(p, q) + star_mul(p, r));
        CHECK(star_mul(p + q, r) == star_mul(p, r) + star_mul(q, r));
    }
}

TEST_CASE("degree additivity (no zero divisors)") {
    RandomQuat rnd(38);
    for (int t = 0; t < 100; ++t) {
        SlicePoly p = random_poly(rnd, 2, 3, 3), q = random_poly(rnd, 2, 3, 3);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(star_mul(p, q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("real-coefficient polynomials are central") {
    RandomQuat rnd(39);
    for (int t = 0; t < 100; ++t) {
        SlicePoly p = random_poly(rnd, 2, 3, 3);
        SlicePoly r(2);
        for (int j = 0; j < 3; ++j) {
            MultiIndex e = {static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(j % 2)};
            r.add_term(e, Quaternion(rnd.rational()));
        }
        CHECK(star_mul(r, p) == star_mul(p, r));
    }
}

TEST_CASE("constants commute with variables") {
    RandomQuat rnd(40);
    for (int t = 0; t < 50; ++t) {
        SlicePoly c = SlicePoly::constant(2, rnd.quaternion());
        for (int k = 0; k < 2; ++k) {
            SlicePoly v = SlicePoly::variable(2, k);
            CHECK(star_mul(c, v) == star_mul(v, c));
        }
    }
}

TEST_CASE("star evaluation identity at commuting points") {
    RandomQuat rnd(41);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rnd.raw() % 3);
        Quaternion u = rnd.unit_imaginary();
        std::vector<Quaternion> a(n);
        for (int k = 0; k < n; ++k) a[k] = Quaternion(rnd.rational(2, 2)) + u * rnd.rational(2, 2);
        SlicePoly p = random_poly(rnd, n, 2, 3), q = random_poly(rnd, n, 2, 3);
        if (t % 2 == 0) {
            // constructed P(a) = 0 case
            p = p - SlicePoly::constant(n, eval_pointwise(p, a));
        }
        Quaternion pa = eval_pointwise(p, a);
        Quaternion lhs = eval_pointwise(star_mul(p, q), a);
        if (pa.is_zero()) {
            CHECK(lhs.is_zero());
        } else {
            CommutingPoint moved = transport_point(canonicalize(a), pa);
            CHECK(lhs == pa * eval_pointwise(q, moved.coords));
        }
    }
}
