#include "qslice/parser.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qslice;

TEST_CASE("parse star powers") {
    SlicePoly p = parse_poly("(q+1)^2", 1);
    CHECK(p == parse_poly("q^2 + 2q + 1", 1));
}

TEST_CASE("constants commute with variables in the surface syntax") {
    CHECK(parse_poly("q*i - i*q", 1).is_zero());
}

TEST_CASE("Example-style star product parse") {
    CHECK(parse_poly("(q1-q2)*(q1+q2)", 2) == parse_poly("q1^2 - q2^2", 2));
}

TEST_CASE("literals and signs") {
    CHECK(parse_poly("3/5i", 1) == SlicePoly::constant(1, Quaternion(0, Rational(3, 5), 0, 0)));
    CHECK(parse_poly("-q - -1", 1) == parse_poly("1 - q", 1));
    CHECK(parse_quaternion("1 + 2i - 1/2k") == Quaternion(1, 2, 0, Rational(-1, 2)));
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_poly("q +", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("(q+1", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("q^(2)", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("q3", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("q", 2), ParseError);
}

TEST_CASE("format examples") {
    CHECK(format(parse_poly("(q+1)^2", 1)) == "q^2 + 2q + 1");
    CHECK(format(parse_poly("q^2 k", 1)) == "q^2 k");
    CHECK(format(SlicePoly::zero(3)) == "0");
}

TEST_CASE("format/parse round trip on random polynomials") {
    RandomQuat rnd(55);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rnd.raw() % 3);
        SlicePoly p = random_poly(rnd, n, 4, 5);
        CHECK(parse_poly(format(p), n) == p);
    }
}

TEST_CASE("lex order changes printed term order deterministically") {
    SlicePoly p = parse_poly("q1 q2^2 + q1^2", 2);
    CHECK(format(p, MonomialOrder::degrevlex()) == "q1 q2^2 + q1^2");
    CHECK(format(p, MonomialOrder::lex()) == "q1^2 + q1 q2^2");
}
