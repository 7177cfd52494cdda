#include "qslice/quaternion.hpp"
#include "qslice/point.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qslice;

namespace {
const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();
}  // namespace

TEST_CASE("Hamilton multiplication table") {
    CHECK(I * J == K);
    CHECK(J * K == I);
    CHECK(K * I == J);
    CHECK(J * I == -K);
    CHECK(I * I == Quaternion(-1));
    CHECK(J * J == Quaternion(-1));
    CHECK(K * K == Quaternion(-1));
}

TEST_CASE("inverse of 1+j") {
    Quaternion a = Quaternion(1) + J;
    Quaternion inv = a.inverse();
    CHECK(inv == Quaternion(Rational(1, 2), 0, Rational(-1, 2), 0));
    CHECK(inv * a == Quaternion(1));
    CHECK(a * inv == Quaternion(1));
}

TEST_CASE("conjugate and squared norm") {
    Quaternion a{2, 3, -1, 0};
    CHECK(a.conj() == Quaternion(2, -3, 1, 0));
    CHECK(a.norm_sq() == 14);
    CHECK(a.conj() * a == Quaternion(14));
}

TEST_CASE("inversion of zero is a domain error") {
    CHECK_THROWS_AS(Quaternion(0).inverse(), std::domain_error);
}

TEST_CASE("similarity examples") {
    CHECK(similar(I, J));
    CHECK(similar(I, -I));
    CHECK_FALSE(similar(Quaternion(1) + I, I));
}

TEST_CASE("commutation examples") {
    CHECK(commutes(I, Quaternion(2) - I * Rational(3)));
    CHECK_FALSE(commutes(I, J));
    CHECK(commutes(Quaternion(5), J));
}

TEST_CASE("conjugation is an anti-homomorphism") {
    RandomQuat rnd(20240601);
    for (int t = 0; t < 200; ++t) {
        Quaternion a = rnd.quaternion(), b = rnd.quaternion();
        CHECK((a * b).conj() == b.conj() * a.conj());
    }
}

TEST_CASE("inverse equals conj over norm_sq") {
    RandomQuat rnd(20240602);
    for (int t = 0; t < 200; ++t) {
        Quaternion a = rnd.nonzero_quaternion();
        Rational n = a.norm_sq();
        Quaternion expect{a.w / n, -a.x / n, -a.y / n, -a.z / n};
        CHECK(a.inverse() == expect);
        CHECK(a.inverse() * a == Quaternion(1));
    }
}

TEST_CASE("commutes agrees with vanishing imaginary cross product") {
    RandomQuat rnd(20240603);
    for (int t = 0; t < 1000; ++t) {
        Quaternion a = rnd.quaternion(3, 2), b = rnd.quaternion(3, 2);
        CHECK(commutes(a, b) == im_cross(a, b).is_zero());
    }
}

TEST_CASE("similar is an equivalence relation") {
    RandomQuat rnd(20240604);
    for (int t = 0; t < 300; ++t) {
        Quaternion a = rnd.quaternion(2, 2), b = rnd.quaternion(2, 2), c = rnd.quaternion(2, 2);
        CHECK(similar(a, a));
        CHECK(similar(a, b) == similar(b, a));
        if (similar(a, b) && similar(b, c)) CHECK(similar(a, c));
    }
}

TEST_CASE("rational unit imaginaries square to -1") {
    RandomQuat rnd(20240605);
    for (int t = 0; t < 100; ++t) {
        Quaternion u = rnd.unit_imaginary();
        CHECK(u * u == Quaternion(-1));
    }
}

TEST_CASE("quaternion text form") {
    CHECK(to_string(Quaternion(2, -3, 0, Rational(1, 2))) == "2 - 3i + 1/2k");
    CHECK(to_string(Quaternion(0)) == "0");
    CHECK(to_string(I) == "i");
}
