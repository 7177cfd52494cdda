#ifndef QSLICE_QUADEXT_HPP
#define QSLICE_QUADEXT_HPP

#include "qslice/rational.hpp"

#include <stdexcept>

namespace qslice {

/// Element a + b*sqrt(m) of the quadratic extension Q(sqrt(m)); the radicand
/// m is carried by the surrounding computation, not the value.
struct QuadExt {
    Rational a{0}, b{0};

    QuadExt() = default;
    QuadExt(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QuadExt(Rational a_) : a(std::move(a_)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend QuadExt operator+(const QuadExt& u, const QuadExt& v) { return {u.a + v.a, u.b + v.b}; }
    friend QuadExt operator-(const QuadExt& u, const QuadExt& v) { return {u.a - v.a, u.b - v.b}; }
    QuadExt operator-() const { return {-a, -b}; }
    friend bool operator==(const QuadExt& u, const QuadExt& v) { return u.a == v.a && u.b == v.b; }
    friend bool operator!=(const QuadExt& u, const QuadExt& v) { return !(u == v); }
};

inline QuadExt mul(const QuadExt& u, const QuadExt& v, const Rational& m) {
    return {u.a * v.a + m * u.b * v.b, u.a * v.b + u.b * v.a};
}

// Callers keep m square-free in spirit: when m is a perfect square the
// radical is folded into the rational part upfront, so b = 0 throughout.
inline QuadExt inv(const QuadExt& u, const Rational& m) {
    Rational n = u.a * u.a - m * u.b * u.b;
    if (n == 0) {
        if (u.is_zero()) throw std::domain_error("inverse of zero in Q(sqrt(m))");
        throw std::logic_error("non-canonical element of Q(sqrt(m))");
    }
    return {u.a / n, -u.b / n};
}

inline double to_double(const QuadExt& u, double sqrt_m) {
    return to_double(u.a) + to_double(u.b) * sqrt_m;
}

/// Quaternion with components in Q(sqrt(m)).
struct QuatExt {
    QuadExt w, x, y, z;

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }

    friend QuatExt operator+(const QuatExt& a, const QuatExt& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend QuatExt operator-(const QuatExt& a, const QuatExt& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    QuatExt operator-() const { return {-w, -x, -y, -z}; }
    QuatExt conj() const { return {w, -x, -y, -z}; }
};

inline QuatExt mul(const QuatExt& a, const QuatExt& b, const Rational& m) {
    auto p = [&](const QuadExt& u, const QuadExt& v) { return mul(u, v, m); };
    return {p(a.w, b.w) - p(a.x, b.x) - p(a.y, b.y) - p(a.z, b.z),
            p(a.w, b.x) + p(a.x, b.w) + p(a.y, b.z) - p(a.z, b.y),
            p(a.w, b.y) - p(a.x, b.z) + p(a.y, b.w) + p(a.z, b.x),
            p(a.w, b.z) + p(a.x, b.y) - p(a.y, b.x) + p(a.z, b.w)};
}

inline QuadExt norm_sq(const QuatExt& a, const Rational& m) {
    return mul(a.w, a.w, m) + mul(a.x, a.x, m) + mul(a.y, a.y, m) + mul(a.z, a.z, m);
}

inline QuatExt scale(const QuatExt& a, const QuadExt& s, const Rational& m) {
    return {mul(a.w, s, m), mul(a.x, s, m), mul(a.y, s, m), mul(a.z, s, m)};
}

inline QuatExt inverse(const QuatExt& a, const Rational& m) {
    return scale(a.conj(), inv(norm_sq(a, m), m), m);
}

}  // namespace qslice

#endif
