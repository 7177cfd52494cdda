#ifndef QSLICE_QUATERNION_HPP
#define QSLICE_QUATERNION_HPP

#include "qslice/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

namespace qslice {

/// Exact rational quaternion w + x i + y j + z k, the coefficient division
/// ring of the whole library. Hamilton conventions: ij = k, jk = i, ki = j.
struct Quaternion {
    Rational w{0}, x{0}, y{0}, z{0};

    Quaternion() = default;
    Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    explicit Quaternion(Rational real) : w(std::move(real)) {}
    explicit Quaternion(long long real) : w(real) {}

    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
    bool is_real() const { return x == 0 && y == 0 && z == 0; }

    Rational re() const { return w; }
    Quaternion im() const { return {0, x, y, z}; }
    Quaternion conj() const { return {w, -x, -y, -z}; }
    Rational norm_sq() const { return w * w + x * x + y * y + z * z; }
    Rational im_norm_sq() const { return x * x + y * y + z * z; }

    Quaternion inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero quaternion");
        Rational n = norm_sq();
        return {w / n, -x / n, -y / n, -z / n};
    }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend Quaternion operator*(const Quaternion& a, const Rational& s) {
        return {a.w * s, a.x * s, a.y * s, a.z * s};
    }
    friend Quaternion operator*(const Rational& s, const Quaternion& a) { return a * s; }

    Quaternion& operator+=(const Quaternion& b) { return *this = *this + b; }
    Quaternion& operator-=(const Quaternion& b) { return *this = *this - b; }
    Quaternion& operator*=(const Quaternion& b) { return *this = *this * b; }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
    friend bool operator<(const Quaternion& a, const Quaternion& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }

    Quaternion pow(unsigned n) const {
        Quaternion r(1);
        Quaternion base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    std::array<Rational, 4> components() const { return {w, x, y, z}; }
};

/// b ∈ sphere of a: same real part, same squared imaginary norm.
inline bool similar(const Quaternion& a, const Quaternion& b) {
    return a.re() == b.re() && a.im_norm_sq() == b.im_norm_sq();
}

inline bool commutes(const Quaternion& a, const Quaternion& b) { return a * b == b * a; }

/// Cross product of the imaginary parts; zero iff the quaternions commute.
inline Quaternion im_cross(const Quaternion& a, const Quaternion& b) {
    return {0, a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline std::string to_string(const Quaternion& q) {
    if (q.is_zero()) return "0";
    std::string out;
    auto emit = [&](const Rational& c, const char* unit) {
        if (c == 0) return;
        if (out.empty()) {
            out += (c < 0 ? "-" : "");
        } else {
            out += (c < 0 ? " - " : " + ");
        }
        Rational a = c < 0 ? Rational(-c) : c;
        if (a != 1 || unit[0] == '\0') out += to_string(a);
        out += unit;
    };
    emit(q.w, "");
    emit(q.x, "i");
    emit(q.y, "j");
    emit(q.z, "k");
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << to_string(q);
}

/// Rational unit imaginary from the Pythagorean-quadruple parametrization:
/// (2u, 2v, u^2+v^2-1) / (u^2+v^2+1) always has unit norm.
inline Quaternion rational_unit_imaginary(const Rational& u, const Rational& v) {
    Rational n = u * u + v * v + 1;
    return {0, 2 * u / n, 2 * v / n, (u * u + v * v - 1) / n};
}

/// Deterministic random rationals/quaternions for the property suites.
class RandomQuat {
public:
    explicit RandomQuat(std::uint64_t seed) : rng_(seed) {}

    Rational rational(int max_abs = 6, int max_den = 4) {
        std::uniform_int_distribution<int> num(-max_abs, max_abs);
        std::uniform_int_distribution<int> den(1, max_den);
        return Rational(num(rng_), den(rng_));
    }
    Quaternion quaternion(int max_abs = 6, int max_den = 4) {
        return {rational(max_abs, max_den), rational(max_abs, max_den),
                rational(max_abs, max_den), rational(max_abs, max_den)};
    }
    Quaternion nonzero_quaternion(int max_abs = 6, int max_den = 4) {
        for (;;) {
            Quaternion q = quaternion(max_abs, max_den);
            if (!q.is_zero()) return q;
        }
    }
    Quaternion unit_imaginary() {
        return rational_unit_imaginary(rational(4, 3), rational(4, 3));
    }
    std::uint64_t raw() { return rng_(); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace qslice

#endif
