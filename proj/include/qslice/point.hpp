#ifndef QSLICE_POINT_HPP
#define QSLICE_POINT_HPP

#include "qslice/quaternion.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qslice {

/// Tuple of pairwise commuting quaternions, i.e. a point of some slice C_J^n,
/// stored together with its exact canonical slice data: real parts xs and a
/// primitive rational imaginary direction dir with Im(a_k) = ts[k] * dir.
struct CommutingPoint {
    std::vector<Quaternion> coords;
    std::vector<Rational> xs;
    std::vector<Rational> ts;
    Quaternion dir;  // zero iff the point is real

    bool is_real() const { return dir.is_zero(); }
    std::size_t nvars() const { return coords.size(); }

    friend bool operator==(const CommutingPoint& a, const CommutingPoint& b) {
        return a.coords == b.coords;
    }
};

/// Arranged spherical orbit of a commuting point: real parts x, squared
/// imaginary magnitudes y2 and relative signs, normalized so that the first
/// nonzero sign is +1. Two orbits are equal iff their normalized data agree.
struct ArrangedOrbit {
    std::vector<Rational> x;
    std::vector<Rational> y2;
    std::vector<int> sgn;

    std::size_t nvars() const { return x.size(); }

    friend bool operator==(const ArrangedOrbit& a, const ArrangedOrbit& b) {
        return a.x == b.x && a.y2 == b.y2 && a.sgn == b.sgn;
    }
    friend bool operator!=(const ArrangedOrbit& a, const ArrangedOrbit& b) { return !(a == b); }
    friend bool operator<(const ArrangedOrbit& a, const ArrangedOrbit& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y2 != b.y2) return a.y2 < b.y2;
        return a.sgn < b.sgn;
    }

    /// Common radicand m and rational factors tau with y_k = tau_k * sqrt(m).
    /// Empty when the magnitudes are not commensurable (cannot happen for
    /// orbits of rational points).
    std::optional<std::pair<Rational, std::vector<Rational>>> slice_params() const {
        Rational m{0};
        for (std::size_t k = 0; k < y2.size(); ++k)
            if (y2[k] != 0) { m = y2[k]; break; }
        if (m == 0) return std::nullopt;
        std::vector<Rational> tau(y2.size(), Rational(0));
        for (std::size_t k = 0; k < y2.size(); ++k) {
            if (y2[k] == 0) continue;
            auto t = exact_sqrt(y2[k] / m);
            if (!t) return std::nullopt;
            tau[k] = (sgn[k] < 0) ? -*t : *t;
        }
        return std::make_pair(m, std::move(tau));
    }

    /// Representative point in C_i^n, when the magnitudes are rational.
    std::optional<std::vector<Quaternion>> rational_representative() const {
        std::vector<Quaternion> pt(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) {
            auto yk = exact_sqrt(y2[k]);
            if (!yk) return std::nullopt;
            pt[k] = Quaternion(x[k], (sgn[k] < 0) ? -*yk : *yk, 0, 0);
        }
        return pt;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "S[";
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (k) os << ",";
            os << "(" << qslice::to_string(x[k]) << ",";
            auto yk = exact_sqrt(y2[k]);
            if (yk)
                os << qslice::to_string((sgn[k] < 0) ? Rational(-*yk) : *yk);
            else
                os << (sgn[k] < 0 ? "-" : "") << "sqrt(" << qslice::to_string(y2[k]) << ")";
            os << ")";
        }
        os << "]";
        return os.str();
    }
};

/// Validates pairwise commutation and extracts the canonical slice data.
/// Rejection here is exactly the boundary between V and V_c.
inline CommutingPoint canonicalize(const std::vector<Quaternion>& coords) {
    for (std::size_t l = 0; l < coords.size(); ++l)
        for (std::size_t m = l + 1; m < coords.size(); ++m)
            if (!commutes(coords[l], coords[m]))
                throw std::domain_error("point has non-commuting components");
    CommutingPoint p;
    p.coords = coords;
    p.xs.resize(coords.size());
    p.ts.assign(coords.size(), Rational(0));
    for (std::size_t k = 0; k < coords.size(); ++k) p.xs[k] = coords[k].re();

    // primitive direction from the first nonreal component
    for (const auto& c : coords) {
        if (c.is_real()) continue;
        Quaternion v = c.im();
        Integer l = boost::multiprecision::lcm(
            boost::multiprecision::lcm(denom(v.x), denom(v.y)), denom(v.z));
        Integer gx = numer(v.x * l), gy = numer(v.y * l), gz = numer(v.z * l);
        Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(gx), abs(gy)), abs(gz));
        Quaternion dir{0, Rational(gx, g), Rational(gy, g), Rational(gz, g)};
        if (dir.x < 0 || (dir.x == 0 && (dir.y < 0 || (dir.y == 0 && dir.z < 0)))) dir = -dir;
        p.dir = dir;
        break;
    }
    if (p.dir.is_zero()) return p;  // real point

    for (std::size_t k = 0; k < coords.size(); ++k) {
        Quaternion v = coords[k].im();
        if (v.is_zero()) continue;
        Rational t;
        if (p.dir.x != 0) t = v.x / p.dir.x;
        else if (p.dir.y != 0) t = v.y / p.dir.y;
        else t = v.z / p.dir.z;
        if (v != t * p.dir)
            throw std::domain_error("point has non-commuting components");  // non-parallel imaginaries
        p.ts[k] = t;
    }
    return p;
}

/// Orbit of a commuting point under simultaneous conjugation; nullopt for a
/// real point (which is fixed by conjugation).
inline std::optional<ArrangedOrbit> orbit_of(const CommutingPoint& p) {
    if (p.is_real()) return std::nullopt;
    ArrangedOrbit o;
    o.x = p.xs;
    Rational d2 = p.dir.im_norm_sq();
    o.y2.resize(p.ts.size());
    o.sgn.resize(p.ts.size());
    int flip = 0;
    for (std::size_t k = 0; k < p.ts.size(); ++k) {
        o.y2[k] = p.ts[k] * p.ts[k] * d2;
        o.sgn[k] = sign(p.ts[k]);
        if (flip == 0 && o.sgn[k] != 0) flip = o.sgn[k];
    }
    if (flip < 0)
        for (auto& s : o.sgn) s = -s;
    return o;
}

inline std::optional<ArrangedOrbit> orbit_of(const std::vector<Quaternion>& coords) {
    return orbit_of(canonicalize(coords));
}

/// Simultaneous conjugation (lambda^-1 a_1 lambda, ..., lambda^-1 a_n lambda).
inline CommutingPoint transport_point(const CommutingPoint& p, const Quaternion& lambda) {
    if (lambda.is_zero()) throw std::domain_error("transport by zero quaternion");
    Quaternion li = lambda.inverse();
    std::vector<Quaternion> out(p.coords.size());
    for (std::size_t k = 0; k < p.coords.size(); ++k) out[k] = li * p.coords[k] * lambda;
    return canonicalize(out);
}

}  // namespace qslice

#endif
