#ifndef QSLICE_RATIONAL_HPP
#define QSLICE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace qslice {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline int sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

/// Parses "p" or "p/q" with optional leading sign.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer p(s.substr(0, slash));
        Integer q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

/// Exact square root, if the rational is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer n = boost::multiprecision::sqrt(numer(r));
    Integer d = boost::multiprecision::sqrt(denom(r));
    if (n * n != numer(r) || d * d != denom(r)) return std::nullopt;
    return Rational(n, d);
}

/// Nearest rational with denominator bounded by max_den (continued fractions).
/// Used to snap numeric roots onto exact candidates; every candidate produced
/// here is verified by exact arithmetic before being trusted.
inline Rational snap_to_rational(double v, const Integer& max_den = Integer(1000000)) {
    if (!std::isfinite(v)) throw std::domain_error("cannot snap non-finite value");
    bool neg = v < 0;
    double x = neg ? -v : v;
    // continued fraction convergents p/q
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e18) break;
        Integer a(static_cast<long long>(fl));
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? -r : r;
}

}  // namespace qslice

#endif
