#ifndef QSLICE_SLICE_POLY_HPP
#define QSLICE_SLICE_POLY_HPP

#include "qslice/monomial.hpp"
#include "qslice/point.hpp"
#include "qslice/quadext.hpp"
#include "qslice/quaternion.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qslice {

/// Element of (H[q1,...,qn], +, *): finite map from exponent tuples to
/// quaternion coefficients, coefficients on the right of the monomials.
/// Normal form invariant: no stored coefficient is zero.
struct SlicePoly {
    int nvars = 1;
    std::map<MultiIndex, Quaternion> terms;

    SlicePoly() = default;
    explicit SlicePoly(int n) : nvars(n) {
        if (n < 0) throw std::invalid_argument("negative variable count");
    }

    static SlicePoly zero(int n) { return SlicePoly(n); }
    static SlicePoly constant(int n, Quaternion c) {
        SlicePoly p(n);
        if (!c.is_zero()) p.terms.emplace(MultiIndex(n, 0), std::move(c));
        return p;
    }
    static SlicePoly one(int n) { return constant(n, Quaternion(1)); }
    /// q_{k+1}, zero-based k.
    static SlicePoly variable(int n, int k) {
        if (k < 0 || k >= n) throw std::invalid_argument("variable index out of range");
        SlicePoly p(n);
        MultiIndex m(n, 0);
        m[k] = 1;
        p.terms.emplace(std::move(m), Quaternion(1));
        return p;
    }
    static SlicePoly monomial(int n, MultiIndex e, Quaternion c) {
        if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent arity mismatch");
        SlicePoly p(n);
        if (!c.is_zero()) p.terms.emplace(std::move(e), std::move(c));
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && total_degree(terms.begin()->first) == 0);
    }
    bool has_real_coefficients() const {
        for (const auto& [e, c] : terms)
            if (!c.is_real()) return false;
        return true;
    }

    std::int64_t degree() const {
        std::int64_t d = -1;
        for (const auto& [e, c] : terms)
            d = std::max<std::int64_t>(d, static_cast<std::int64_t>(total_degree(e)));
        return d;
    }

    void add_term(const MultiIndex& e, const Quaternion& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend SlicePoly operator+(const SlicePoly& a, const SlicePoly& b) {
        if (a.nvars != b.nvars) throw std::invalid_argument("nvars mismatch");
        SlicePoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend SlicePoly operator-(const SlicePoly& a, const SlicePoly& b) {
        if (a.nvars != b.nvars) throw std::invalid_argument("nvars mismatch");
        SlicePoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, -c);
        return r;
    }
    SlicePoly operator-() const {
        SlicePoly r(nvars);
        for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
        return r;
    }
    SlicePoly& operator+=(const SlicePoly& b) { return *this = *this + b; }
    SlicePoly& operator-=(const SlicePoly& b) { return *this = *this - b; }

    friend bool operator==(const SlicePoly& a, const SlicePoly& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }
    friend bool operator!=(const SlicePoly& a, const SlicePoly& b) { return !(a == b); }

    /// Coefficient scaled on the right of every monomial: P * const c.
    SlicePoly scaled_right(const Quaternion& c) const {
        SlicePoly r(nvars);
        for (const auto& [e, a] : terms) r.add_term(e, a * c);
        return r;
    }
    /// const c * P.
    SlicePoly scaled_left(const Quaternion& c) const {
        SlicePoly r(nvars);
        for (const auto& [e, a] : terms) r.add_term(e, c * a);
        return r;
    }

    /// Leading term under the given order; polynomial must be nonzero.
    std::pair<MultiIndex, Quaternion> lead(const MonomialOrder& ord) const {
        if (terms.empty()) throw std::domain_error("leading term of zero polynomial");
        auto best = terms.begin();
        for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }
};

/// Slice (star) product: monomial exponents add, coefficients multiply,
/// extended bilinearly.
inline SlicePoly star_mul(const SlicePoly& p, const SlicePoly& q) {
    if (p.nvars != q.nvars) throw std::invalid_argument("nvars mismatch");
    SlicePoly r(p.nvars);
    for (const auto& [ep, cp] : p.terms)
        for (const auto& [eq, cq] : q.terms) r.add_term(ep + eq, cp * cq);
    return r;
}

inline SlicePoly star_pow(const SlicePoly& p, unsigned n) {
    SlicePoly r = SlicePoly::one(p.nvars);
    SlicePoly base = p;
    while (n) {
        if (n & 1) r = star_mul(r, base);
        if (n >>= 1) base = star_mul(base, base);
    }
    return r;
}

/// Regular conjugate: coefficients conjugated termwise.
inline SlicePoly regular_conj(const SlicePoly& p) {
    SlicePoly r(p.nvars);
    for (const auto& [e, c] : p.terms) r.terms.emplace(e, c.conj());
    return r;
}

/// Symmetrization P * P^c; always has real coefficients.
inline SlicePoly symmetrization(const SlicePoly& p) { return star_mul(p, regular_conj(p)); }

/// Pointwise evaluation: each monomial as a1^l1 ... an^ln * coeff, variables
/// in index order and the coefficient rightmost, summed.
inline Quaternion eval_pointwise(const SlicePoly& p, const std::vector<Quaternion>& a) {
    if (static_cast<int>(a.size()) != p.nvars) throw std::invalid_argument("point arity mismatch");
    Quaternion acc(0);
    for (const auto& [e, c] : p.terms) {
        Quaternion m(1);
        for (std::size_t k = 0; k < a.size(); ++k)
            if (e[k]) m *= a[k].pow(e[k]);
        acc += m * c;
    }
    return acc;
}

inline Quaternion eval_pointwise(const SlicePoly& p, const CommutingPoint& a) {
    return eval_pointwise(p, a.coords);
}

// ---------------------------------------------------------------------------
// Evaluation along an arranged orbit.
//
// At a point (x_k + y_k J) of the orbit the variables commute and lie in a
// common slice, so each monomial evaluates to (A + B J) with A, B in
// Q(sqrt(m)), independent of J. Summing against the right coefficients gives
// P = U + J V with quaternions U, V over Q(sqrt(m)); the polynomial vanishes
// on the whole orbit iff U = V = 0 (an affine function of J that is zero on
// the full sphere of imaginary units has both parts zero).
// ---------------------------------------------------------------------------

struct OrbitEval {
    Rational m;   // radicand; values live in Q(sqrt(m))
    QuatExt u, v; // value at x + yJ is U + J V for every unit imaginary J
};

inline QuadExt scale(const QuadExt& u, const Rational& r) { return {u.a * r, u.b * r}; }

inline OrbitEval eval_on_orbit(const SlicePoly& p, const ArrangedOrbit& orbit) {
    if (static_cast<int>(orbit.nvars()) != p.nvars)
        throw std::invalid_argument("orbit arity mismatch");
    auto params = orbit.slice_params();
    if (!params) throw std::domain_error("orbit magnitudes are not commensurable");
    auto [m, tau] = *params;
    auto ms = exact_sqrt(m);
    Rational rad = ms ? Rational(0) : m;  // fold square radicands into the rationals

    struct Cx { QuadExt re, im; };
    std::vector<Cx> z(orbit.nvars());
    for (std::size_t k = 0; k < z.size(); ++k) {
        z[k].re = QuadExt(orbit.x[k]);
        z[k].im = ms ? QuadExt(tau[k] * *ms) : QuadExt(Rational(0), tau[k]);
    }
    auto cmul = [&](const Cx& a, const Cx& b) {
        return Cx{mul(a.re, b.re, rad) - mul(a.im, b.im, rad),
                  mul(a.re, b.im, rad) + mul(a.im, b.re, rad)};
    };

    OrbitEval out;
    out.m = rad;
    for (const auto& [e, c] : p.terms) {
        Cx w{QuadExt(Rational(1)), QuadExt()};
        for (std::size_t k = 0; k < z.size(); ++k) {
            Cx base = z[k];
            auto n = e[k];
            while (n) {
                if (n & 1) w = cmul(w, base);
                if (n >>= 1) base = cmul(base, base);
            }
        }
        auto comps = c.components();
        QuadExt* uu[4] = {&out.u.w, &out.u.x, &out.u.y, &out.u.z};
        QuadExt* vv[4] = {&out.v.w, &out.v.x, &out.v.y, &out.v.z};
        for (int i = 0; i < 4; ++i) {
            *uu[i] = *uu[i] + scale(w.re, comps[i]);
            *vv[i] = *vv[i] + scale(w.im, comps[i]);
        }
    }
    return out;
}

/// Exact decision: does P vanish on every point of the orbit?
inline bool orbit_vanishing_check(const SlicePoly& p, const ArrangedOrbit& orbit) {
    auto ev = eval_on_orbit(p, orbit);
    return ev.u.is_zero() && ev.v.is_zero();
}

// ---------------------------------------------------------------------------
// Slice restriction.
// ---------------------------------------------------------------------------

/// Complex-coefficient model: a SlicePoly whose coefficients lie in C_i.
/// Restricting P to C_J^n with an orthogonal rational frame (J, J') writes
/// every coefficient as alpha + beta J' with alpha, beta in C_J and yields
/// z -> P'(z) + P''(z) J'; zeros of P on C_J^n are the common zeros of the
/// pair.
struct SliceSplit {
    SlicePoly first;   // P'
    SlicePoly second;  // P''
};

inline void validate_frame(const Quaternion& J, const Quaternion& Jp) {
    auto dot = [](const Quaternion& a, const Quaternion& b) {
        return a.x * b.x + a.y * b.y + a.z * b.z;
    };
    if (J.re() != 0 || Jp.re() != 0 || J.norm_sq() != 1 || Jp.norm_sq() != 1)
        throw std::invalid_argument("frame units must be rational unit imaginaries");
    if (dot(J, Jp) != 0) throw std::invalid_argument("frame units must be orthogonal");
}

inline SliceSplit slice_split(const SlicePoly& p, const Quaternion& J, const Quaternion& Jp) {
    validate_frame(J, Jp);
    Quaternion K = J * Jp;
    auto dot = [](const Quaternion& a, const Quaternion& b) {
        return a.x * b.x + a.y * b.y + a.z * b.z;
    };
    SliceSplit out{SlicePoly(p.nvars), SlicePoly(p.nvars)};
    for (const auto& [e, c] : p.terms) {
        Quaternion im = c.im();
        Quaternion alpha(c.re(), dot(im, J), 0, 0);
        Quaternion beta(dot(im, Jp), dot(im, K), 0, 0);
        out.first.add_term(e, alpha);
        out.second.add_term(e, beta);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Numeric (double) evaluation for residual diagnostics. Exact results never
// depend on this path.
// ---------------------------------------------------------------------------

struct QuatD {
    double w = 0, x = 0, y = 0, z = 0;

    static QuatD from(const Quaternion& q) {
        return {to_double(q.w), to_double(q.x), to_double(q.y), to_double(q.z)};
    }
    friend QuatD operator+(const QuatD& a, const QuatD& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend QuatD operator*(const QuatD& a, const QuatD& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
};

inline QuatD eval_numeric(const SlicePoly& p, const std::vector<QuatD>& a) {
    if (static_cast<int>(a.size()) != p.nvars) throw std::invalid_argument("point arity mismatch");
    QuatD acc{};
    for (const auto& [e, c] : p.terms) {
        QuatD m{1, 0, 0, 0};
        for (std::size_t k = 0; k < a.size(); ++k)
            for (std::uint32_t t = 0; t < e[k]; ++t) m = m * a[k];
        acc = acc + m * QuatD::from(c);
    }
    return acc;
}

/// Deterministic random polynomial for the property suites.
inline SlicePoly random_poly(RandomQuat& rnd, int nvars, int max_deg, int nterms,
                             int max_abs = 4, int max_den = 2) {
    SlicePoly p(nvars);
    std::uniform_int_distribution<int> expd(0, max_deg);
    for (int t = 0; t < nterms; ++t) {
        MultiIndex e(nvars, 0);
        int budget = max_deg;
        for (int k = 0; k < nvars; ++k) {
            std::uniform_int_distribution<int> d(0, budget);
            int v = d(rnd.engine());
            e[k] = static_cast<std::uint32_t>(v);
            budget -= v;
        }
        p.add_term(e, rnd.quaternion(max_abs, max_den));
    }
    return p;
}

}  // namespace qslice

#endif
