#ifndef QSLICE_UNIVAR_HPP
#define QSLICE_UNIVAR_HPP

#include "qslice/cxroots.hpp"
#include "qslice/point.hpp"
#include "qslice/slice_poly.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qslice {

inline constexpr double kNumericTolerance = 1e-12;

/// Right division in H[q]: P = D * Q + R with deg R < deg D, unique.
/// P lies in the right ideal <D> iff R = 0.
struct DivisionResult {
    SlicePoly quotient;
    SlicePoly remainder;
};

inline DivisionResult right_divide(const SlicePoly& p, const SlicePoly& d) {
    if (p.nvars != 1 || d.nvars != 1) throw std::invalid_argument("univariate polynomials expected");
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto ord = MonomialOrder::degrevlex();
    auto [de, dc] = d.lead(ord);
    Quaternion dlc_inv = dc.inverse();
    SlicePoly q(1), r = p;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        auto [re, rc] = r.lead(ord);
        MultiIndex shift{re[0] - de[0]};
        Quaternion c = dlc_inv * rc;
        q.add_term(shift, c);
        r -= star_mul(d, SlicePoly::monomial(1, shift, c));
    }
    return {q, r};
}

/// One-variable zero structure: isolated points and whole spheres.
struct IsolatedZero {
    bool exact = true;
    Quaternion value;   // meaningful when exact
    QuatD approx{};     // always filled
    double residual = 0;
    int multiplicity = 1;  // exponent of the matching factor of P^s
};

struct SphereZero {
    bool exact = true;
    Rational x, y2;        // meaningful when exact
    double x_num = 0, y2_num = 0;
    double residual = 0;
    int multiplicity = 1;
};

struct UnivarZeroSet {
    std::vector<IsolatedZero> isolated;
    std::vector<SphereZero> spheres;

    bool all_exact() const {
        for (const auto& z : isolated)
            if (!z.exact) return false;
        for (const auto& s : spheres)
            if (!s.exact) return false;
        return true;
    }
};

namespace detail {

inline QuatD quatd_from_ext(const QuatExt& q, double sm) {
    return {to_double(q.w, sm), to_double(q.x, sm), to_double(q.y, sm), to_double(q.z, sm)};
}

/// Root of P on the sphere (x, y2) when P does not vanish on all of it:
/// writing P(x + yJ) = U + J V, the unique zero has J = -U V^{-1}.
struct SphereProbe {
    bool whole_sphere = false;
    std::optional<Quaternion> exact_root;
    QuatD approx_root{};
    bool has_root = false;
};

inline SphereProbe probe_sphere(const SlicePoly& p, const Rational& x, const Rational& y2) {
    ArrangedOrbit orbit{{x}, {y2}, {1}};
    OrbitEval ev = eval_on_orbit(p, orbit);
    SphereProbe out;
    if (ev.u.is_zero() && ev.v.is_zero()) {
        out.whole_sphere = true;
        return out;
    }
    if (norm_sq(ev.v, ev.m).is_zero()) return out;  // no zero on this sphere
    QuatExt J = -mul(ev.u, inverse(ev.v, ev.m), ev.m);
    QuatExt J2 = mul(J, J, ev.m);
    QuadExt minus_one(Rational(-1));
    if (!(J2.w == minus_one && J2.x.is_zero() && J2.y.is_zero() && J2.z.is_zero()))
        return out;
    out.has_root = true;

    // root = x + y J with y = sqrt(y2); rational when the radical cancels
    auto ys = exact_sqrt(y2);
    bool folded = ev.m == 0;  // eval folded the radical into the rationals
    if (folded && ys && J.w.is_zero() && J.x.is_rational() && J.y.is_rational() &&
        J.z.is_rational()) {
        Quaternion root(x, *ys * J.x.a, *ys * J.y.a, *ys * J.z.a);
        if (eval_pointwise(p, std::vector<Quaternion>{root}).is_zero()) {
            out.exact_root = root;
            return out;
        }
    }
    if (!folded && J.w.is_zero()) {
        // y * (a + b sqrt(m)) = b m + a sqrt(m): rational iff a = 0
        if (J.x.a == 0 && J.y.a == 0 && J.z.a == 0) {
            Quaternion root(x, J.x.b * ev.m, J.y.b * ev.m, J.z.b * ev.m);
            if (eval_pointwise(p, std::vector<Quaternion>{root}).is_zero()) {
                out.exact_root = root;
                return out;
            }
        }
    }
    double sm = std::sqrt(std::max(0.0, to_double(ev.m == 0 ? Rational(1) : ev.m)));
    double y = std::sqrt(std::max(0.0, to_double(y2)));
    QuatD Jn = quatd_from_ext(J, sm);
    out.approx_root = {to_double(x), y * Jn.x, y * Jn.y, y * Jn.z};
    out.approx_root.w += y * Jn.w;  // J.w is zero in theory; keep the defect visible
    return out;
}

inline int quad_multiplicity(const SlicePoly& s, const Rational& x, const Rational& y2) {
    SlicePoly c = SlicePoly::monomial(1, {2}, Quaternion(1));
    c.add_term({1}, Quaternion(-2 * x));
    c.add_term({0}, Quaternion(x * x + y2));
    SlicePoly cur = s;
    int m = 0;
    for (;;) {
        auto dr = right_divide(cur, c);
        if (!dr.remainder.is_zero()) break;
        cur = dr.quotient;
        ++m;
    }
    return m;
}

}  // namespace detail

/// Zero set of a nonzero univariate polynomial, via the real-coefficient
/// symmetrization: its complex roots classify into real points, whole
/// spheres, and spheres carrying a single zero of P.
inline UnivarZeroSet roots(const SlicePoly& p) {
    if (p.nvars != 1) throw std::invalid_argument("univariate polynomial expected");
    if (p.is_zero()) throw std::domain_error("zero polynomial vanishes everywhere");
    UnivarZeroSet out;
    if (p.degree() == 0) return out;

    SlicePoly s = symmetrization(p);
    CxPoly sc = to_cx_poly(s);  // real rational coefficients
    RootSet rs = find_roots(sc);

    // exact Gaussian roots of the symmetrization
    std::vector<std::pair<std::pair<Rational, Rational>, int>> sphere_cand;  // ((x,y2), mult)
    for (const auto& er : rs.exact) {
        if (er.z.is_real()) {
            // every real root of P^s is a root of P: P^s(x0) = |P(x0)|^2
            Quaternion x0(er.z.re);
            IsolatedZero z;
            z.value = x0;
            z.approx = QuatD::from(x0);
            z.multiplicity = er.mult;
            out.isolated.push_back(std::move(z));
        } else if (er.z.im > 0) {
            sphere_cand.push_back({{er.z.re, er.z.im * er.z.im}, er.mult});
        }
    }
    for (const auto& qf : rs.quads) {
        if (qf.y2 > 0) {
            sphere_cand.push_back({{qf.x, qf.y2}, qf.mult});
        } else {
            // irrational real pair x +- sqrt(-y2): roots of P, numeric form only
            double xd = to_double(qf.x), d = std::sqrt(to_double(-qf.y2));
            for (double r : {xd - d, xd + d}) {
                IsolatedZero z;
                z.exact = false;
                z.approx = {r, 0, 0, 0};
                z.residual = eval_numeric(p, {z.approx}).norm();
                z.multiplicity = qf.mult;
                out.isolated.push_back(std::move(z));
            }
        }
    }

    for (const auto& [key, mult] : sphere_cand) {
        const auto& [x, y2] = key;
        auto probe = detail::probe_sphere(p, x, y2);
        if (probe.whole_sphere) {
            SphereZero sz;
            sz.x = x;
            sz.y2 = y2;
            sz.x_num = to_double(x);
            sz.y2_num = to_double(y2);
            sz.multiplicity = detail::quad_multiplicity(s, x, y2);
            out.spheres.push_back(std::move(sz));
        } else if (probe.has_root) {
            IsolatedZero z;
            z.multiplicity = mult;
            if (probe.exact_root) {
                z.value = *probe.exact_root;
                z.approx = QuatD::from(z.value);
            } else {
                z.exact = false;
                z.approx = probe.approx_root;
                z.residual = eval_numeric(p, {z.approx}).norm();
            }
            out.isolated.push_back(std::move(z));
        }
    }

    // numeric leftovers of the symmetrization spectrum
    std::vector<std::complex<double>> pending;
    for (const auto& nr : rs.numeric) {
        if (std::abs(nr.z.imag()) < 1e-9) {
            IsolatedZero z;
            z.exact = false;
            z.approx = {nr.z.real(), 0, 0, 0};
            z.residual = eval_numeric(p, {z.approx}).norm();
            out.isolated.push_back(std::move(z));
        } else if (nr.z.imag() > 0) {
            pending.push_back(nr.z);
        }
    }
    for (const auto& z : pending) {
        double x = z.real(), y = z.imag();
        // P(x + yJ) = U + JV numerically, via J = i and J = j
        QuatD pi = eval_numeric(p, {{x, y, 0, 0}});
        QuatD pj = eval_numeric(p, {{x, 0, y, 0}});
        if (pi.norm() < kNumericTolerance && pj.norm() < kNumericTolerance) {
            SphereZero sz;
            sz.exact = false;
            sz.x_num = x;
            sz.y2_num = y * y;
            sz.residual = std::max(pi.norm(), pj.norm());
            out.spheres.push_back(std::move(sz));
        } else {
            // U = (P(x+yi) + P(x-yi))/2, V = i_part; solve U + JV = 0
            QuatD pc = eval_numeric(p, {{x, -y, 0, 0}});
            QuatD U{(pi.w + pc.w) / 2, (pi.x + pc.x) / 2, (pi.y + pc.y) / 2, (pi.z + pc.z) / 2};
            QuatD D{(pi.w - pc.w) / 2, (pi.x - pc.x) / 2, (pi.y - pc.y) / 2, (pi.z - pc.z) / 2};
            // D = i V  =>  V = -i D
            QuatD V = QuatD{0, -1, 0, 0} * D;
            double n = V.w * V.w + V.x * V.x + V.y * V.y + V.z * V.z;
            if (n < 1e-30) continue;
            QuatD Vinv{V.w / n, -V.x / n, -V.y / n, -V.z / n};
            QuatD J = QuatD{-U.w, -U.x, -U.y, -U.z} * Vinv;
            QuatD root{x + y * J.w, y * J.x, y * J.y, y * J.z};
            IsolatedZero iz;
            iz.exact = false;
            iz.approx = root;
            iz.residual = eval_numeric(p, {root}).norm();
            if (iz.residual < 1e-6 * (1 + std::abs(x) + std::abs(y))) out.isolated.push_back(iz);
        }
    }
    return out;
}

/// Specialization of the symmetrized-ideal identity to principal univariate
/// ideals: the symmetrized zero set of P must equal the zero set of P^s.
inline bool zero_set_symmetrization_check(const SlicePoly& p, double tol = 1e-9) {
    UnivarZeroSet zp = roots(p);
    UnivarZeroSet zs = roots(symmetrization(p));

    struct Key { double x, y2; bool real_point; };
    auto collect_sym = [&](const UnivarZeroSet& z, bool symmetrize) {
        std::vector<Key> keys;
        for (const auto& iso : z.isolated) {
            double x = iso.exact ? to_double(iso.value.re()) : iso.approx.w;
            double y2n = iso.exact ? to_double(iso.value.im_norm_sq())
                                   : iso.approx.x * iso.approx.x + iso.approx.y * iso.approx.y +
                                         iso.approx.z * iso.approx.z;
            if (symmetrize && y2n > tol)
                keys.push_back({x, y2n, false});
            else
                keys.push_back({x, y2n, y2n <= tol});
        }
        for (const auto& s : z.spheres)
            keys.push_back({s.exact ? to_double(s.x) : s.x_num,
                            s.exact ? to_double(s.y2) : s.y2_num, false});
        // dedupe within tolerance
        std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
            if (a.x != b.x) return a.x < b.x;
            return a.y2 < b.y2;
        });
        std::vector<Key> ded;
        for (const auto& k : keys) {
            if (!ded.empty() && std::abs(ded.back().x - k.x) < tol &&
                std::abs(ded.back().y2 - k.y2) < tol)
                continue;
            ded.push_back(k);
        }
        return ded;
    };

    auto a = collect_sym(zp, true);
    auto b = collect_sym(zs, false);
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (std::abs(a[k].x - b[k].x) > tol || std::abs(a[k].y2 - b[k].y2) > tol) return false;
    return true;
}

}  // namespace qslice

#endif
