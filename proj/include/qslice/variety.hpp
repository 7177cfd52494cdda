#ifndef QSLICE_VARIETY_HPP
#define QSLICE_VARIETY_HPP

#include "qslice/cxroots.hpp"
#include "qslice/ideal.hpp"
#include "qslice/univar.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qslice {

/// Raised when an instance falls outside the supported solver classes; the
/// caller decides how to surface it (the CLI maps it to its own exit code).
struct UnsupportedInstance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numeric entries are display/diagnostic only and never feed certificates.
struct VcNumericPoint {
    std::vector<QuatD> coords;
    double residual = 0;
};
struct VcNumericOrbit {
    std::vector<double> x, y2;
    double residual = 0;
};

/// The slice algebraic set V_c(I) for the supported instance classes: a
/// finite union of real points, whole spherical orbits, and isolated
/// non-real points (whose orbit is not contained in the set).
struct VcResult {
    std::vector<CommutingPoint> real_points;
    std::vector<ArrangedOrbit> orbits;
    std::vector<CommutingPoint> isolated_nonreal;
    std::vector<VcNumericPoint> numeric_points;
    std::vector<VcNumericOrbit> numeric_orbits;
    bool exact = true;      // false when numeric entries or dropped branches exist
    bool partial = false;   // true for per-slice catalog computations
    std::vector<std::string> notes;

    bool empty() const {
        return real_points.empty() && orbits.empty() && isolated_nonreal.empty() &&
               numeric_points.empty() && numeric_orbits.empty();
    }
    std::size_t component_count() const {
        return real_points.size() + orbits.size() + isolated_nonreal.size();
    }
};

namespace detail {

inline bool point_less(const CommutingPoint& a, const CommutingPoint& b) {
    return a.coords < b.coords;
}

inline void dedupe(VcResult& v) {
    auto uniq_pts = [](std::vector<CommutingPoint>& pts) {
        std::sort(pts.begin(), pts.end(), point_less);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    };
    uniq_pts(v.real_points);
    uniq_pts(v.isolated_nonreal);
    std::sort(v.orbits.begin(), v.orbits.end());
    v.orbits.erase(std::unique(v.orbits.begin(), v.orbits.end()), v.orbits.end());
}

}  // namespace detail

/// Symmetrization of a set: every point is replaced by its orbit, orbits are
/// kept, and the result is deduplicated. Idempotent.
inline VcResult symmetrize_set(const VcResult& v) {
    VcResult out = v;
    for (const auto& p : v.isolated_nonreal) {
        auto o = orbit_of(p);
        if (!o) throw std::logic_error("non-real point without an orbit");
        out.orbits.push_back(*o);
    }
    out.isolated_nonreal.clear();
    out.numeric_points.clear();
    for (const auto& p : v.numeric_points) {
        VcNumericOrbit o;
        o.residual = p.residual;
        bool real = true;
        for (const auto& c : p.coords) {
            o.x.push_back(c.w);
            o.y2.push_back(c.x * c.x + c.y * c.y + c.z * c.z);
            real = real && o.y2.back() < 1e-18;
        }
        if (real) out.numeric_points.push_back(p);
        else out.numeric_orbits.push_back(std::move(o));
    }
    detail::dedupe(out);
    return out;
}

/// List-of-points form of symmetrization.
inline VcResult symmetrize_set(const std::vector<CommutingPoint>& pts) {
    VcResult v;
    for (const auto& p : pts) {
        if (p.is_real()) v.real_points.push_back(p);
        else v.isolated_nonreal.push_back(p);
    }
    return symmetrize_set(v);
}

/// A set is spherically symmetric iff it equals its own symmetrization.
inline bool spherical_symmetry_check(const VcResult& v) { return v.isolated_nonreal.empty(); }

// ---------------------------------------------------------------------------
// Commutative solver over the Gaussian rationals. Polynomials with C_i
// coefficients form a commutative subring of (H[q], *), so the right
// Groebner engine with a lex order doubles as a commutative lex Groebner
// engine; solutions come from the univariate eliminant in the last variable
// followed by exact back-substitution.
// ---------------------------------------------------------------------------

namespace detail {

struct CxSolve {
    std::vector<std::vector<CxRat>> solutions;
    bool complete = true;
    std::vector<std::string> notes;
};

inline bool univariate_in_last(const SlicePoly& p) {
    for (const auto& [e, c] : p.terms)
        for (std::size_t k = 0; k + 1 < e.size(); ++k)
            if (e[k]) return false;
    return true;
}

inline CxPoly last_var_poly(const SlicePoly& p) {
    CxPoly out;
    for (const auto& [e, c] : p.terms) {
        std::uint32_t d = e.back();
        if (out.coeff.size() <= d) out.coeff.resize(d + 1);
        out.coeff[d] = CxRat(c.w, c.x);
    }
    out.normalize();
    return out;
}

/// Substitute the last variable by a C_i constant and drop it.
inline SlicePoly substitute_last(const SlicePoly& p, const CxRat& r) {
    SlicePoly out(p.nvars - 1);
    Quaternion rv = r.to_quaternion();
    for (const auto& [e, c] : p.terms) {
        MultiIndex m(e.begin(), e.end() - 1);
        out.add_term(m, rv.pow(e.back()) * c);
    }
    return out;
}

inline void solve_cx_rec(const std::vector<SlicePoly>& gens_in, std::vector<CxRat>& tail,
                         CxSolve& out) {
    std::vector<SlicePoly> gens;
    for (const auto& g : gens_in)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty())
        throw UnsupportedInstance("positive-dimensional solution component");
    const int n = gens.front().nvars;

    RightIdealBasis ideal(gens, MonomialOrder::lex());
    if (ideal.is_unit_ideal()) return;  // no solutions on this branch
    auto gb = ideal.groebner_polys();

    // eliminant: gcd of the basis elements univariate in the last variable
    CxPoly elim;
    for (const auto& g : gb)
        if (univariate_in_last(g)) elim = elim.is_zero() ? last_var_poly(g) : gcd(elim, last_var_poly(g));
    if (elim.degree() < 1)
        throw UnsupportedInstance("positive-dimensional solution component");

    auto rs = find_roots(elim);
    if (!rs.quads.empty() || !rs.numeric.empty()) {
        out.complete = false;
        out.notes.push_back("dropped non-Gaussian-rational branch of an eliminant");
    }
    for (const auto& root : rs.exact) {
        if (n == 1) {
            std::vector<CxRat> sol{root.z};
            sol.insert(sol.end(), tail.rbegin(), tail.rend());
            out.solutions.push_back(std::move(sol));
            continue;
        }
        std::vector<SlicePoly> next;
        for (const auto& g : gb) next.push_back(substitute_last(g, root.z));
        tail.push_back(root.z);
        solve_cx_rec(next, tail, out);
        tail.pop_back();
    }
}

inline CxSolve solve_cx_system(const std::vector<SlicePoly>& gens) {
    for (const auto& g : gens)
        for (const auto& [e, c] : g.terms)
            if (c.y != 0 || c.z != 0)
                throw std::invalid_argument("commutative solver needs C_i coefficients");
    CxSolve out;
    std::vector<CxRat> tail;
    solve_cx_rec(gens, tail, out);
    // exact solutions re-verify against the input generators
    for (const auto& sol : out.solutions) {
        std::vector<Quaternion> pt;
        for (const auto& z : sol) pt.push_back(z.to_quaternion());
        for (const auto& g : gens)
            if (!eval_pointwise(g, pt).is_zero())
                throw std::logic_error("commutative solution failed verification");
    }
    return out;
}

/// Classify a solution tuple on the slice spanned by unit imaginary J:
/// coordinates x_k + y_k J. Whole orbits are detected exactly.
inline void emit_solution(const std::vector<CxRat>& sol, const Quaternion& J,
                          const std::vector<SlicePoly>& gens, VcResult& out) {
    bool real = true;
    for (const auto& z : sol) real = real && z.is_real();
    std::vector<Quaternion> coords;
    for (const auto& z : sol) coords.push_back(Quaternion(z.re) + J * z.im);
    CommutingPoint p = canonicalize(coords);
    for (const auto& g : gens)
        if (!eval_pointwise(g, p).is_zero())
            throw std::logic_error("slice solution failed verification");
    if (real) {
        out.real_points.push_back(p);
        return;
    }
    auto orbit = orbit_of(p);
    bool whole = true;
    for (const auto& g : gens) whole = whole && orbit_vanishing_check(g, *orbit);
    if (whole) out.orbits.push_back(*orbit);
    else out.isolated_nonreal.push_back(p);
}

}  // namespace detail

struct VcOptions {
    // rational orthogonal frames (J, J') for the per-slice class; empty means
    // classes (a)/(b) only
    std::vector<std::pair<Quaternion, Quaternion>> slice_catalog;
};

inline std::vector<std::pair<Quaternion, Quaternion>> default_slice_catalog() {
    return {{Quaternion::unit_i(), Quaternion::unit_j()},
            {Quaternion(0, Rational(3, 5), Rational(4, 5), 0),
             Quaternion(0, Rational(-4, 5), Rational(3, 5), 0)}};
}

/// V_c(I) for the supported classes: (a) n=1 with arbitrary coefficients,
/// (b) n>=2 with real-coefficient generators (they restrict to the same
/// complex system on every slice), (c) n>=2 general coefficients on a finite
/// slice catalog, reported as partial. Anything else raises
/// UnsupportedInstance rather than risking a silent wrong answer.
inline VcResult vc_compute(const RightIdealBasis& ideal, const VcOptions& opt = {}) {
    VcResult out;
    const auto& gens = ideal.generators();
    const int n = ideal.nvars();

    if (n == 1) {
        auto gb = ideal.groebner_polys();
        if (ideal.is_unit_ideal()) return out;
        // univariate right ideals are principal: the basis is one polynomial
        auto zs = roots(gb.front());
        for (const auto& iso : zs.isolated) {
            if (iso.exact) {
                CommutingPoint p = canonicalize({iso.value});
                if (p.is_real()) out.real_points.push_back(p);
                else out.isolated_nonreal.push_back(p);
            } else {
                out.numeric_points.push_back({{iso.approx}, iso.residual});
                out.exact = false;
            }
        }
        for (const auto& s : zs.spheres) {
            if (s.exact) out.orbits.push_back(ArrangedOrbit{{s.x}, {s.y2}, {1}});
            else {
                out.numeric_orbits.push_back({{s.x_num}, {s.y2_num}, s.residual});
                out.exact = false;
            }
        }
        for (const auto& o : out.orbits)
            for (const auto& g : gens)
                if (!orbit_vanishing_check(g, o))
                    throw std::logic_error("orbit failed re-verification");
        detail::dedupe(out);
        return out;
    }

    bool all_real = true;
    for (const auto& g : gens) all_real = all_real && g.has_real_coefficients();

    if (all_real) {
        // real systems restrict identically to every slice
        auto sol = detail::solve_cx_system(gens);
        if (!sol.complete) out.exact = false;
        out.notes = sol.notes;
        for (const auto& s : sol.solutions)
            detail::emit_solution(s, Quaternion::unit_i(), gens, out);
        detail::dedupe(out);
        return out;
    }

    if (opt.slice_catalog.empty())
        throw UnsupportedInstance(
            "unsupported instance class: non-real multivariate coefficients need a slice catalog");

    out.partial = true;
    out.notes.push_back("per-slice computation over a finite catalog; other slices not examined");
    for (const auto& [J, Jp] : opt.slice_catalog) {
        std::vector<SlicePoly> sys;
        for (const auto& g : gens) {
            auto sp = slice_split(g, J, Jp);
            if (!sp.first.is_zero()) sys.push_back(sp.first);
            if (!sp.second.is_zero()) sys.push_back(sp.second);
        }
        if (sys.empty()) throw UnsupportedInstance("positive-dimensional solution component");
        auto sol = detail::solve_cx_system(sys);
        if (!sol.complete) out.exact = false;
        for (const auto& note : sol.notes) out.notes.push_back(note);
        for (const auto& s : sol.solutions) detail::emit_solution(s, J, gens, out);
    }
    detail::dedupe(out);
    return out;
}

// ---------------------------------------------------------------------------
// Set comparison, exact and numeric.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::pair<std::vector<double>, std::vector<double>>> orbit_keys(
    const VcResult& v) {
    std::vector<std::pair<std::vector<double>, std::vector<double>>> keys;
    for (const auto& o : v.orbits) {
        std::vector<double> x, y2;
        for (const auto& c : o.x) x.push_back(to_double(c));
        for (const auto& c : o.y2) y2.push_back(to_double(c));
        keys.emplace_back(x, y2);
    }
    for (const auto& o : v.numeric_orbits) keys.emplace_back(o.x, o.y2);
    return keys;
}

inline bool keys_match(std::vector<std::pair<std::vector<double>, std::vector<double>>> a,
                       std::vector<std::pair<std::vector<double>, std::vector<double>>> b,
                       double tol, bool subset_only) {
    if (subset_only ? a.size() > b.size() : a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& ka : a) {
        bool hit = false;
        for (std::size_t j = 0; j < b.size() && !hit; ++j) {
            if (used[j]) continue;
            double d = 0;
            for (std::size_t t = 0; t < ka.first.size(); ++t)
                d = std::max({d, std::abs(ka.first[t] - b[j].first[t]),
                              std::abs(ka.second[t] - b[j].second[t])});
            if (d <= tol) { used[j] = true; hit = true; }
        }
        if (!hit) return false;
    }
    return true;
}

inline std::vector<std::vector<double>> point_keys(const VcResult& v) {
    std::vector<std::vector<double>> keys;
    for (const auto& p : v.real_points) {
        std::vector<double> k;
        for (const auto& c : p.coords) k.push_back(to_double(c.w));
        keys.push_back(k);
    }
    for (const auto& p : v.numeric_points) {
        std::vector<double> k;
        for (const auto& c : p.coords) k.push_back(c.w);
        keys.push_back(k);
    }
    return keys;
}

inline bool flat_match(std::vector<std::vector<double>> a, std::vector<std::vector<double>> b,
                       double tol, bool subset_only) {
    if (subset_only ? a.size() > b.size() : a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& ka : a) {
        bool hit = false;
        for (std::size_t j = 0; j < b.size() && !hit; ++j) {
            if (used[j]) continue;
            double d = 0;
            for (std::size_t t = 0; t < ka.size(); ++t) d = std::max(d, std::abs(ka[t] - b[j][t]));
            if (d <= tol) { used[j] = true; hit = true; }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace detail

/// Spherically symmetric parts compared orbit by orbit and point by point;
/// exact entries compare exactly when both sides are exact, numeric entries
/// within the tolerance.
inline bool vc_sets_match(const VcResult& a, const VcResult& b, double tol = 1e-9,
                          bool subset_only = false) {
    if (a.exact && b.exact && !subset_only) {
        auto sorted = [](std::vector<CommutingPoint> pts) {
            std::sort(pts.begin(), pts.end(), detail::point_less);
            return pts;
        };
        return a.orbits == b.orbits && sorted(a.real_points) == sorted(b.real_points) &&
               sorted(a.isolated_nonreal) == sorted(b.isolated_nonreal);
    }
    if (!detail::keys_match(detail::orbit_keys(a), detail::orbit_keys(b), tol, subset_only))
        return false;
    return detail::flat_match(detail::point_keys(a), detail::point_keys(b), tol, subset_only);
}

// ---------------------------------------------------------------------------
// Theorem-level check: the symmetrization of V_c(I) against V_c of the
// (possibly approximated) symmetrized ideal.
// ---------------------------------------------------------------------------

struct Thm36Report {
    VcResult lhs;  // symmetrize_set(vc_compute(I))
    VcResult rhs;  // vc_compute(symmetrized_ideal(I, bound))
    bool symmetrized_exactly = true;
    bool equal = false;
    bool lhs_subset = false;  // always expected: the bounded ideal is an inner approximation
    std::string summary;
};

inline Thm36Report theorem36_check(const RightIdealBasis& ideal, int bound, double tol = 1e-9) {
    Thm36Report rep;
    rep.lhs = symmetrize_set(vc_compute(ideal));
    auto s = symmetrized_ideal(ideal, bound);
    rep.symmetrized_exactly = s.exact;
    rep.rhs = vc_compute(s.basis);
    rep.equal = vc_sets_match(rep.lhs, rep.rhs, tol);
    rep.lhs_subset = rep.equal || vc_sets_match(rep.lhs, rep.rhs, tol, /*subset_only=*/true);
    if (rep.equal)
        rep.summary = "equality: the symmetrized zero set matches the zero set of the symmetrized ideal";
    else if (rep.lhs_subset)
        rep.summary = s.exact
                          ? "strict inclusion only; equality expected for an exact symmetrized ideal"
                          : "inclusion holds in the guaranteed direction (bounded approximation "
                            "can only enlarge the zero set)";
    else
        rep.summary = "neither equality nor the guaranteed inclusion holds";
    return rep;
}

// ---------------------------------------------------------------------------
// Reducibility witnesses: a verified pair proves reducibility; failure to
// find one proves nothing.
// ---------------------------------------------------------------------------

struct ReducibilityWitness {
    RightIdealBasis i1, i2;
};

namespace detail {

inline SlicePoly characteristic_quadratic(int n, int k, const Rational& x, const Rational& y2) {
    SlicePoly p(n);
    MultiIndex e(n, 0);
    e[k] = 2;
    p.add_term(e, Quaternion(1));
    e[k] = 1;
    p.add_term(e, Quaternion(Rational(-2) * x));
    e[k] = 0;
    p.add_term(e, Quaternion(x * x + y2));
    return p;
}

/// Bounded-degree annihilating ideal of one component collection; empty when
/// no construction applies (the caller just skips the split).
inline std::optional<std::vector<SlicePoly>> component_ideal(
    const std::vector<const ArrangedOrbit*>& orbits,
    const std::vector<const CommutingPoint*>& reals,
    const std::vector<const CommutingPoint*>& isolated, int n) {
    if (n == 1) {
        // star product of spherical, real-linear, and point-linear factors,
        // isolated points leftmost so they stay genuine zeros
        SlicePoly prod = SlicePoly::one(1);
        for (const auto* p : isolated) {
            SlicePoly lin = SlicePoly::variable(1, 0);
            lin.add_term({0}, -p->coords[0]);
            prod = star_mul(prod, lin);
        }
        for (const auto* o : orbits)
            prod = star_mul(prod, characteristic_quadratic(1, 0, o->x[0], o->y2[0]));
        for (const auto* p : reals) {
            SlicePoly lin = SlicePoly::variable(1, 0);
            lin.add_term({0}, -p->coords[0]);
            prod = star_mul(prod, lin);
        }
        return std::vector<SlicePoly>{prod};
    }
    if (!isolated.empty()) return std::nullopt;  // no multivariate construction
    if (orbits.size() + reals.size() == 1) {
        std::vector<SlicePoly> gens;
        if (!reals.empty()) {
            for (int k = 0; k < n; ++k) {
                SlicePoly lin = SlicePoly::variable(n, k);
                MultiIndex zero(n, 0);
                lin.add_term(zero, -Quaternion(reals[0]->coords[k].re()));
                gens.push_back(lin);
            }
            return gens;
        }
        const auto& o = *orbits[0];
        auto params = o.slice_params();
        if (!params) return std::nullopt;
        auto [m, tau] = *params;
        for (int k = 0; k < n; ++k) {
            if (o.y2[k] == 0) {
                SlicePoly lin = SlicePoly::variable(n, k);
                lin.add_term(MultiIndex(n, 0), -Quaternion(o.x[k]));
                gens.push_back(lin);
            } else {
                gens.push_back(characteristic_quadratic(n, k, o.x[k], o.y2[k]));
            }
        }
        // cross relations pin the relative signs: tau_l q_k - tau_k q_l = tau_l x_k - tau_k x_l
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
                if (tau[k] == 0 && tau[l] == 0) continue;
                SlicePoly rel(n);
                MultiIndex e(n, 0);
                e[k] = 1;
                rel.add_term(e, Quaternion(tau[l]));
                e[k] = 0;
                e[l] = 1;
                rel.add_term(e, Quaternion(-tau[k]));
                e[l] = 0;
                rel.add_term(e, Quaternion(-(tau[l] * o.x[k] - tau[k] * o.x[l])));
                if (!rel.is_zero()) gens.push_back(rel);
            }
        return gens;
    }
    // several components: per-coordinate products vanish on all of them, but
    // usually cut out more; verification decides
    std::vector<SlicePoly> gens;
    for (int k = 0; k < n; ++k) {
        SlicePoly prod = SlicePoly::one(n);
        for (const auto* o : orbits) {
            if (o->y2[k] == 0) {
                SlicePoly lin = SlicePoly::variable(n, k);
                lin.add_term(MultiIndex(n, 0), -Quaternion(o->x[k]));
                prod = star_mul(prod, lin);
            } else {
                prod = star_mul(prod, characteristic_quadratic(n, k, o->x[k], o->y2[k]));
            }
        }
        for (const auto* p : reals) {
            SlicePoly lin = SlicePoly::variable(n, k);
            lin.add_term(MultiIndex(n, 0), -Quaternion(p->coords[k].re()));
            prod = star_mul(prod, lin);
        }
        gens.push_back(prod);
    }
    return gens;
}

inline VcResult union_of(VcResult a, const VcResult& b) {
    a.real_points.insert(a.real_points.end(), b.real_points.begin(), b.real_points.end());
    a.orbits.insert(a.orbits.end(), b.orbits.begin(), b.orbits.end());
    a.isolated_nonreal.insert(a.isolated_nonreal.end(), b.isolated_nonreal.begin(),
                              b.isolated_nonreal.end());
    a.exact = a.exact && b.exact;
    dedupe(a);
    return a;
}

inline bool same_exact_set(const VcResult& a, const VcResult& b) {
    auto key = [](const VcResult& v) {
        auto pts = v.real_points;
        auto iso = v.isolated_nonreal;
        std::sort(pts.begin(), pts.end(), point_less);
        std::sort(iso.begin(), iso.end(), point_less);
        return std::make_tuple(pts, iso, v.orbits);
    };
    auto [pa, ia, oa] = key(a);
    auto [pb, ib, ob] = key(b);
    return pa == pb && ia == ib && oa == ob;
}

}  // namespace detail

/// Tries complementary splits of the components of v, building bounded-degree
/// annihilating ideals and verifying V_c(I1) union V_c(I2) = v together with
/// mutual non-containment.
inline std::optional<ReducibilityWitness> reducibility_witness(const VcResult& v,
                                                               const RightIdealBasis& ideal,
                                                               int /*bound*/ = 2) {
    if (!v.exact) return std::nullopt;
    const int n = ideal.nvars();

    struct Comp {
        const ArrangedOrbit* orbit = nullptr;
        const CommutingPoint* real = nullptr;
        const CommutingPoint* iso = nullptr;
    };
    std::vector<Comp> comps;
    for (const auto& o : v.orbits) comps.push_back({&o, nullptr, nullptr});
    for (const auto& p : v.real_points) comps.push_back({nullptr, &p, nullptr});
    for (const auto& p : v.isolated_nonreal) comps.push_back({nullptr, nullptr, &p});
    const std::size_t c = comps.size();
    if (c < 2 || c > 12) return std::nullopt;

    auto side = [&](std::uint32_t mask) -> std::optional<std::vector<SlicePoly>> {
        std::vector<const ArrangedOrbit*> orbits;
        std::vector<const CommutingPoint*> reals, iso;
        for (std::size_t k = 0; k < c; ++k) {
            if (!(mask >> k & 1u)) continue;
            if (comps[k].orbit) orbits.push_back(comps[k].orbit);
            if (comps[k].real) reals.push_back(comps[k].real);
            if (comps[k].iso) iso.push_back(comps[k].iso);
        }
        return detail::component_ideal(orbits, reals, iso, n);
    };

    const std::uint32_t full = (1u << c) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (!(mask & 1u)) continue;  // fix component 0 on side 1 to halve the splits
        auto g1 = side(mask);
        auto g2 = side(full & ~mask);
        if (!g1 || !g2) continue;
        try {
            RightIdealBasis i1(*g1, ideal.order());
            RightIdealBasis i2(*g2, ideal.order());
            VcResult v1 = vc_compute(i1), v2 = vc_compute(i2);
            if (!v1.exact || !v2.exact) continue;
            if (!detail::same_exact_set(detail::union_of(v1, v2), v)) continue;
            bool one_in_two = true, two_in_one = true;
            for (const auto& g : i1.generators()) one_in_two = one_in_two && i2.contains(g);
            for (const auto& g : i2.generators()) two_in_one = two_in_one && i1.contains(g);
            if (one_in_two || two_in_one) continue;
            return ReducibilityWitness{std::move(i1), std::move(i2)};
        } catch (const UnsupportedInstance&) {
            continue;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace qslice

#endif
