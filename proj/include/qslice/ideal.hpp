#ifndef QSLICE_IDEAL_HPP
#define QSLICE_IDEAL_HPP

#include "qslice/slice_poly.hpp"
#include "qslice/univar.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qslice {

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Checkable witness of membership: target = sum_i generator_i * cofactor_i.
struct MembershipCertificate {
    SlicePoly target;
    std::vector<SlicePoly> cofactors;

    bool recomposes(const std::vector<SlicePoly>& gens) const {
        if (gens.size() != cofactors.size()) return false;
        SlicePoly acc = SlicePoly::zero(target.nvars);
        for (std::size_t i = 0; i < gens.size(); ++i) acc += star_mul(gens[i], cofactors[i]);
        return acc == target;
    }
};

struct MemberResult {
    bool member = false;
    MembershipCertificate certificate;  // cofactors against the original generators
    SlicePoly remainder;                // normal form; nonzero evidence of non-membership
};

/// Right ideal of H[q1,...,qn] given by generators, with a lazily computed
/// reduced right Groebner basis. Variables are central and the coefficients
/// form a division ring, so Buchberger's algorithm applies with all monomial
/// multiplications kept on the right and leading coefficients normalized to
/// 1 by right scaling.
class RightIdealBasis {
public:
    struct GbElem {
        SlicePoly poly;
        std::vector<SlicePoly> rep;  // poly = sum_i gens[i] * rep[i]
    };

    RightIdealBasis(std::vector<SlicePoly> gens, MonomialOrder order = MonomialOrder::degrevlex())
        : gens_(std::move(gens)), order_(order) {
        if (gens_.empty()) throw std::invalid_argument("ideal needs at least one generator");
        nvars_ = gens_.front().nvars;
        for (const auto& g : gens_) {
            if (g.is_zero()) throw std::invalid_argument("zero generator");
            if (g.nvars != nvars_) throw std::invalid_argument("generator nvars mismatch");
        }
    }

    int nvars() const { return nvars_; }
    const std::vector<SlicePoly>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }

    const std::vector<GbElem>& groebner() const {
        if (!gb_) gb_ = compute_groebner();
        return *gb_;
    }

    std::vector<SlicePoly> groebner_polys() const {
        std::vector<SlicePoly> out;
        for (const auto& e : groebner()) out.push_back(e.poly);
        return out;
    }

    bool is_unit_ideal() const {
        const auto& gb = groebner();
        return gb.size() == 1 && gb.front().poly.is_constant();
    }

    /// Full right-reduction of P by the reduced basis; zero remainder yields
    /// a certificate whose cofactors are mapped back to the original
    /// generators and re-verified by exact recomposition.
    MemberResult member(const SlicePoly& p) const {
        if (p.nvars != nvars_) throw std::invalid_argument("nvars mismatch");
        const auto& gb = groebner();
        std::vector<SlicePoly> h(gb.size(), SlicePoly::zero(nvars_));
        SlicePoly normal = SlicePoly::zero(nvars_);
        SlicePoly r = p;
        while (!r.is_zero()) {
            auto [e, c] = r.lead(order_);
            bool reduced = false;
            for (std::size_t g = 0; g < gb.size(); ++g) {
                auto [ge, gc] = gb[g].poly.lead(order_);
                if (!divides(ge, e)) continue;
                SlicePoly mono = SlicePoly::monomial(nvars_, quotient(e, ge), gc.inverse() * c);
                r -= star_mul(gb[g].poly, mono);
                h[g] += mono;
                reduced = true;
                break;
            }
            if (!reduced) {
                normal.add_term(e, c);
                r.add_term(e, -c);
            }
        }

        MemberResult out;
        out.remainder = normal;
        out.member = normal.is_zero();
        if (out.member) {
            out.certificate.target = p;
            out.certificate.cofactors.assign(gens_.size(), SlicePoly::zero(nvars_));
            for (std::size_t g = 0; g < gb.size(); ++g)
                for (std::size_t i = 0; i < gens_.size(); ++i)
                    out.certificate.cofactors[i] += star_mul(gb[g].rep[i], h[g]);
            if (!out.certificate.recomposes(gens_))
                throw std::logic_error("membership certificate failed to recompose");
        }
        return out;
    }

    bool contains(const SlicePoly& p) const { return member(p).member; }

private:
    std::vector<SlicePoly> gens_;
    MonomialOrder order_;
    int nvars_;
    mutable std::optional<std::vector<GbElem>> gb_;

    // normal form of p against basis, accumulating basis cofactors
    static SlicePoly reduce(const SlicePoly& p, const std::vector<GbElem>& basis,
                            const MonomialOrder& ord, std::vector<SlicePoly>& h) {
        const int n = p.nvars;
        SlicePoly normal = SlicePoly::zero(n);
        SlicePoly r = p;
        while (!r.is_zero()) {
            auto [e, c] = r.lead(ord);
            bool reduced = false;
            for (std::size_t g = 0; g < basis.size(); ++g) {
                auto [ge, gc] = basis[g].poly.lead(ord);
                if (!divides(ge, e)) continue;
                SlicePoly mono = SlicePoly::monomial(n, quotient(e, ge), gc.inverse() * c);
                r -= star_mul(basis[g].poly, mono);
                h[g] += mono;
                reduced = true;
                break;
            }
            if (!reduced) {
                normal.add_term(e, c);
                r.add_term(e, -c);
            }
        }
        return normal;
    }

    std::vector<GbElem> compute_groebner() const {
        std::vector<GbElem> basis;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            GbElem e{gens_[i], std::vector<SlicePoly>(gens_.size(), SlicePoly::zero(nvars_))};
            e.rep[i] = SlicePoly::one(nvars_);
            basis.push_back(std::move(e));
        }

        std::deque<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

        auto scaled = [&](const GbElem& g, const MultiIndex& shift, const Quaternion& c) {
            GbElem out{star_mul(g.poly, SlicePoly::monomial(nvars_, shift, c)), {}};
            out.rep.reserve(g.rep.size());
            for (const auto& r : g.rep)
                out.rep.push_back(star_mul(r, SlicePoly::monomial(nvars_, shift, c)));
            return out;
        };

        while (!pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            auto [ei, ci] = basis[i].poly.lead(order_);
            auto [ej, cj] = basis[j].poly.lead(order_);
            MultiIndex l = lcm(ei, ej);
            GbElem si = scaled(basis[i], quotient(l, ei), ci.inverse());
            GbElem sj = scaled(basis[j], quotient(l, ej), cj.inverse());
            GbElem s{si.poly - sj.poly, {}};
            s.rep.resize(gens_.size());
            for (std::size_t k = 0; k < gens_.size(); ++k) s.rep[k] = si.rep[k] - sj.rep[k];

            std::vector<SlicePoly> h(basis.size(), SlicePoly::zero(nvars_));
            SlicePoly nf = reduce(s.poly, basis, order_, h);
            if (nf.is_zero()) continue;
            GbElem fresh{nf, std::vector<SlicePoly>(gens_.size(), SlicePoly::zero(nvars_))};
            for (std::size_t k = 0; k < gens_.size(); ++k) {
                fresh.rep[k] = s.rep[k];
                for (std::size_t g = 0; g < basis.size(); ++g)
                    fresh.rep[k] -= star_mul(basis[g].rep[k], h[g]);
            }
            // monic normalization by right scaling
            Quaternion lc = fresh.poly.lead(order_).second;
            Quaternion inv = lc.inverse();
            fresh.poly = fresh.poly.scaled_right(inv);
            for (auto& r : fresh.rep) r = r.scaled_right(inv);
            basis.push_back(std::move(fresh));
            for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
        }

        // interreduction: drop elements whose leading monomial is divisible by
        // another's, then tail-reduce and normalize to the canonical basis
        std::vector<GbElem> kept;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto [ei, ci] = basis[i].poly.lead(order_);
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                auto [ej, cj] = basis[j].poly.lead(order_);
                if (divides(ej, ei) && (ej != ei || j < i)) { redundant = true; break; }
            }
            if (!redundant) kept.push_back(basis[i]);
        }
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<GbElem> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            std::vector<SlicePoly> h(others.size(), SlicePoly::zero(nvars_));
            SlicePoly nf = reduce(kept[i].poly, others, order_, h);
            if (nf.is_zero()) continue;  // cannot happen after the divisibility sweep
            GbElem fresh{nf, kept[i].rep};
            std::size_t oi = 0;
            for (std::size_t j = 0; j < kept.size(); ++j) {
                if (j == i) continue;
                for (std::size_t k = 0; k < gens_.size(); ++k)
                    fresh.rep[k] -= star_mul(kept[j].rep[k], h[oi]);
                ++oi;
            }
            Quaternion inv = fresh.poly.lead(order_).second.inverse();
            fresh.poly = fresh.poly.scaled_right(inv);
            for (auto& r : fresh.rep) r = r.scaled_right(inv);
            kept[i] = std::move(fresh);
        }
        std::sort(kept.begin(), kept.end(), [&](const GbElem& a, const GbElem& b) {
            return order_.less(b.poly.lead(order_).first, a.poly.lead(order_).first);
        });
        return kept;
    }
};

/// Convenience wrapper matching the operation name: generators in, basis
/// with cached reduced right Groebner basis out.
inline RightIdealBasis groebner_right(RightIdealBasis ideal) {
    ideal.groebner();
    return ideal;
}

// ---------------------------------------------------------------------------
// Independent brute-force membership oracle: the cofactor equation
// sum_i g_i * h_i = P is a left-linear system over the division ring H in
// the unknown cofactor coefficients; solve it by Gaussian elimination.
// ---------------------------------------------------------------------------

namespace detail {

/// Solvability of sum_j A[r][j] x_j = b[r] with quaternion coefficients
/// acting on the left of the unknowns.
inline bool left_linear_solvable(std::vector<std::vector<Quaternion>> a,
                                 std::vector<Quaternion> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        Quaternion inv = a[rank][col].inverse();
        for (auto& v : a[rank]) v = inv * v;
        b[rank] = inv * b[rank];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Quaternion f = a[r][col];
            for (std::size_t j = 0; j < cols; ++j) a[r][j] -= f * a[rank][j];
            b[r] -= f * b[rank];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return false;
    // rows 0..rank-1 are consistent by construction
    for (std::size_t r = 0; r < rank; ++r) {
        bool all_zero = true;
        for (const auto& v : a[r])
            if (!v.is_zero()) { all_zero = false; break; }
        if (all_zero && !b[r].is_zero()) return false;
    }
    return true;
}

inline std::vector<MultiIndex> monomials_up_to(int nvars, int max_deg) {
    std::vector<MultiIndex> out;
    MultiIndex cur(nvars, 0);
    auto rec = [&](auto&& self, int var, int budget) -> void {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur[var] = static_cast<std::uint32_t>(e);
            self(self, var + 1, budget - e);
        }
        cur[var] = 0;
    };
    if (max_deg >= 0) rec(rec, 0, max_deg);
    return out;
}

}  // namespace detail

inline bool member_linear_oracle(const SlicePoly& p, const RightIdealBasis& ideal,
                                 int degree_bound) {
    if (degree_bound < p.degree())
        throw std::invalid_argument("degree bound below deg P");
    const int n = ideal.nvars();
    const auto& gens = ideal.generators();

    struct Unknown { std::size_t gen; MultiIndex mono; };
    std::vector<Unknown> unknowns;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int hdeg = degree_bound - static_cast<int>(gens[i].degree());
        for (auto& m : detail::monomials_up_to(n, hdeg)) unknowns.push_back({i, m});
    }
    auto eqs = detail::monomials_up_to(n, degree_bound);
    std::map<MultiIndex, std::size_t> eq_index;
    for (std::size_t r = 0; r < eqs.size(); ++r) eq_index[eqs[r]] = r;

    std::vector<std::vector<Quaternion>> a(eqs.size(),
                                           std::vector<Quaternion>(unknowns.size(), Quaternion(0)));
    std::vector<Quaternion> b(eqs.size(), Quaternion(0));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const auto& g = gens[unknowns[u].gen];
        for (const auto& [e, c] : g.terms) {
            MultiIndex target = e + unknowns[u].mono;
            auto it = eq_index.find(target);
            if (it == eq_index.end()) continue;  // beyond the bound, coefficient must vanish anyway
            a[it->second][u] += c;
        }
    }
    for (const auto& [e, c] : p.terms) {
        auto it = eq_index.find(e);
        if (it == eq_index.end()) return false;  // P exceeds the modeled degree window
        b[it->second] = c;
    }
    return detail::left_linear_solvable(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Radical membership: the elementwise criterion asks, per scaling a, for an
// exponent N with (Pa)^{*N} in I + (Pa)*I + ... + (Pa)^{*N}*I; this right
// ideal is generated by the g_i together with (Pa)^{*k} * g_i.
// ---------------------------------------------------------------------------

struct RadicalWitness {
    SlicePoly p;
    Quaternion a;
    unsigned n = 1;
    MembershipCertificate certificate;  // over the extended generator set
};

inline std::vector<SlicePoly> radical_extended_generators(const SlicePoly& p, const Quaternion& a,
                                                          unsigned n,
                                                          const RightIdealBasis& ideal) {
    SlicePoly pa = p.scaled_right(a);
    std::vector<SlicePoly> ext = ideal.generators();
    SlicePoly power = SlicePoly::one(p.nvars);
    for (unsigned k = 1; k <= n; ++k) {
        power = star_mul(power, pa);
        for (const auto& g : ideal.generators()) {
            SlicePoly e = star_mul(power, g);
            if (!e.is_zero()) ext.push_back(e);
        }
    }
    return ext;
}

/// Re-derives the membership and validates the stored certificate by exact
/// recomposition; a malformed certificate raises CertificateError rather
/// than reading as a negative verdict.
inline bool radical_witness_check(const RadicalWitness& w, const RightIdealBasis& ideal) {
    if (w.n < 1) throw std::invalid_argument("witness exponent must be >= 1");
    auto ext = radical_extended_generators(w.p, w.a, w.n, ideal);
    SlicePoly target = star_pow(w.p.scaled_right(w.a), w.n);
    if (w.certificate.cofactors.size() != ext.size())
        throw CertificateError("radical witness certificate arity mismatch");
    if (w.certificate.target != target)
        throw CertificateError("radical witness certificate targets the wrong polynomial");
    if (!w.certificate.recomposes(ext))
        throw CertificateError("radical witness certificate does not recompose");
    RightIdealBasis extended(ext, ideal.order());
    return extended.member(target).member;
}

/// Search for the least passing exponent; returns a fully verified witness.
inline std::optional<RadicalWitness> find_radical_witness(const SlicePoly& p,
                                                          const RightIdealBasis& ideal,
                                                          const Quaternion& a, unsigned n_max) {
    for (unsigned n = 1; n <= n_max; ++n) {
        auto ext = radical_extended_generators(p, a, n, ideal);
        SlicePoly target = star_pow(p.scaled_right(a), n);
        RightIdealBasis extended(ext, ideal.order());
        auto res = extended.member(target);
        if (res.member) {
            RadicalWitness w{p, a, n, res.certificate};
            return w;
        }
    }
    return std::nullopt;
}

struct RadicalSample {
    Quaternion a;
    std::optional<unsigned> least_n;  // empty: no exponent up to the bound worked
};

/// Evidence for radical membership over a finite sample of scalings; the
/// criterion quantifies over every a in H, so success here is evidence, not
/// proof, and the report says so.
struct RadicalReport {
    SlicePoly p;
    unsigned n_max = 1;
    std::vector<RadicalSample> samples;
    bool all_succeeded = true;
    std::string disclaimer =
        "bounded search: success on sampled scalings is evidence for radical membership, "
        "not a proof (the criterion ranges over all quaternions)";
};

inline RadicalReport radical_member_bounded(const SlicePoly& p, const RightIdealBasis& ideal,
                                            unsigned n_max,
                                            const std::vector<Quaternion>& samples) {
    if (samples.empty() || n_max < 1) throw std::invalid_argument("need samples and N_max >= 1");
    RadicalReport rep;
    rep.p = p;
    rep.n_max = n_max;
    for (const auto& a : samples) {
        RadicalSample s{a, std::nullopt};
        if (!a.is_zero()) {
            if (auto w = find_radical_witness(p, ideal, a, n_max)) s.least_n = w->n;
        } else {
            s.least_n = 1;  // (P*0)^{*1} = 0 is in every ideal
        }
        if (!s.least_n) rep.all_succeeded = false;
        rep.samples.push_back(std::move(s));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quasi-primeness: P*Q in I while P and Q^s both stay outside.
// ---------------------------------------------------------------------------

struct QuasiPrimeViolation {
    SlicePoly p, q;
    MembershipCertificate inclusion;     // for P*Q
    SlicePoly exclusion_p_remainder;     // nonzero normal form of P
    SlicePoly exclusion_qs_remainder;    // nonzero normal form of Q^s
};

/// Re-derives all three clauses; nothing stored is trusted.
inline bool quasi_prime_violation_verify(const QuasiPrimeViolation& v,
                                         const RightIdealBasis& ideal,
                                         std::string* why = nullptr) {
    SlicePoly pq = star_mul(v.p, v.q);
    if (v.inclusion.target != pq || !v.inclusion.recomposes(ideal.generators())) {
        if (why) *why = "stored inclusion certificate does not recompose to P*Q";
        return false;
    }
    if (!ideal.member(pq).member) {
        if (why) *why = "P*Q is not a member of the ideal";
        return false;
    }
    auto mp = ideal.member(v.p);
    if (mp.member) {
        if (why) *why = "P is a member of the ideal";
        return false;
    }
    auto mq = ideal.member(symmetrization(v.q));
    if (mq.member) {
        if (why) *why = "Q^s is a member of the ideal";
        return false;
    }
    return true;
}

struct QpSearchOptions {
    std::vector<std::pair<SlicePoly, SlicePoly>> user_pairs;
    int max_degree = 3;
    std::vector<Quaternion> coeff_set = {
        Quaternion(0),  Quaternion(1),           -Quaternion(1),
        Quaternion::unit_i(), -Quaternion::unit_i(),
        Quaternion::unit_j(), -Quaternion::unit_j(),
        Quaternion::unit_k(), -Quaternion::unit_k()};
    std::uint64_t random_budget = 2000;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::optional<QuasiPrimeViolation> make_violation(const SlicePoly& p, const SlicePoly& q,
                                                         const RightIdealBasis& ideal) {
    auto inc = ideal.member(star_mul(p, q));
    if (!inc.member) return std::nullopt;
    auto mp = ideal.member(p);
    if (mp.member) return std::nullopt;
    auto mq = ideal.member(symmetrization(q));
    if (mq.member) return std::nullopt;
    return QuasiPrimeViolation{p, q, inc.certificate, mp.remainder, mq.remainder};
}

/// Exhaustive pass for a principal univariate ideal with real-coefficient
/// generator D: for fixed Q the map P -> remainder(P * Q mod D) is
/// left-linear in the coefficients of P (D central), so the P of a violation
/// live in the kernel; a kernel larger than the slice of <D> itself exposes
/// a candidate outside the ideal.
inline std::optional<QuasiPrimeViolation> kernel_search_principal(
    const RightIdealBasis& ideal, const SlicePoly& d, const QpSearchOptions& opt) {
    const int deg_d = static_cast<int>(d.degree());
    const int max_deg = opt.max_degree;
    const std::size_t pdim = static_cast<std::size_t>(max_deg + 1);

    // all Q with coefficients in the pool, degree <= max_degree
    std::vector<Quaternion> qcoeff(pdim, Quaternion(0));
    std::optional<QuasiPrimeViolation> found;

    auto consider_q = [&](const SlicePoly& q) -> bool {
        if (q.is_zero()) return false;
        if (ideal.member(symmetrization(q)).member) return false;  // never a violation
        // remainder map: columns indexed by deg of P-coefficient
        std::vector<std::vector<Quaternion>> a(static_cast<std::size_t>(deg_d),
                                               std::vector<Quaternion>(pdim, Quaternion(0)));
        for (std::size_t col = 0; col < pdim; ++col) {
            SlicePoly pmono = SlicePoly::monomial(1, {static_cast<std::uint32_t>(col)}, Quaternion(1));
            SlicePoly rem = right_divide(star_mul(pmono, q), d).remainder;
            for (const auto& [e, c] : rem.terms) a[e[0]][col] = c;
        }
        // left-kernel dimension vs the dimension of <D> in degree <= max_deg
        std::size_t ideal_dim = deg_d <= max_deg ? static_cast<std::size_t>(max_deg - deg_d + 1) : 0;
        // row-reduce a copy to find rank and a basis of the solution space
        std::vector<std::vector<Quaternion>> m = a;
        std::vector<int> pivot_col;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < pdim && rank < m.size(); ++col) {
            std::size_t piv = rank;
            while (piv < m.size() && m[piv][col].is_zero()) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[piv], m[rank]);
            Quaternion inv = m[rank][col].inverse();
            for (auto& v : m[rank]) v = inv * v;
            for (std::size_t r = 0; r < m.size(); ++r) {
                if (r == rank || m[r][col].is_zero()) continue;
                Quaternion f = m[r][col];
                for (std::size_t j = 0; j < pdim; ++j) m[r][j] -= f * m[rank][j];
            }
            pivot_col.push_back(static_cast<int>(col));
            ++rank;
        }
        if (pdim - rank <= ideal_dim) return false;
        // kernel basis: one vector per free column
        for (std::size_t free = 0; free < pdim; ++free) {
            if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) !=
                pivot_col.end())
                continue;
            std::vector<Quaternion> x(pdim, Quaternion(0));
            x[free] = Quaternion(1);
            for (std::size_t r = 0; r < rank; ++r)
                x[static_cast<std::size_t>(pivot_col[r])] = -m[r][free];
            SlicePoly pcand(1);
            for (std::size_t k = 0; k < pdim; ++k)
                pcand.add_term({static_cast<std::uint32_t>(k)}, x[k]);
            if (pcand.is_zero()) continue;
            if (auto v = make_violation(pcand, q, ideal)) {
                found = v;
                return true;
            }
        }
        return false;
    };

    // enumerate Q coefficient tuples
    std::vector<std::size_t> idx(pdim, 0);
    for (;;) {
        SlicePoly q(1);
        for (std::size_t k = 0; k < pdim; ++k)
            q.add_term({static_cast<std::uint32_t>(k)}, opt.coeff_set[idx[k]]);
        if (consider_q(q)) return found;
        std::size_t pos = 0;
        while (pos < pdim && ++idx[pos] == opt.coeff_set.size()) idx[pos++] = 0;
        if (pos == pdim) break;
    }
    return std::nullopt;
}

}  // namespace detail

/// Bounded hunt for quasi-primeness violations: user-supplied pairs, divisor
/// pairs from right division (univariate), then a systematic or random pass
/// over small polynomials. "None found" is not a proof of quasi-primeness.
inline std::optional<QuasiPrimeViolation> quasi_prime_search_bounded(const RightIdealBasis& ideal,
                                                                     const QpSearchOptions& opt = {}) {
    if (ideal.is_unit_ideal()) return std::nullopt;  // every product is a member, vacuously

    for (const auto& [p, q] : opt.user_pairs)
        if (auto v = detail::make_violation(p, q, ideal)) return v;

    if (ideal.nvars() == 1) {
        // divisor pairs of the generators: monic linear trial divisors with
        // constant term from the coefficient pool
        for (const auto& g : ideal.generators()) {
            if (g.degree() < 2) continue;
            for (const auto& c : opt.coeff_set) {
                SlicePoly f = SlicePoly::variable(1, 0);
                f.add_term({0}, c);
                auto dr = right_divide(g, f);
                if (dr.remainder.is_zero())
                    if (auto v = detail::make_violation(f, dr.quotient, ideal)) return v;
            }
        }
        const auto gb = ideal.groebner_polys();
        if (gb.size() == 1 && gb.front().has_real_coefficients() && gb.front().degree() >= 1)
            if (auto v = detail::kernel_search_principal(ideal, gb.front(), opt)) return v;
    }

    // random pairs with small coefficients
    RandomQuat rnd(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, opt.coeff_set.size() - 1);
    for (std::uint64_t t = 0; t < opt.random_budget; ++t) {
        auto rand_poly = [&]() {
            SlicePoly p(ideal.nvars());
            for (auto& m : detail::monomials_up_to(ideal.nvars(), opt.max_degree))
                p.add_term(m, opt.coeff_set[pick(rnd.engine())]);
            return p;
        };
        SlicePoly p = rand_poly(), q = rand_poly();
        if (p.is_zero() || q.is_zero()) continue;
        if (auto v = detail::make_violation(p, q, ideal)) return v;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Symmetrized ideal S(I) = < P^s : P in I >.
// ---------------------------------------------------------------------------

struct SymmetrizedIdeal {
    RightIdealBasis basis;
    bool exact;  // principal case only; otherwise a bounded inner approximation
};

/// Principal case is exact through (g*h)^s = g^s * h^s; the general case
/// enumerates monomial cofactor tuples up to the degree bound and is an
/// inner approximation of S(I).
inline SymmetrizedIdeal symmetrized_ideal(const RightIdealBasis& ideal, int degree_bound) {
    const auto& gens = ideal.generators();
    const int n = ideal.nvars();
    if (gens.size() == 1)
        return {RightIdealBasis({symmetrization(gens[0])}, ideal.order()), true};

    static const Quaternion units[4] = {Quaternion(1), Quaternion::unit_i(), Quaternion::unit_j(),
                                        Quaternion::unit_k()};
    std::vector<SlicePoly> cof_pool{SlicePoly::zero(n)};
    for (auto& m : detail::monomials_up_to(n, degree_bound))
        for (const auto& u : units) cof_pool.push_back(SlicePoly::monomial(n, m, u));

    std::vector<SlicePoly> out;
    std::vector<std::size_t> idx(gens.size(), 0);
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        combos *= cof_pool.size();
        if (combos > 200000) throw std::invalid_argument("symmetrized-ideal bound too large");
    }
    for (;;) {
        SlicePoly acc = SlicePoly::zero(n);
        for (std::size_t i = 0; i < gens.size(); ++i) acc += star_mul(gens[i], cof_pool[idx[i]]);
        if (!acc.is_zero()) out.push_back(symmetrization(acc));
        std::size_t pos = 0;
        while (pos < gens.size() && ++idx[pos] == cof_pool.size()) idx[pos++] = 0;
        if (pos == gens.size()) break;
    }
    // keep only candidates that add something: low degree first, drop members
    // of the ideal the kept ones already generate
    std::sort(out.begin(), out.end(), [](const SlicePoly& a, const SlicePoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.terms.size() < b.terms.size();
    });
    std::vector<SlicePoly> kept;
    std::optional<RightIdealBasis> span;
    for (const auto& s : out) {
        if (span && span->member(s).member) continue;
        kept.push_back(s);
        span.emplace(kept, ideal.order());
        span->groebner();
    }
    return {RightIdealBasis(kept, ideal.order()), false};
}

}  // namespace qslice

#endif
