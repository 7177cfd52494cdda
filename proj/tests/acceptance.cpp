// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every check uses exact arithmetic unless the criterion itself is about
// numeric spectra; random suites are seeded and deterministic.

#include "qslice/parser.hpp"
#include "qslice/variety.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qslice;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = dt < time_limit_s;
    if (!(ok && in_time)) ++g_failures;
    std::printf("[%s] criterion %d: %s (%.2fs%s)%s%s\n", ok && in_time ? "PASS" : "FAIL", number,
                name.c_str(), dt, in_time ? "" : ", over time budget", error.empty() ? "" : " — ",
                error.c_str());
}

SlicePoly p1(const std::string& s) { return parse_poly(s, 1); }
SlicePoly p2(const std::string& s) { return parse_poly(s, 2); }

SlicePoly linear_factor(const Quaternion& root) {
    SlicePoly f = SlicePoly::variable(1, 0);
    f.add_term({0}, -root);
    return f;
}

}  // namespace

int main() {
    criterion(1, "<(q+1)^2>: non-member, radical evidence at N=2, quiet qp search", 10, [] {
        RightIdealBasis ideal({p1("(q+1)^2")});
        if (ideal.contains(p1("q + 1"))) return false;

        RandomQuat rnd(101);
        std::vector<Quaternion> samples;
        for (int t = 0; t < 100; ++t) samples.push_back(rnd.nonzero_quaternion(4, 3));
        auto rep = radical_member_bounded(p1("q + 1"), ideal, 2, samples);
        if (!rep.all_succeeded) return false;
        for (const auto& s : rep.samples)
            if (!s.least_n || *s.least_n != 2) return false;

        QpSearchOptions opt;
        opt.max_degree = 3;
        opt.random_budget = 500;
        opt.seed = 101;
        return !quasi_prime_search_bounded(ideal, opt).has_value();
    });

    criterion(2, "<(q+1)^3>: verified qp violation, non-member, radical evidence at N=3", 10, [] {
        RightIdealBasis ideal({p1("(q+1)^3")});
        SlicePoly p = p1("(q+1)^2"), q = p1("q + 1");
        auto inc = ideal.member(star_mul(p, q));
        if (!inc.member) return false;
        QuasiPrimeViolation v{p, q, inc.certificate, ideal.member(p).remainder,
                              ideal.member(symmetrization(q)).remainder};
        if (!quasi_prime_violation_verify(v, ideal)) return false;
        if (ideal.contains(q)) return false;

        RandomQuat rnd(102);
        std::vector<Quaternion> samples;
        for (int t = 0; t < 100; ++t) samples.push_back(rnd.nonzero_quaternion(4, 3));
        auto rep = radical_member_bounded(q, ideal, 3, samples);
        if (!rep.all_succeeded) return false;
        for (const auto& s : rep.samples)
            if (!s.least_n || *s.least_n != 3) return false;
        return true;
    });

    criterion(3, "<q1^2+1, q2^2+1>: membership trio, two-orbit zero set, reducibility", 10, [] {
        RightIdealBasis ideal({p2("q1^2 + 1"), p2("q2^2 + 1")});
        auto m = ideal.member(p2("q1^2 - q2^2"));
        if (!m.member || !m.certificate.recomposes(ideal.generators())) return false;
        if (ideal.contains(p2("q1 - q2"))) return false;
        auto ms = ideal.member(symmetrization(p2("q1 + q2")));
        if (ms.member || ms.remainder != p2("2 q1 q2 - 2")) return false;

        auto v = vc_compute(ideal);
        if (!v.exact || v.orbits.size() != 2 || !v.real_points.empty() ||
            !v.isolated_nonreal.empty())
            return false;
        if (v.orbits[0] != ArrangedOrbit{{0, 0}, {1, 1}, {1, -1}} ||
            v.orbits[1] != ArrangedOrbit{{0, 0}, {1, 1}, {1, 1}})
            return false;
        return reducibility_witness(v, ideal).has_value();
    });

    criterion(4, "symmetrized zero sets equal zero sets of symmetrizations", 30, [] {
        RandomQuat rnd(104);
        // 50 exact cases: products of linear factors with Gaussian-rational roots
        for (int t = 0; t < 50; ++t) {
            SlicePoly p = SlicePoly::one(1);
            int deg = 1 + static_cast<int>(rnd.raw() % 4);
            for (int f = 0; f < deg; ++f) {
                Quaternion root = (rnd.raw() % 2) ? Quaternion(rnd.rational(3, 2))
                                                  : Quaternion(rnd.rational(3, 2),
                                                               rnd.rational(3, 2), 0, 0);
                p = star_mul(p, linear_factor(root));
            }
            auto rep = theorem36_check(RightIdealBasis({p}), 2);
            if (!rep.equal || !rep.symmetrized_exactly || !rep.lhs.exact || !rep.rhs.exact)
                return false;
        }
        // 20 numeric-spectrum cases: irrational real pairs force the numeric path
        for (int t = 0; t < 20; ++t) {
            Rational c = rnd.rational(3, 2);
            // (q - c)^2 - 2 has the irrational real roots c +- sqrt(2)
            SlicePoly p = star_mul(linear_factor(Quaternion(c)), linear_factor(Quaternion(c)));
            p.add_term({0}, Quaternion(-2));
            if (rnd.raw() % 2) p = star_mul(p, p1("q^2 + 1"));
            auto rep = theorem36_check(RightIdealBasis({p}), 2, 1e-9);
            if (!rep.equal || rep.lhs.exact) return false;
        }
        return true;
    });

    criterion(5, "star-evaluation branch formula on commuting points", 10, [] {
        RandomQuat rnd(105);
        auto run_case = [&](bool force_zero) {
            int n = 1 + static_cast<int>(rnd.raw() % 3);
            // commuting point on a random rational slice
            Quaternion u = rnd.unit_imaginary();
            std::vector<Quaternion> a;
            for (int k = 0; k < n; ++k)
                a.push_back(Quaternion(rnd.rational(3, 2)) + u * rnd.rational(3, 2));
            SlicePoly p = random_poly(rnd, n, 2, 3);
            if (force_zero) {
                int k = static_cast<int>(rnd.raw() % n);
                SlicePoly lin = SlicePoly::variable(n, k);
                lin.add_term(MultiIndex(n, 0), -a[static_cast<std::size_t>(k)]);
                p = star_mul(lin, random_poly(rnd, n, 1, 2));
            }
            SlicePoly q = random_poly(rnd, n, 2, 3);
            Quaternion lhs = eval_pointwise(star_mul(p, q), a);
            Quaternion pa = eval_pointwise(p, a);
            if (pa.is_zero()) return lhs.is_zero();
            Quaternion li = pa.inverse();
            std::vector<Quaternion> moved;
            for (const auto& c : a) moved.push_back(li * c * pa);
            return lhs == pa * eval_pointwise(q, moved);
        };
        for (int t = 0; t < 400; ++t)
            if (!run_case(false)) return false;
        for (int t = 0; t < 100; ++t)
            if (!run_case(true)) return false;
        return true;
    });

    criterion(6, "ring laws, conjugation, and symmetrization properties", 20, [] {
        RandomQuat rnd(106);
        for (int t = 0; t < 1000; ++t) {
            int n = 1 + static_cast<int>(rnd.raw() % 2);
            SlicePoly p = random_poly(rnd, n, 2, 3), q = random_poly(rnd, n, 2, 3),
                      r = random_poly(rnd, n, 2, 3);
            if (star_mul(star_mul(p, q), r) != star_mul(p, star_mul(q, r))) return false;
            if (star_mul(p, q + r) != star_mul(p, q) + star_mul(p, r)) return false;
            if (star_mul(p + q, r) != star_mul(p, r) + star_mul(q, r)) return false;
            if (regular_conj(star_mul(p, q)) != star_mul(regular_conj(q), regular_conj(p)))
                return false;
            SlicePoly ps = symmetrization(p);
            if (!ps.has_real_coefficients()) return false;
            if (star_mul(ps, r) != star_mul(r, ps)) return false;  // centrality
            if (ps != star_mul(regular_conj(p), p)) return false;  // P*P^c = P^c*P
        }
        return true;
    });

    criterion(7, "groebner membership agrees with the linear-algebra oracle", 30, [] {
        RandomQuat rnd(107);
        int done = 0;
        while (done < 100) {
            int n = 1 + static_cast<int>(rnd.raw() % 2);
            std::vector<SlicePoly> gens;
            for (int g = 0; g < 2; ++g) {
                SlicePoly p = random_poly(rnd, n, 2, 3);
                if (!p.is_zero()) gens.push_back(p);
            }
            if (gens.empty()) continue;
            RightIdealBasis ideal(gens);
            SlicePoly p = (rnd.raw() % 2)
                              ? random_poly(rnd, n, 3, 4)
                              : star_mul(gens[rnd.raw() % gens.size()], random_poly(rnd, n, 1, 2));
            if (p.degree() > 3) continue;
            auto m = ideal.member(p);
            if (m.member) {
                int bound = static_cast<int>(p.degree());
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (!m.certificate.cofactors[i].is_zero())
                        bound = std::max<int>(
                            bound, static_cast<int>(gens[i].degree() +
                                                    m.certificate.cofactors[i].degree()));
                if (!member_linear_oracle(p, ideal, bound)) return false;
            } else {
                if (member_linear_oracle(p, ideal, 5)) return false;
            }
            ++done;
        }
        return true;
    });

    criterion(8, "univariate division recomposition and the worked root examples", 10, [] {
        RandomQuat rnd(108);
        for (int t = 0; t < 200; ++t) {
            SlicePoly p = random_poly(rnd, 1, 5, 4);
            SlicePoly d = random_poly(rnd, 1, 3, 3);
            if (d.is_zero()) continue;
            auto [q, r] = right_divide(p, d);
            if (star_mul(d, q) + r != p) return false;
            if (r.degree() >= d.degree()) return false;
        }
        SlicePoly prod = star_mul(p1("q - i"), p1("q - j"));
        if (symmetrization(prod) != p1("(q^2+1)^2")) return false;
        auto z = roots(prod);
        if (!z.spheres.empty() || z.isolated.size() != 1 || !z.isolated[0].exact ||
            z.isolated[0].value != Quaternion::unit_i())
            return false;
        auto z2 = roots(p1("q^2 + 1"));
        return z2.isolated.empty() && z2.spheres.size() == 1 && z2.spheres[0].exact &&
               z2.spheres[0].x == 0 && z2.spheres[0].y2 == 1;
    });

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
