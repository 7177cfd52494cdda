// Command-line front end for the qslice library: parsing, star arithmetic,
// division and roots, right-ideal queries with certificates, slice algebraic
// sets, and a bundled example suite.
//
// Exit codes: 0 computed, 1 negative verdict, 2 usage/parse error,
// 3 unsupported instance class.

#include "qslice/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace qslice;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct Common {
    int nvars = 1;
    std::string order = "degrevlex";
    bool as_json = false;

    MonomialOrder mono_order() const {
        return order == "lex" ? MonomialOrder::lex() : MonomialOrder::degrevlex();
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--nvars", nvars, "number of variables")->check(CLI::PositiveNumber);
        cmd->add_option("--order", order, "monomial order")
            ->check(CLI::IsMember({"degrevlex", "lex"}));
        cmd->add_flag("--json", as_json, "machine-readable JSON output");
    }
};

RightIdealBasis read_ideal(const std::vector<std::string>& gens, const Common& c) {
    std::vector<SlicePoly> polys;
    for (const auto& g : gens) polys.push_back(parse_poly(g, c.nvars));
    return RightIdealBasis(std::move(polys), c.mono_order());
}

void emit(const Common& c, const json& machine, const std::string& human) {
    if (c.as_json) std::cout << machine.dump(2) << "\n";
    else std::cout << human << "\n";
}

std::string describe_point(const CommutingPoint& p) {
    std::string out = "(";
    for (std::size_t k = 0; k < p.coords.size(); ++k) {
        if (k) out += ", ";
        out += to_string(p.coords[k]);
    }
    return out + ")";
}

std::string describe_vc(const VcResult& v) {
    std::ostringstream os;
    if (v.empty()) os << "empty set\n";
    for (const auto& p : v.real_points) os << "real point " << describe_point(p) << "\n";
    for (const auto& o : v.orbits) os << "orbit " << o.to_text() << "\n";
    for (const auto& p : v.isolated_nonreal)
        os << "isolated point " << describe_point(p) << " (orbit not contained)\n";
    for (const auto& p : v.numeric_points)
        os << "numeric point (residual " << p.residual << ")\n";
    for (const auto& o : v.numeric_orbits)
        os << "numeric orbit (residual " << o.residual << ")\n";
    if (!v.exact) os << "note: result contains numeric or dropped entries\n";
    if (v.partial) os << "note: per-slice catalog computation, other slices not examined\n";
    for (const auto& n : v.notes) os << "note: " << n << "\n";
    std::string s = os.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

// ---------------------------------------------------------------------------
// Bundled example suite: every check mirrors a documented library example.
// ---------------------------------------------------------------------------

int run_examples() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };
    auto p1 = [](const std::string& s) { return parse_poly(s, 1); };
    auto p2 = [](const std::string& s) { return parse_poly(s, 2); };

    // star-product expansions
    check("(q+1)^2 expands to q^2+2q+1", p1("(q+1)^2") == p1("q^2 + 2q + 1"));
    check("constants commute with variables", p1("q*i - i*q").is_zero());
    check("(q1-q2)*(q1+q2) = q1^2-q2^2", p2("(q1-q2)*(q1+q2)") == p2("q1^2 - q2^2"));

    // <(q+1)^2>: not radical, no quasi-prime violation in the bounded search
    {
        RightIdealBasis ideal({p1("(q+1)^2")});
        check("q+1 is not a member of <(q+1)^2>", !ideal.contains(p1("q+1")));
        RandomQuat rnd(2024);
        bool all_n2 = true;
        for (int t = 0; t < 25; ++t) {
            auto w = find_radical_witness(p1("q+1"), ideal, rnd.nonzero_quaternion(3, 2), 2);
            all_n2 = all_n2 && w && w->n == 2 && radical_witness_check(*w, ideal);
        }
        check("radical evidence for q+1 at N=2 on sampled scalings", all_n2);
        QpSearchOptions opt;
        opt.random_budget = 200;
        check("no quasi-prime violation found for <(q+1)^2>",
              !quasi_prime_search_bounded(ideal, opt));
    }

    // <(q+1)^3>: radical <q+1> but quasi-primeness fails
    {
        RightIdealBasis ideal({p1("(q+1)^3")});
        auto inc = ideal.member(p1("(q+1)^2 * (q+1)"));
        QuasiPrimeViolation v{p1("(q+1)^2"), p1("q+1"), inc.certificate,
                              ideal.member(p1("(q+1)^2")).remainder,
                              ideal.member(symmetrization(p1("q+1"))).remainder};
        check("((q+1)^2, q+1) violates quasi-primeness of <(q+1)^3>",
              quasi_prime_violation_verify(v, ideal));
        auto w = find_radical_witness(p1("q+1"), ideal, Quaternion(1), 3);
        check("radical evidence for q+1 in <(q+1)^3> at N=3", w && w->n == 3);
    }

    // <q1^2+1, q2^2+1>: membership trio and the two-orbit zero set
    {
        RightIdealBasis ideal({p2("q1^2+1"), p2("q2^2+1")});
        auto m = ideal.member(p2("q1^2 - q2^2"));
        check("q1^2-q2^2 is a member with recomposing certificate",
              m.member && m.certificate.recomposes(ideal.generators()));
        check("q1-q2 is not a member", !ideal.contains(p2("q1 - q2")));
        auto ms = ideal.member(symmetrization(p2("q1 + q2")));
        check("(q1+q2)^s reduces to 2 q1 q2 - 2",
              !ms.member && ms.remainder == p2("2 q1 q2 - 2"));
        auto v = vc_compute(ideal);
        bool two_orbits = v.orbits.size() == 2 && v.real_points.empty() &&
                          v.isolated_nonreal.empty() &&
                          v.orbits[0] == ArrangedOrbit{{0, 0}, {1, 1}, {1, -1}} &&
                          v.orbits[1] == ArrangedOrbit{{0, 0}, {1, 1}, {1, 1}};
        check("zero set is the union of the two expected orbits", two_orbits);
        auto w = reducibility_witness(v, ideal);
        check("the two-orbit set is reducible (verified witness)", w.has_value());
    }

    // univariate roots
    {
        auto z = roots(star_mul(p1("q - i"), p1("q - j")));
        check("roots of (q-i)*(q-j) = {i}",
              z.spheres.empty() && z.isolated.size() == 1 && z.isolated[0].exact &&
                  z.isolated[0].value == Quaternion::unit_i());
        check("symmetrization of (q-i)*(q-j) is (q^2+1)^2",
              symmetrization(star_mul(p1("q - i"), p1("q - j"))) == p1("(q^2+1)^2"));
        auto z2 = roots(p1("q^2 + 1"));
        check("roots of q^2+1 form the orbit (0,1)",
              z2.isolated.empty() && z2.spheres.size() == 1 && z2.spheres[0].exact &&
                  z2.spheres[0].x == 0 && z2.spheres[0].y2 == 1);
    }

    // symmetrized zero sets
    {
        check("thm36 equality for <q - i>",
              theorem36_check(RightIdealBasis({p1("q - i")}), 2).equal);
        check("thm36 equality for <q1^2+1, q2^2+1>",
              theorem36_check(RightIdealBasis({p2("q1^2+1"), p2("q2^2+1")}), 1).equal);
    }

    std::cout << (failures == 0 ? "all example checks passed"
                                : std::to_string(failures) + " example check(s) failed")
              << "\n";
    return failures == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for quaternionic slice regular polynomials"};
    app.require_subcommand(1);

    // ---- eval ----
    Common c_eval;
    std::string eval_poly;
    std::vector<std::string> eval_at;
    auto* cmd_eval = app.add_subcommand("eval", "evaluate P at a commuting point");
    c_eval.attach(cmd_eval);
    cmd_eval->add_option("poly", eval_poly, "polynomial")->required();
    cmd_eval->add_option("--at", eval_at, "coordinates, one quaternion per variable")->required();

    // ---- mul / conj / symm ----
    Common c_mul;
    std::string mul_a, mul_b;
    auto* cmd_mul = app.add_subcommand("mul", "star product P*Q");
    c_mul.attach(cmd_mul);
    cmd_mul->add_option("p", mul_a)->required();
    cmd_mul->add_option("q", mul_b)->required();

    Common c_conj;
    std::string conj_p;
    auto* cmd_conj = app.add_subcommand("conj", "regular conjugate P^c");
    c_conj.attach(cmd_conj);
    cmd_conj->add_option("poly", conj_p)->required();

    Common c_symm;
    std::string symm_p;
    auto* cmd_symm = app.add_subcommand("symm", "symmetrization P^s = P*P^c");
    c_symm.attach(cmd_symm);
    cmd_symm->add_option("poly", symm_p)->required();

    // ---- divide / roots ----
    Common c_div;
    std::string div_p, div_d;
    auto* cmd_div = app.add_subcommand("divide", "right division P = D*Q + R (univariate)");
    c_div.attach(cmd_div);
    cmd_div->add_option("p", div_p)->required();
    cmd_div->add_option("d", div_d)->required();

    Common c_roots;
    std::string roots_p;
    auto* cmd_roots = app.add_subcommand("roots", "isolated and spherical zeros (univariate)");
    c_roots.attach(cmd_roots);
    cmd_roots->add_option("poly", roots_p)->required();

    // ---- ideal queries ----
    Common c_gb;
    std::vector<std::string> gb_gens;
    auto* cmd_gb = app.add_subcommand("gb", "reduced right Groebner basis");
    c_gb.attach(cmd_gb);
    cmd_gb->add_option("--ideal", gb_gens, "generators")->required();

    Common c_member;
    std::string member_p;
    std::vector<std::string> member_gens;
    auto* cmd_member = app.add_subcommand("member", "right-ideal membership with certificate");
    c_member.attach(cmd_member);
    cmd_member->add_option("poly", member_p)->required();
    cmd_member->add_option("--ideal", member_gens, "generators")->required();

    Common c_rad;
    std::string rad_p;
    std::vector<std::string> rad_gens;
    unsigned rad_nmax = 3;
    unsigned rad_samples = 20;
    std::uint64_t rad_seed = 1;
    auto* cmd_rad = app.add_subcommand("radical-check", "bounded radical-membership evidence");
    c_rad.attach(cmd_rad);
    cmd_rad->add_option("poly", rad_p)->required();
    cmd_rad->add_option("--ideal", rad_gens, "generators")->required();
    cmd_rad->add_option("--n-max", rad_nmax, "largest exponent tried");
    cmd_rad->add_option("--samples", rad_samples, "number of random scalings");
    cmd_rad->add_option("--seed", rad_seed, "random seed");

    Common c_qpv;
    std::string qpv_p, qpv_q;
    std::vector<std::string> qpv_gens;
    auto* cmd_qpv = app.add_subcommand("qp-verify", "verify a quasi-primeness violation (P, Q)");
    c_qpv.attach(cmd_qpv);
    cmd_qpv->add_option("p", qpv_p)->required();
    cmd_qpv->add_option("q", qpv_q)->required();
    cmd_qpv->add_option("--ideal", qpv_gens, "generators")->required();

    Common c_qps;
    std::vector<std::string> qps_gens, qps_pairs;
    int qps_deg = 3;
    std::uint64_t qps_seed = 1, qps_budget = 2000;
    auto* cmd_qps = app.add_subcommand("qp-search", "bounded search for quasi-primeness violations");
    c_qps.attach(cmd_qps);
    cmd_qps->add_option("--ideal", qps_gens, "generators")->required();
    cmd_qps->add_option("--pair", qps_pairs, "user pair, given as two polynomials (repeatable)");
    cmd_qps->add_option("--degree-bound", qps_deg, "degree bound for P and Q");
    cmd_qps->add_option("--seed", qps_seed, "random seed");
    cmd_qps->add_option("--samples", qps_budget, "random pair budget");

    Common c_si;
    std::vector<std::string> si_gens;
    int si_bound = 2;
    auto* cmd_si = app.add_subcommand("symm-ideal", "symmetrized ideal (exact or bounded)");
    c_si.attach(cmd_si);
    cmd_si->add_option("--ideal", si_gens, "generators")->required();
    cmd_si->add_option("--degree-bound", si_bound, "cofactor degree bound");

    // ---- variety ----
    Common c_vc;
    std::vector<std::string> vc_gens;
    bool vc_catalog = false;
    auto* cmd_vc = app.add_subcommand("vc", "slice algebraic set V_c(I)");
    c_vc.attach(cmd_vc);
    cmd_vc->add_option("--ideal", vc_gens, "generators")->required();
    cmd_vc->add_flag("--slice-catalog", vc_catalog,
                     "solve per-slice over the built-in rational slice catalog");

    Common c_sym;
    std::vector<std::string> sym_points;
    auto* cmd_sym = app.add_subcommand("symmetrize", "symmetrization of a finite point set");
    c_sym.attach(cmd_sym);
    cmd_sym->add_option("--point", sym_points,
                        "commuting point, coordinates separated by ';' (repeatable)")
        ->required();

    Common c_thm;
    std::vector<std::string> thm_gens;
    int thm_bound = 2;
    auto* cmd_thm = app.add_subcommand("thm36-check",
                                       "compare the symmetrized zero set with the zero set "
                                       "of the symmetrized ideal");
    c_thm.attach(cmd_thm);
    cmd_thm->add_option("--ideal", thm_gens, "generators")->required();
    cmd_thm->add_option("--degree-bound", thm_bound, "symmetrized-ideal bound");

    Common c_red;
    std::vector<std::string> red_gens;
    int red_bound = 2;
    auto* cmd_red = app.add_subcommand("reducibility", "search for a reducibility witness");
    c_red.attach(cmd_red);
    cmd_red->add_option("--ideal", red_gens, "generators")->required();
    cmd_red->add_option("--degree-bound", red_bound, "construction bound");

    auto* cmd_examples = app.add_subcommand("paper-examples", "run the bundled example suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_eval) {
            SlicePoly p = parse_poly(eval_poly, c_eval.nvars);
            if (static_cast<int>(eval_at.size()) != c_eval.nvars)
                throw std::invalid_argument("need one coordinate per variable");
            std::vector<Quaternion> pt;
            for (const auto& a : eval_at) pt.push_back(parse_quaternion(a));
            CommutingPoint cp = canonicalize(pt);  // rejects non-commuting points
            Quaternion v = eval_pointwise(p, cp);
            emit(c_eval, {{"value", to_json(v)}}, to_string(v));
            return kExitOk;
        }
        if (*cmd_mul) {
            SlicePoly r = star_mul(parse_poly(mul_a, c_mul.nvars), parse_poly(mul_b, c_mul.nvars));
            emit(c_mul, to_json(r, c_mul.mono_order()), format(r, c_mul.mono_order()));
            return kExitOk;
        }
        if (*cmd_conj) {
            SlicePoly r = regular_conj(parse_poly(conj_p, c_conj.nvars));
            emit(c_conj, to_json(r, c_conj.mono_order()), format(r, c_conj.mono_order()));
            return kExitOk;
        }
        if (*cmd_symm) {
            SlicePoly r = symmetrization(parse_poly(symm_p, c_symm.nvars));
            emit(c_symm, to_json(r, c_symm.mono_order()), format(r, c_symm.mono_order()));
            return kExitOk;
        }
        if (*cmd_div) {
            auto [q, r] = right_divide(parse_poly(div_p, 1), parse_poly(div_d, 1));
            emit(c_div, {{"quotient", to_json(q)}, {"remainder", to_json(r)}},
                 "quotient: " + format(q) + "\nremainder: " + format(r));
            return kExitOk;
        }
        if (*cmd_roots) {
            auto z = roots(parse_poly(roots_p, 1));
            std::ostringstream os;
            for (const auto& r : z.isolated) {
                if (r.exact) os << "root " << to_string(r.value);
                else os << "numeric root (residual " << r.residual << ")";
                os << " multiplicity " << r.multiplicity << "\n";
            }
            for (const auto& s : z.spheres) {
                if (s.exact)
                    os << "sphere " << ArrangedOrbit{{s.x}, {s.y2}, {1}}.to_text();
                else os << "numeric sphere (" << s.x_num << "," << s.y2_num << ")";
                os << " multiplicity " << s.multiplicity << "\n";
            }
            std::string text = os.str().empty() ? "no zeros" : os.str();
            if (!text.empty() && text.back() == '\n') text.pop_back();
            emit(c_roots, to_json(z), text);
            return kExitOk;
        }
        if (*cmd_gb) {
            auto ideal = read_ideal(gb_gens, c_gb);
            auto gb = ideal.groebner_polys();
            json arr = json::array();
            std::ostringstream os;
            for (const auto& g : gb) {
                arr.push_back(to_json(g, c_gb.mono_order()));
                os << format(g, c_gb.mono_order()) << "\n";
            }
            std::string text = os.str();
            if (!text.empty() && text.back() == '\n') text.pop_back();
            emit(c_gb, {{"basis", arr}}, text);
            return kExitOk;
        }
        if (*cmd_member) {
            auto ideal = read_ideal(member_gens, c_member);
            auto m = ideal.member(parse_poly(member_p, c_member.nvars));
            std::ostringstream os;
            os << "member: " << (m.member ? "true" : "false");
            if (m.member) {
                os << "\ncertificate cofactors:";
                for (std::size_t i = 0; i < m.certificate.cofactors.size(); ++i)
                    os << "\n  h" << i + 1 << " = "
                       << format(m.certificate.cofactors[i], c_member.mono_order());
            } else {
                os << "\nremainder: " << format(m.remainder, c_member.mono_order());
            }
            emit(c_member, to_json(m, c_member.mono_order()), os.str());
            return m.member ? kExitOk : kExitNegative;
        }
        if (*cmd_rad) {
            auto ideal = read_ideal(rad_gens, c_rad);
            RandomQuat rnd(rad_seed);
            std::vector<Quaternion> samples;
            for (unsigned t = 0; t < rad_samples; ++t)
                samples.push_back(rnd.nonzero_quaternion(4, 3));
            auto rep = radical_member_bounded(parse_poly(rad_p, c_rad.nvars), ideal, rad_nmax,
                                              samples);
            std::ostringstream os;
            os << (rep.all_succeeded ? "all sampled scalings succeeded"
                                     : "some sampled scalings failed")
               << " (N_max " << rep.n_max << ", " << rep.samples.size() << " samples)\n"
               << rep.disclaimer;
            emit(c_rad, to_json(rep, c_rad.mono_order()), os.str());
            return rep.all_succeeded ? kExitOk : kExitNegative;
        }
        if (*cmd_qpv) {
            auto ideal = read_ideal(qpv_gens, c_qpv);
            SlicePoly p = parse_poly(qpv_p, c_qpv.nvars), q = parse_poly(qpv_q, c_qpv.nvars);
            auto inc = ideal.member(star_mul(p, q));
            QuasiPrimeViolation v{p, q, inc.certificate, ideal.member(p).remainder,
                                  ideal.member(symmetrization(q)).remainder};
            std::string why;
            bool ok = inc.member && quasi_prime_violation_verify(v, ideal, &why);
            if (!inc.member) why = "P*Q is not a member of the ideal";
            emit(c_qpv,
                 json{{"violation", ok}, {"reason", ok ? json(nullptr) : json(why)}},
                 ok ? "verified violation: P*Q in I, P not in I, Q^s not in I"
                    : "not a violation: " + why);
            return ok ? kExitOk : kExitNegative;
        }
        if (*cmd_qps) {
            auto ideal = read_ideal(qps_gens, c_qps);
            QpSearchOptions opt;
            opt.max_degree = qps_deg;
            opt.seed = qps_seed;
            opt.random_budget = qps_budget;
            if (qps_pairs.size() % 2)
                throw std::invalid_argument("--pair needs polynomials in pairs");
            for (std::size_t i = 0; i + 1 < qps_pairs.size(); i += 2)
                opt.user_pairs.emplace_back(parse_poly(qps_pairs[i], c_qps.nvars),
                                            parse_poly(qps_pairs[i + 1], c_qps.nvars));
            auto v = quasi_prime_search_bounded(ideal, opt);
            if (v) {
                emit(c_qps, to_json(*v, c_qps.mono_order()),
                     "violation found:\n  P = " + format(v->p, c_qps.mono_order()) +
                         "\n  Q = " + format(v->q, c_qps.mono_order()));
                return kExitOk;
            }
            emit(c_qps, json{{"violation", nullptr}},
                 "no violation found within the bounds (not a proof of quasi-primeness)");
            return kExitNegative;
        }
        if (*cmd_si) {
            auto ideal = read_ideal(si_gens, c_si);
            auto s = symmetrized_ideal(ideal, si_bound);
            json arr = json::array();
            std::ostringstream os;
            os << (s.exact ? "exact symmetrized ideal"
                           : "bounded inner approximation of the symmetrized ideal")
               << "\n";
            for (const auto& g : s.basis.generators()) {
                arr.push_back(to_json(g, c_si.mono_order()));
                os << format(g, c_si.mono_order()) << "\n";
            }
            std::string text = os.str();
            text.pop_back();
            emit(c_si, {{"exact", s.exact}, {"generators", arr}}, text);
            return kExitOk;
        }
        if (*cmd_vc) {
            auto ideal = read_ideal(vc_gens, c_vc);
            VcOptions opt;
            if (vc_catalog) opt.slice_catalog = default_slice_catalog();
            auto v = vc_compute(ideal, opt);
            emit(c_vc, to_json(v), describe_vc(v));
            return kExitOk;
        }
        if (*cmd_sym) {
            std::vector<CommutingPoint> pts;
            for (const auto& spec : sym_points) {
                std::vector<Quaternion> coords;
                std::istringstream is(spec);
                std::string part;
                while (std::getline(is, part, ';')) coords.push_back(parse_quaternion(part));
                pts.push_back(canonicalize(coords));
            }
            auto v = symmetrize_set(pts);
            emit(c_sym, to_json(v), describe_vc(v));
            return kExitOk;
        }
        if (*cmd_thm) {
            auto ideal = read_ideal(thm_gens, c_thm);
            auto rep = theorem36_check(ideal, thm_bound);
            emit(c_thm, to_json(rep), rep.summary);
            return rep.equal ? kExitOk : kExitNegative;
        }
        if (*cmd_red) {
            auto ideal = read_ideal(red_gens, c_red);
            auto v = vc_compute(ideal);
            auto w = reducibility_witness(v, ideal, red_bound);
            if (!w) {
                emit(c_red, json{{"witness", nullptr}},
                     "no witness found (this does not prove irreducibility)");
                return kExitNegative;
            }
            auto gens_json = [&](const RightIdealBasis& b) {
                json arr = json::array();
                for (const auto& g : b.generators())
                    arr.push_back(to_json(g, c_red.mono_order()));
                return arr;
            };
            std::ostringstream os;
            os << "reducible; verified witness pair:\nI1:";
            for (const auto& g : w->i1.generators()) os << "\n  " << format(g, c_red.mono_order());
            os << "\nI2:";
            for (const auto& g : w->i2.generators()) os << "\n  " << format(g, c_red.mono_order());
            emit(c_red, {{"witness", {{"I1", gens_json(w->i1)}, {"I2", gens_json(w->i2)}}}},
                 os.str());
            return kExitOk;
        }
        if (*cmd_examples) return run_examples();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedInstance& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
