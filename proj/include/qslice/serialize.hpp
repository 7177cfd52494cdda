#ifndef QSLICE_SERIALIZE_HPP
#define QSLICE_SERIALIZE_HPP

#include "qslice/ideal.hpp"
#include "qslice/parser.hpp"
#include "qslice/univar.hpp"
#include "qslice/variety.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace qslice {

using nlohmann::json;

/// Decimal digits for numeric (non-exact) output; exact values are never
/// affected. Controlled by QSLICE_NUMERIC_DIGITS, default 30.
inline int numeric_digits() {
    if (const char* env = std::getenv("QSLICE_NUMERIC_DIGITS")) {
        int d = std::atoi(env);
        if (d >= 1 && d <= 60) return d;
    }
    return 30;
}

inline std::string numeric_string(double v) {
    std::ostringstream os;
    os.precision(numeric_digits());
    os << v;
    return os.str();
}

inline json to_json(const Quaternion& q) {
    return json::array({to_string(q.w), to_string(q.x), to_string(q.y), to_string(q.z)});
}

inline json to_json(const SlicePoly& p, const MonomialOrder& ord = MonomialOrder::degrevlex()) {
    std::vector<const std::pair<const MultiIndex, Quaternion>*> sorted;
    for (const auto& t : p.terms) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
    json terms = json::array();
    for (auto* t : sorted)
        terms.push_back({{"exp", t->first}, {"coeff", to_json(t->second)}});
    return {{"nvars", p.nvars}, {"terms", terms}};
}

inline json to_json(const QuatD& q) {
    return json::array({numeric_string(q.w), numeric_string(q.x), numeric_string(q.y),
                        numeric_string(q.z)});
}

inline json to_json(const UnivarZeroSet& z) {
    json isolated = json::array();
    for (const auto& r : z.isolated) {
        json e{{"exact", r.exact},
               {"approx", to_json(r.approx)},
               {"residual", r.residual},
               {"multiplicity", r.multiplicity}};
        if (r.exact) e["value"] = to_json(r.value);
        isolated.push_back(e);
    }
    json spheres = json::array();
    for (const auto& s : z.spheres) {
        json e{{"exact", s.exact}, {"residual", s.residual}, {"multiplicity", s.multiplicity}};
        if (s.exact) {
            e["x"] = to_string(s.x);
            e["y2"] = to_string(s.y2);
        } else {
            e["x"] = numeric_string(s.x_num);
            e["y2"] = numeric_string(s.y2_num);
        }
        spheres.push_back(e);
    }
    return {{"isolated", isolated}, {"spheres", spheres}};
}

inline json to_json(const MembershipCertificate& c, const MonomialOrder& ord) {
    json cof = json::array();
    for (const auto& h : c.cofactors) cof.push_back(to_json(h, ord));
    return {{"target", to_json(c.target, ord)}, {"cofactors", cof}};
}

inline json to_json(const MemberResult& m, const MonomialOrder& ord) {
    json out{{"member", m.member}};
    if (m.member) out["certificate"] = to_json(m.certificate, ord);
    else out["remainder"] = to_json(m.remainder, ord);
    return out;
}

inline json to_json(const RadicalReport& r, const MonomialOrder& ord) {
    json samples = json::array();
    for (const auto& s : r.samples) {
        json e{{"a", to_json(s.a)}};
        if (s.least_n) e["least_N"] = *s.least_n;
        else e["least_N"] = nullptr;
        samples.push_back(e);
    }
    return {{"p", to_json(r.p, ord)},
            {"N_max", r.n_max},
            {"all_succeeded", r.all_succeeded},
            {"samples", samples},
            {"disclaimer", r.disclaimer}};
}

inline json to_json(const QuasiPrimeViolation& v, const MonomialOrder& ord) {
    return {{"p", to_json(v.p, ord)},
            {"q", to_json(v.q, ord)},
            {"inclusion_certificate", to_json(v.inclusion, ord)},
            {"p_remainder", to_json(v.exclusion_p_remainder, ord)},
            {"qs_remainder", to_json(v.exclusion_qs_remainder, ord)}};
}

inline json to_json(const ArrangedOrbit& o) {
    json x = json::array(), y2 = json::array(), y = json::array();
    for (std::size_t k = 0; k < o.x.size(); ++k) {
        x.push_back(to_string(o.x[k]));
        y2.push_back(to_string(o.y2[k]));
        // best-effort signed magnitude; exact only when y2 is a square
        double mag = std::sqrt(to_double(o.y2[k]));
        y.push_back(numeric_string(o.sgn[k] < 0 ? -mag : mag));
    }
    return {{"x", x}, {"y2", y2}, {"sgn", o.sgn}, {"y", y}, {"exact", true},
            {"text", o.to_text()}};
}

inline json to_json(const CommutingPoint& p) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(to_json(c));
    return coords;
}

inline json to_json(const VcResult& v) {
    json real_points = json::array();
    for (const auto& p : v.real_points) real_points.push_back(to_json(p));
    json orbits = json::array();
    for (const auto& o : v.orbits) orbits.push_back(to_json(o));
    json iso = json::array();
    for (const auto& p : v.isolated_nonreal) iso.push_back(to_json(p));
    json npts = json::array();
    for (const auto& p : v.numeric_points) {
        json coords = json::array();
        for (const auto& c : p.coords) coords.push_back(to_json(c));
        npts.push_back({{"coords", coords}, {"residual", p.residual}, {"exact", false}});
    }
    json norb = json::array();
    for (const auto& o : v.numeric_orbits) {
        json x = json::array(), y2 = json::array();
        for (double d : o.x) x.push_back(numeric_string(d));
        for (double d : o.y2) y2.push_back(numeric_string(d));
        norb.push_back({{"x", x}, {"y2", y2}, {"residual", o.residual}, {"exact", false}});
    }
    json out{{"real_points", real_points},
             {"orbits", orbits},
             {"isolated_nonreal", iso},
             {"exact", v.exact},
             {"partial", v.partial}};
    if (!npts.empty()) out["numeric_points"] = npts;
    if (!norb.empty()) out["numeric_orbits"] = norb;
    if (!v.notes.empty()) out["notes"] = v.notes;
    return out;
}

inline json to_json(const Thm36Report& r) {
    return {{"lhs_symmetrized_zero_set", to_json(r.lhs)},
            {"rhs_zero_set_of_symmetrized_ideal", to_json(r.rhs)},
            {"symmetrized_ideal_exact", r.symmetrized_exactly},
            {"equal", r.equal},
            {"lhs_subset_of_rhs", r.lhs_subset},
            {"summary", r.summary}};
}

}  // namespace qslice

#endif
