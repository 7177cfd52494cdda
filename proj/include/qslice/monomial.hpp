#ifndef QSLICE_MONOMIAL_HPP
#define QSLICE_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qslice {

/// Exponent tuple of a monomial q1^e1 ... qn^en.
using MultiIndex = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const MultiIndex& m) {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multi-index arity mismatch");
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool divides(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline MultiIndex quotient(const MultiIndex& b, const MultiIndex& a) {
    MultiIndex r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

/// Total order on monomials; degrevlex is the default, lex is available for
/// elimination. An optional permutation reorders variable priorities; empty
/// means q1 > q2 > ... > qn.
struct MonomialOrder {
    enum class Kind { degrevlex, lex };
    Kind kind = Kind::degrevlex;
    std::vector<std::uint32_t> perm;  // perm[rank] = variable index

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::lex, {}}; }

    std::uint32_t var_at(std::size_t rank, std::size_t n) const {
        if (perm.empty()) return static_cast<std::uint32_t>(rank);
        if (perm.size() != n) throw std::invalid_argument("order permutation arity mismatch");
        return perm[rank];
    }

    // true iff a < b
    bool less(const MultiIndex& a, const MultiIndex& b) const {
        const std::size_t n = a.size();
        if (kind == Kind::lex) {
            for (std::size_t r = 0; r < n; ++r) {
                auto v = var_at(r, n);
                if (a[v] != b[v]) return a[v] < b[v];
            }
            return false;
        }
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        // revlex tie-break: last variable with differing exponent, larger is smaller
        for (std::size_t r = n; r-- > 0;) {
            auto v = var_at(r, n);
            if (a[v] != b[v]) return a[v] > b[v];
        }
        return false;
    }

    bool equal_spec(const MonomialOrder& o) const {
        return kind == o.kind && perm == o.perm;
    }
};

}  // namespace qslice

#endif
