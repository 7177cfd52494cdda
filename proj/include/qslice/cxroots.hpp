#ifndef QSLICE_CXROOTS_HPP
#define QSLICE_CXROOTS_HPP

#include "qslice/rational.hpp"
#include "qslice/slice_poly.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qslice {

/// Gaussian rational re + im * i.
struct CxRat {
    Rational re{0}, im{0};

    CxRat() = default;
    CxRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit CxRat(Rational r) : re(std::move(r)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    CxRat conj() const { return {re, -im}; }

    friend CxRat operator+(const CxRat& a, const CxRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CxRat operator-(const CxRat& a, const CxRat& b) { return {a.re - b.re, a.im - b.im}; }
    CxRat operator-() const { return {-re, -im}; }
    friend CxRat operator*(const CxRat& a, const CxRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CxRat operator/(const CxRat& a, const CxRat& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const CxRat& a, const CxRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CxRat& a, const CxRat& b) { return !(a == b); }
    friend bool operator<(const CxRat& a, const CxRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
    Quaternion to_quaternion() const { return {re, im, 0, 0}; }
};

/// Dense univariate polynomial over the Gaussian rationals; coeff[k] is the
/// coefficient of z^k.
struct CxPoly {
    std::vector<CxRat> coeff;

    void normalize() {
        while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
    }
    bool is_zero() const { return coeff.empty(); }
    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    const CxRat& lead() const { return coeff.back(); }
    bool is_real() const {
        for (const auto& c : coeff)
            if (!c.is_real()) return false;
        return true;
    }

    CxRat eval(const CxRat& z) const {
        CxRat acc;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * z + *it;
        return acc;
    }
    std::complex<double> eval(const std::complex<double>& z) const {
        std::complex<double> acc;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * z + it->to_complex();
        return acc;
    }

    static CxPoly from_roots_free(std::vector<CxRat> c) {
        CxPoly p{std::move(c)};
        p.normalize();
        return p;
    }
};

inline CxPoly operator*(const CxPoly& a, const CxPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    CxPoly r;
    r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, CxRat{});
    for (std::size_t i = 0; i < a.coeff.size(); ++i)
        for (std::size_t j = 0; j < b.coeff.size(); ++j)
            r.coeff[i + j] = r.coeff[i + j] + a.coeff[i] * b.coeff[j];
    r.normalize();
    return r;
}

inline CxPoly operator+(const CxPoly& a, const CxPoly& b) {
    CxPoly r = a;
    if (r.coeff.size() < b.coeff.size()) r.coeff.resize(b.coeff.size());
    for (std::size_t i = 0; i < b.coeff.size(); ++i) r.coeff[i] = r.coeff[i] + b.coeff[i];
    r.normalize();
    return r;
}

inline CxPoly operator-(const CxPoly& a, const CxPoly& b) {
    CxPoly r = a;
    if (r.coeff.size() < b.coeff.size()) r.coeff.resize(b.coeff.size());
    for (std::size_t i = 0; i < b.coeff.size(); ++i) r.coeff[i] = r.coeff[i] - b.coeff[i];
    r.normalize();
    return r;
}

inline std::pair<CxPoly, CxPoly> divmod(const CxPoly& a, const CxPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    CxPoly q, r = a;
    if (a.degree() >= d.degree()) q.coeff.assign(a.degree() - d.degree() + 1, CxRat{});
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        CxRat c = r.lead() / d.lead();
        q.coeff[shift] = q.coeff[shift] + c;
        for (std::size_t i = 0; i < d.coeff.size(); ++i)
            r.coeff[shift + i] = r.coeff[shift + i] - c * d.coeff[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

inline CxPoly gcd(CxPoly a, CxPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        CxRat lc = a.lead();
        for (auto& c : a.coeff) c = c / lc;
    }
    return a;
}

inline CxPoly derivative(const CxPoly& p) {
    CxPoly d;
    for (int k = 1; k <= p.degree(); ++k)
        d.coeff.push_back(p.coeff[k] * CxRat(Rational(k)));
    d.normalize();
    return d;
}

/// SlicePoly (one variable, coefficients in C_i) -> dense complex model.
inline CxPoly to_cx_poly(const SlicePoly& p) {
    if (p.nvars != 1) throw std::invalid_argument("univariate polynomial expected");
    CxPoly out;
    for (const auto& [e, c] : p.terms) {
        if (c.y != 0 || c.z != 0)
            throw std::invalid_argument("coefficients outside C_i");
        if (out.coeff.size() <= e[0]) out.coeff.resize(e[0] + 1);
        out.coeff[e[0]] = CxRat(c.w, c.x);
    }
    out.normalize();
    return out;
}

inline SlicePoly from_cx_poly(const CxPoly& p) {
    SlicePoly out(1);
    for (int k = 0; k <= p.degree(); ++k)
        out.add_term(MultiIndex{static_cast<std::uint32_t>(k)},
                     Quaternion(p.coeff[k].re, p.coeff[k].im, 0, 0));
    return out;
}

// ---------------------------------------------------------------------------
// Numeric roots (Durand-Kerner) with exact snap-and-verify extraction.
// Exact factors are verified by exact division before being trusted and are
// deflated exactly, so numeric error never contaminates exact output.
// ---------------------------------------------------------------------------

inline std::vector<std::complex<double>> durand_kerner(const CxPoly& p) {
    int n = p.degree();
    if (n <= 0) return {};
    std::vector<std::complex<double>> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = p.coeff[k].to_complex();
    for (int k = 0; k <= n; ++k) c[k] /= p.coeff[n].to_complex();

    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    z[0] = seed;
    for (int k = 1; k < n; ++k) z[k] = z[k - 1] * seed;
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int k = n; k >= 0; --k) acc = acc * x + c[k];
        return acc;
    };
    for (int it = 0; it < 1000; ++it) {
        double delta = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> d = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) d *= z[i] - z[j];
            if (std::abs(d) < 1e-300) { d = 1e-300; }
            std::complex<double> step = eval(z[i]) / d;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-15) break;
    }
    return z;
}

struct ExactRoot { CxRat z; int mult; };
/// Conjugate pair x +- sqrt(y2) i when y2 > 0; real pair x +- sqrt(-y2)
/// when y2 < 0 (irrational real roots with rational sum and product).
struct QuadFactor { Rational x, y2; int mult; };
struct NumericRoot { std::complex<double> z; double residual; };

struct RootSet {
    std::vector<ExactRoot> exact;
    std::vector<QuadFactor> quads;
    std::vector<NumericRoot> numeric;
};

/// Multiplicity of an exactly verified factor; deflates p in place.
inline int deflate_all(CxPoly& p, const CxPoly& factor) {
    int mult = 0;
    for (;;) {
        auto [q, r] = divmod(p, factor);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++mult;
    }
    return mult;
}

inline RootSet find_roots(const CxPoly& input, const Integer& snap_den = Integer(1000000)) {
    RootSet out;
    if (input.is_zero()) throw std::domain_error("root finding on the zero polynomial");
    CxPoly whole = input;  // multiplicities read off this by exact deflation
    whole.normalize();

    // square-free part keeps the numeric roots simple and well conditioned
    CxPoly sf = whole;
    CxPoly g = gcd(whole, derivative(whole));
    if (g.degree() > 0) sf = divmod(whole, g).first;
    const bool real_input = whole.is_real();

    bool progress = true;
    while (sf.degree() > 0 && progress) {
        progress = false;
        auto zs = durand_kerner(sf);
        for (const auto& z : zs) {
            if (sf.degree() == 0) break;
            // Gaussian-rational root
            CxRat cand(snap_to_rational(z.real(), snap_den),
                       std::abs(z.imag()) < 1e-9 ? Rational(0) : snap_to_rational(z.imag(), snap_den));
            if (sf.eval(cand).is_zero()) {
                CxPoly lin;
                lin.coeff = {-cand, CxRat(Rational(1))};
                deflate_all(sf, lin);
                out.exact.push_back({cand, deflate_all(whole, lin)});
                progress = true;
                continue;
            }
            // rational quadratic factor from a conjugate pair
            if (real_input && sf.degree() >= 2 && std::abs(z.imag()) > 1e-9) {
                Rational s = 2 * snap_to_rational(z.real(), snap_den);
                Rational pr = snap_to_rational(std::norm(z), snap_den);
                CxPoly quad;
                quad.coeff = {CxRat(pr), CxRat(-s), CxRat(Rational(1))};
                if (deflate_all(sf, quad) > 0) {
                    Rational x = s / 2;
                    out.quads.push_back({x, pr - x * x, deflate_all(whole, quad)});
                    progress = true;
                }
            }
        }
        // pair of irrational real roots with rational sum/product
        if (!progress && real_input && sf.degree() >= 2) {
            auto zs2 = durand_kerner(sf);
            for (std::size_t i = 0; i < zs2.size() && !progress; ++i) {
                for (std::size_t j = i + 1; j < zs2.size() && !progress; ++j) {
                    if (std::abs(zs2[i].imag()) > 1e-9 || std::abs(zs2[j].imag()) > 1e-9) continue;
                    Rational s = snap_to_rational(zs2[i].real() + zs2[j].real(), snap_den);
                    Rational pr = snap_to_rational(zs2[i].real() * zs2[j].real(), snap_den);
                    CxPoly quad;
                    quad.coeff = {CxRat(pr), CxRat(-s), CxRat(Rational(1))};
                    if (deflate_all(sf, quad) > 0) {
                        Rational x = s / 2;
                        out.quads.push_back({x, pr - x * x, deflate_all(whole, quad)});
                        progress = true;
                    }
                }
            }
        }
    }

    if (sf.degree() > 0) {
        for (const auto& z : durand_kerner(sf))
            out.numeric.push_back({z, std::abs(input.eval(z))});
    }
    return out;
}

}  // namespace qslice

#endif
