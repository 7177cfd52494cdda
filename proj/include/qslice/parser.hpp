#ifndef QSLICE_PARSER_HPP
#define QSLICE_PARSER_HPP

#include "qslice/slice_poly.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qslice {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Surface syntax tree. `*` is always the slice product and `^` the star
/// power; lowering star-expands and normalizes coefficients to the right.
struct PolyExpr {
    enum class Kind { Add, Sub, Neg, Mul, Pow, Var, Lit };
    Kind kind = Kind::Lit;
    std::vector<PolyExpr> children;
    int var_index = 0;       // Var: 1-based
    unsigned exponent = 0;   // Pow
    Quaternion literal;      // Lit
};

namespace detail {

struct Lexer {
    enum class Tok { Number, Var, Unit, Plus, Minus, Star, Caret, LParen, RParen, End };

    explicit Lexer(std::string text) : text_(std::move(text)) { advance(); }

    Tok tok = Tok::End;
    std::string value;    // number text or unit letter
    int var_index = -1;   // -1 = bare q
    std::size_t tok_pos = 0;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_pos = pos_;
        if (pos_ >= text_.size()) { tok = Tok::End; return; }
        char c = text_[pos_];
        switch (c) {
            case '+': tok = Tok::Plus;   ++pos_; return;
            case '-': tok = Tok::Minus;  ++pos_; return;
            case '*': tok = Tok::Star;   ++pos_; return;
            case '^': tok = Tok::Caret;  ++pos_; return;
            case '(': tok = Tok::LParen; ++pos_; return;
            case ')': tok = Tok::RParen; ++pos_; return;
            default: break;
        }
        if (c == 'i' || c == 'j' || c == 'k') {
            tok = Tok::Unit;
            value.assign(1, c);
            ++pos_;
            return;
        }
        if (c == 'q') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            tok = Tok::Var;
            var_index = (pos_ == start) ? -1 : std::stoi(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                std::size_t save = pos_++;
                std::size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (pos_ == dstart) pos_ = save;  // '/' did not start a denominator
            }
            tok = Tok::Number;
            value = text_.substr(start, pos_ - start);
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

private:
    std::string text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    PolyExpr parse() {
        PolyExpr e = expr();
        if (lex_.tok != Lexer::Tok::End)
            throw ParseError("trailing input", lex_.tok_pos);
        return e;
    }

private:
    using Tok = Lexer::Tok;
    Lexer lex_;

    bool starts_atom() const {
        return lex_.tok == Tok::Number || lex_.tok == Tok::Var || lex_.tok == Tok::Unit ||
               lex_.tok == Tok::LParen;
    }

    PolyExpr signed_term() {
        bool neg = false;
        while (lex_.tok == Tok::Plus || lex_.tok == Tok::Minus) {
            if (lex_.tok == Tok::Minus) neg = !neg;
            lex_.advance();
        }
        PolyExpr t = term();
        if (!neg) return t;
        PolyExpr n;
        n.kind = PolyExpr::Kind::Neg;
        n.children.push_back(std::move(t));
        return n;
    }

    PolyExpr expr() {
        PolyExpr acc = signed_term();
        while (lex_.tok == Tok::Plus || lex_.tok == Tok::Minus) {
            bool sub = lex_.tok == Tok::Minus;
            lex_.advance();
            PolyExpr rhs = signed_term();
            PolyExpr n;
            n.kind = sub ? PolyExpr::Kind::Sub : PolyExpr::Kind::Add;
            n.children.push_back(std::move(acc));
            n.children.push_back(std::move(rhs));
            acc = std::move(n);
        }
        return acc;
    }

    // juxtaposition of factors is the slice product
    PolyExpr term() {
        PolyExpr acc = factor();
        for (;;) {
            if (lex_.tok == Tok::Star) {
                lex_.advance();
                if (!starts_atom()) throw ParseError("expected factor after '*'", lex_.tok_pos);
            } else if (!starts_atom()) {
                break;
            }
            PolyExpr rhs = factor();
            PolyExpr n;
            n.kind = PolyExpr::Kind::Mul;
            n.children.push_back(std::move(acc));
            n.children.push_back(std::move(rhs));
            acc = std::move(n);
        }
        return acc;
    }

    PolyExpr factor() {
        PolyExpr base = atom();
        if (lex_.tok == Tok::Caret) {
            lex_.advance();
            if (lex_.tok != Tok::Number || lex_.value.find('/') != std::string::npos)
                throw ParseError("expected natural-number exponent after '^'", lex_.tok_pos);
            PolyExpr n;
            n.kind = PolyExpr::Kind::Pow;
            n.exponent = static_cast<unsigned>(std::stoul(lex_.value));
            n.children.push_back(std::move(base));
            lex_.advance();
            return n;
        }
        return base;
    }

    PolyExpr atom() {
        switch (lex_.tok) {
            case Tok::LParen: {
                lex_.advance();
                PolyExpr e = expr();
                if (lex_.tok != Tok::RParen)
                    throw ParseError("expected ')'", lex_.tok_pos);
                lex_.advance();
                return e;
            }
            case Tok::Var: {
                PolyExpr e;
                e.kind = PolyExpr::Kind::Var;
                e.var_index = lex_.var_index;  // -1 for bare q, resolved at lowering
                lex_.advance();
                return e;
            }
            case Tok::Number: {
                PolyExpr e;
                e.kind = PolyExpr::Kind::Lit;
                e.literal = Quaternion(parse_rational(lex_.value));
                lex_.advance();
                return e;
            }
            case Tok::Unit: {
                PolyExpr e;
                e.kind = PolyExpr::Kind::Lit;
                e.literal = lex_.value == "i"   ? Quaternion::unit_i()
                            : lex_.value == "j" ? Quaternion::unit_j()
                                                : Quaternion::unit_k();
                lex_.advance();
                return e;
            }
            default:
                throw ParseError("expected expression", lex_.tok_pos);
        }
    }
};

}  // namespace detail

inline PolyExpr parse_expr(const std::string& text) { return detail::Parser(text).parse(); }

/// Lowers the syntax tree into normal form in H[q1,...,qn].
inline SlicePoly lower(const PolyExpr& e, int nvars) {
    switch (e.kind) {
        case PolyExpr::Kind::Add: return lower(e.children[0], nvars) + lower(e.children[1], nvars);
        case PolyExpr::Kind::Sub: return lower(e.children[0], nvars) - lower(e.children[1], nvars);
        case PolyExpr::Kind::Neg: return -lower(e.children[0], nvars);
        case PolyExpr::Kind::Mul:
            return star_mul(lower(e.children[0], nvars), lower(e.children[1], nvars));
        case PolyExpr::Kind::Pow: return star_pow(lower(e.children[0], nvars), e.exponent);
        case PolyExpr::Kind::Var: {
            int idx = e.var_index;
            if (idx == -1) {
                if (nvars != 1)
                    throw ParseError("bare variable 'q' requires a single-variable ring", 0);
                idx = 1;
            }
            if (idx < 1 || idx > nvars)
                throw ParseError("variable index out of range: q" + std::to_string(idx), 0);
            return SlicePoly::variable(nvars, idx - 1);
        }
        case PolyExpr::Kind::Lit: return SlicePoly::constant(nvars, e.literal);
    }
    throw std::logic_error("unreachable");
}

inline SlicePoly parse_poly(const std::string& text, int nvars) {
    return lower(parse_expr(text), nvars);
}

namespace detail {

inline std::string monomial_text(const MultiIndex& e, int nvars) {
    std::string out;
    for (int k = 0; k < nvars; ++k) {
        if (!e[k]) continue;
        if (!out.empty()) out += " ";
        out += "q";
        if (nvars > 1) out += std::to_string(k + 1);
        if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
    return out;
}

}  // namespace detail

/// Deterministic human-readable form: terms sorted descending by the active
/// order, each coefficient split over the basis 1, i, j, k and printed on
/// the right of its monomial. parse(format(P)) == P.
inline std::string format(const SlicePoly& p, const MonomialOrder& ord = MonomialOrder::degrevlex()) {
    if (p.is_zero()) return "0";

    std::vector<const std::pair<const MultiIndex, Quaternion>*> sorted;
    for (const auto& t : p.terms) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.less(b->first, a->first); });

    static const char* units[4] = {"", "i", "j", "k"};
    std::string out;
    for (auto* t : sorted) {
        const auto comps = t->second.components();
        const std::string mono = detail::monomial_text(t->first, p.nvars);
        for (int u = 0; u < 4; ++u) {
            if (comps[u] == 0) continue;
            Rational c = comps[u];
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += (c < 0) ? " - " : " + ";
            }
            Rational a = c < 0 ? Rational(-c) : c;
            std::string piece;
            bool coeff_shown = (a != 1) || (mono.empty() && u == 0);
            if (coeff_shown) piece += to_string(a);
            if (!mono.empty()) {
                if (coeff_shown && p.nvars > 1) piece += " ";
                piece += mono;
            }
            if (u != 0) {
                if (!piece.empty()) piece += mono.empty() ? "" : " ";
                piece += units[u];
            }
            out += piece;
        }
    }
    return out;
}

/// Quaternion constants parse through the same grammar in a 1-variable ring.
inline Quaternion parse_quaternion(const std::string& text) {
    SlicePoly p = parse_poly(text, 1);
    if (!p.is_constant()) throw ParseError("expected a constant quaternion", 0);
    return p.is_zero() ? Quaternion(0) : p.terms.begin()->second;
}

}  // namespace qslice

#endif
