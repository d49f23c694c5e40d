#pragma once

// Text input: operators such as "(n+1)*Dn^2 - 3" and backward recurrences
// such as "n*a[n] = a[n-1] + (n-2)*a[n-2]".

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "closure.hpp"

namespace oc {

enum class RingKind { ZZ, QQt };

inline std::string ring_name(RingKind k) { return k == RingKind::ZZ ? "ZZ" : "QQt"; }

inline RingKind parse_ring(const std::string &s) {
    if (s == "ZZ" || s == "Z")
        return RingKind::ZZ;
    if (s == "QQt" || s == "QQ_t" || s == "QQ[t]")
        return RingKind::QQt;
    throw ParseError("unknown ring '" + s + "' (expected ZZ or QQt)", 0);
}

inline OreAlgebra parse_algebra(const std::string &s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw ParseError("algebra must look like shift:<var> or diff:<var>", 0);
    std::string kind = s.substr(0, colon), var = s.substr(colon + 1);
    if (var.empty() || !std::isalpha(static_cast<unsigned char>(var[0])))
        throw ParseError("bad variable name '" + var + "'", colon + 1);
    for (char ch : var)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            throw ParseError("bad variable name '" + var + "'", colon + 1);
    if (var == "t")
        throw ParseError("'t' is reserved for the parameter of QQt", colon + 1);
    if (var[0] == 'D')
        throw ParseError("variable names may not start with D", colon + 1);
    if (kind == "shift")
        return OreAlgebra::shift_algebra(var);
    if (kind == "diff" || kind == "differential")
        return OreAlgebra::differential_algebra(var);
    throw ParseError("unknown algebra kind '" + kind + "'", 0);
}

namespace detail {

struct Token {
    enum Kind { num, ident, sym, end } kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string &s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isspace(ch)) {
            ++i;
        } else if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Token::num, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(ch) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string("+-*^()[]=/").find(static_cast<char>(ch)) != std::string::npos) {
            out.push_back({Token::sym, std::string(1, static_cast<char>(ch)), i});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'", i);
        }
    }
    out.push_back({Token::end, "", s.size()});
    return out;
}

template <class R> R ring_integer(const std::string &digits) {
    if constexpr (std::is_same_v<R, ZZ>)
        return ZZ(digits);
    else
        return R(QQ(ZZ(digits)));
}

/// Divides by a constant; exact over ZZ.
template <class R> Poly<R> divide_by_constant(const Poly<R> &f, const R &c, std::size_t pos) {
    if (c == R(0))
        throw ParseError("division by zero", pos);
    if constexpr (std::is_same_v<R, ZZ>) {
        std::vector<ZZ> v;
        for (const auto &a : f.coeffs()) {
            if (!ring_traits<ZZ>::divides(c, a))
                throw ParseError("division is not exact over ZZ", pos);
            v.push_back(a / c);
        }
        return Poly<ZZ>(std::move(v));
    } else {
        if (c.degree() != 0)
            throw ParseError("only division by nonzero rational constants is supported", pos);
        QQ inv = QQ(1) / c.lead();
        return f * Poly<R>(R(inv));
    }
}

/// Values of the recurrence grammar: a polynomial, or a combination of
/// shifted sequence terms sum_j c_j(n) * a[n+j].
template <class R> struct SeqValue {
    bool is_seq = false;
    Poly<R> scalar;
    std::map<long, Poly<R>> terms;
};

template <class R, bool Recurrence> class Parser {
  public:
    using Value = std::conditional_t<Recurrence, SeqValue<R>, OreOperator<R>>;

    Parser(const std::string &text, OreAlgebra alg, bool allow_t)
        : toks_(tokenize(text)), alg_(std::move(alg)), allow_t_(allow_t) {}

    Value parse_all() {
        Value v = expr();
        expect_end();
        return v;
    }

    Value expr() {
        bool neg = false;
        if (peek("+") || peek("-")) {
            neg = peek("-");
            ++i_;
        }
        Value v = term();
        if (neg)
            v = negate(v);
        while (peek("+") || peek("-")) {
            bool minus = peek("-");
            ++i_;
            Value w = term();
            v = minus ? sub(v, w) : add(v, w);
        }
        return v;
    }

    void expect_end() {
        if (toks_[i_].kind != Token::end)
            throw ParseError("unexpected '" + toks_[i_].text + "'", toks_[i_].pos);
    }

    bool peek(const char *s) const { return toks_[i_].kind == Token::sym && toks_[i_].text == s; }
    void consume(const char *s) {
        if (!peek(s))
            throw ParseError(std::string("expected '") + s + "'" +
                                 (toks_[i_].kind == Token::end ? " before end of input" : ""),
                             toks_[i_].pos);
        ++i_;
    }
    std::size_t pos() const { return toks_[i_].pos; }

  private:
    Value term() {
        Value v = power();
        while (peek("*") || peek("/")) {
            bool div = peek("/");
            std::size_t p = pos();
            ++i_;
            Value w = power();
            v = div ? divide(v, w, p) : mul(v, w, p);
        }
        return v;
    }

    Value power() {
        Value base = atom();
        if (peek("^")) {
            std::size_t p = pos();
            ++i_;
            if (toks_[i_].kind != Token::num)
                throw ParseError("exponent must be a nonnegative integer", toks_[i_].pos);
            if (toks_[i_].text.size() > 4)
                throw ParseError("exponent too large", toks_[i_].pos);
            int e = std::stoi(toks_[i_].text);
            ++i_;
            Value r = one();
            for (int j = 0; j < e; ++j)
                r = mul(r, base, p);
            return r;
        }
        return base;
    }

    Value atom() {
        const Token &tk = toks_[i_];
        if (tk.kind == Token::num) {
            ++i_;
            return constant(Poly<R>(ring_integer<R>(tk.text)));
        }
        if (tk.kind == Token::sym && tk.text == "(") {
            ++i_;
            Value v = expr();
            consume(")");
            return v;
        }
        if (tk.kind == Token::ident) {
            ++i_;
            if (tk.text == alg_.var)
                return constant(Poly<R>(std::vector<R>{R(0), R(1)}));
            if (tk.text == "t") {
                if constexpr (std::is_same_v<R, QtPoly>) {
                    if (allow_t_)
                        return constant(Poly<R>(QtPoly::t()));
                }
                throw ParseError("the parameter t needs --ring QQt", tk.pos);
            }
            if constexpr (!Recurrence) {
                if (tk.text == alg_.op_symbol())
                    return OreOperator<R>::d_power(alg_, 1);
            } else {
                if (peek("["))
                    return sequence_term(tk);
            }
            throw ParseError("unknown symbol '" + tk.text + "'", tk.pos);
        }
        if (tk.kind == Token::end)
            throw ParseError("unexpected end of input", tk.pos);
        throw ParseError("unexpected '" + tk.text + "'", tk.pos);
    }

    Value sequence_term(const Token &name) {
        if (seq_name_.empty())
            seq_name_ = name.text;
        else if (seq_name_ != name.text)
            throw ParseError("only one sequence name may appear", name.pos);
        consume("[");
        if (toks_[i_].kind != Token::ident || toks_[i_].text != alg_.var)
            throw ParseError("sequence index must be " + alg_.var + " or " + alg_.var + "+j", toks_[i_].pos);
        ++i_;
        long off = 0;
        if (peek("+") || peek("-")) {
            bool minus = peek("-");
            ++i_;
            if (toks_[i_].kind != Token::num || toks_[i_].text.size() > 6)
                throw ParseError("expected an integer offset", toks_[i_].pos);
            off = std::stol(toks_[i_].text);
            if (minus)
                off = -off;
            ++i_;
        }
        consume("]");
        SeqValue<R> v;
        v.is_seq = true;
        v.terms[off] = Poly<R>(ring_traits<R>::one());
        return v;
    }

    // value operations

    Value constant(const Poly<R> &p) const {
        if constexpr (Recurrence) {
            SeqValue<R> v;
            v.scalar = p;
            return v;
        } else {
            return OreOperator<R>(alg_, {p});
        }
    }
    Value one() const { return constant(Poly<R>(ring_traits<R>::one())); }

    static Value negate(const Value &v) {
        if constexpr (Recurrence) {
            SeqValue<R> r = v;
            r.scalar = -r.scalar;
            for (auto &[k, c] : r.terms)
                c = -c;
            return r;
        } else {
            return -v;
        }
    }

    Value add(const Value &a, const Value &b) const {
        if constexpr (Recurrence) {
            if (a.is_seq != b.is_seq)
                throw ParseError("cannot add a sequence term and a polynomial", pos());
            SeqValue<R> r = a;
            r.scalar += b.scalar;
            for (const auto &[k, c] : b.terms) {
                r.terms[k] += c;
                if (r.terms[k].is_zero())
                    r.terms.erase(k);
            }
            return r;
        } else {
            return a + b;
        }
    }
    Value sub(const Value &a, const Value &b) const { return add(a, negate(b)); }

    Value mul(const Value &a, const Value &b, std::size_t p) const {
        if constexpr (Recurrence) {
            if (a.is_seq && b.is_seq)
                throw ParseError("product of two sequence terms", p);
            if (!a.is_seq && !b.is_seq)
                return constant(a.scalar * b.scalar);
            const SeqValue<R> &s = a.is_seq ? a : b;
            const Poly<R> &c = a.is_seq ? b.scalar : a.scalar;
            SeqValue<R> r;
            r.is_seq = true;
            for (const auto &[k, v] : s.terms)
                if (!(c * v).is_zero())
                    r.terms[k] = c * v;
            return r;
        } else {
            (void)p;
            return a * b;
        }
    }

    Value divide(const Value &a, const Value &b, std::size_t p) const {
        Poly<R> d;
        if constexpr (Recurrence) {
            if (b.is_seq)
                throw ParseError("division by a sequence term", p);
            d = b.scalar;
        } else {
            if (b.order() > 0)
                throw ParseError("division by an operator", p);
            d = b.is_zero() ? Poly<R>() : b.lc();
        }
        if (d.degree() > 0)
            throw ParseError("division by a non-constant polynomial", p);
        R c = d.is_zero() ? R(0) : d.lc();
        if constexpr (Recurrence) {
            SeqValue<R> r = a;
            r.scalar = divide_by_constant(r.scalar, c, p);
            for (auto &[k, v] : r.terms)
                v = divide_by_constant(v, c, p);
            return r;
        } else {
            std::vector<Poly<R>> v;
            for (const auto &x : a.coeffs())
                v.push_back(divide_by_constant(x, c, p));
            return OreOperator<R>(alg_, std::move(v));
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    OreAlgebra alg_;
    bool allow_t_;
    std::string seq_name_;
};

} // namespace detail

template <class R> OreOperator<R> parse_operator(const std::string &text, const OreAlgebra &alg) {
    detail::Parser<R, false> p(text, alg, std::is_same_v<R, QtPoly>);
    auto L = p.parse_all();
    if (L.is_zero())
        throw ParseError("the operator is zero", 0);
    return L;
}

/// Backward recurrence "lhs = rhs" in sequence terms a[n+j], normalized to
/// the forward operator sum_i e_i(n) D^i by n -> n + shift.
template <class R> struct ParsedRecurrence {
    OreOperator<R> op;
    /// the substitution n -> n + shift that was applied
    long shift = 0;
};

template <class R> ParsedRecurrence<R> parse_recurrence(const std::string &text, const OreAlgebra &alg) {
    if (alg.kind != OreKind::shift)
        throw UnsupportedShape("recurrences need the shift algebra");
    detail::Parser<R, true> p(text, alg, std::is_same_v<R, QtPoly>);
    auto lhs = p.expr();
    p.consume("=");
    auto rhs = p.expr();
    p.expect_end();
    if (!lhs.is_seq && !lhs.scalar.is_zero())
        throw ParseError("left-hand side is not a sequence expression", 0);
    if (!rhs.is_seq && !rhs.scalar.is_zero())
        throw ParseError("right-hand side is not a sequence expression", 0);
    std::map<long, Poly<R>> t = lhs.terms;
    for (const auto &[k, c] : rhs.terms) {
        t[k] -= c;
        if (t[k].is_zero())
            t.erase(k);
    }
    if (t.empty())
        throw ParseError("the recurrence is trivial", 0);
    long lo = t.begin()->first, hi = t.rbegin()->first;
    std::vector<Poly<R>> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto &[k, v] : t)
        c[static_cast<std::size_t>(k - lo)] = shift(v, -lo);
    return {OreOperator<R>(alg, std::move(c)), -lo};
}

/// True when the text contains '=' (recurrence input).
inline bool looks_like_recurrence(const std::string &text) { return text.find('=') != std::string::npos; }

} // namespace oc
