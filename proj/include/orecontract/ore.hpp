#pragma once

// Ore operators sum_i l_i D^i over R[x] (OreOperator) and over the fraction
// field (RatOreOperator), for the shift rule D x = (x+1) D and the
// differential rule D x = x D + 1.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ratfunc.hpp"

namespace oc {

enum class OreKind { shift, differential };

struct OreAlgebra {
    OreKind kind = OreKind::shift;
    std::string var = "n";

    static OreAlgebra shift_algebra(std::string v = "n") { return {OreKind::shift, std::move(v)}; }
    static OreAlgebra differential_algebra(std::string v = "x") { return {OreKind::differential, std::move(v)}; }

    std::string op_symbol() const { return "D" + var; }
    std::string descriptor() const { return (kind == OreKind::shift ? "shift:" : "diff:") + var; }

    /// sigma^j(f)
    template <class C> C sigma(const C &f, long j = 1) const {
        if (kind == OreKind::differential || j == 0)
            return f;
        return shift(f, j);
    }
    /// delta(f)
    template <class C> C delta(const C &f) const {
        if (kind == OreKind::shift)
            return C();
        return derivative(f);
    }

    friend bool operator==(const OreAlgebra &a, const OreAlgebra &b) { return a.kind == b.kind && a.var == b.var; }
    friend bool operator!=(const OreAlgebra &a, const OreAlgebra &b) { return !(a == b); }
};

template <class C> class OreOp {
  public:
    OreOp() = default;
    explicit OreOp(OreAlgebra alg) : alg_(std::move(alg)) {}
    OreOp(OreAlgebra alg, std::vector<C> coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) { trim(); }

    /// D^i
    static OreOp d_power(const OreAlgebra &alg, std::size_t i) {
        std::vector<C> v(i + 1);
        v[i] = C(C::traits::one());
        return OreOp(alg, std::move(v));
    }
    static OreOp constant(const OreAlgebra &alg, const C &c) { return OreOp(alg, {c}); }

    const OreAlgebra &algebra() const { return alg_; }
    bool is_zero() const { return c_.empty(); }
    /// order; -1 for the zero operator
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C &lc() const { return c_.back(); }
    const std::vector<C> &coeffs() const { return c_; }
    C coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : C(); }
    void set_coeff(std::size_t i, C v) {
        if (c_.size() <= i)
            c_.resize(i + 1);
        c_[i] = std::move(v);
        trim();
    }

    friend bool operator==(const OreOp &a, const OreOp &b) { return a.alg_ == b.alg_ && a.c_ == b.c_; }
    friend bool operator!=(const OreOp &a, const OreOp &b) { return !(a == b); }

    OreOp operator-() const {
        OreOp r = *this;
        for (auto &v : r.c_)
            v = -v;
        return r;
    }
    OreOp &operator+=(const OreOp &o) {
        check(o);
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    OreOp &operator-=(const OreOp &o) {
        check(o);
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend OreOp operator+(OreOp a, const OreOp &b) { return a += b; }
    friend OreOp operator-(OreOp a, const OreOp &b) { return a -= b; }

    /// c * P (left multiplication by a coefficient)
    friend OreOp operator*(const C &c, const OreOp &p) {
        OreOp r(p.alg_);
        if (is_zero_coeff(c))
            return r;
        r.c_.reserve(p.c_.size());
        for (const auto &v : p.c_)
            r.c_.push_back(c * v);
        r.trim();
        return r;
    }

    /// D * P
    OreOp d_times() const {
        OreOp r(alg_);
        if (is_zero())
            return r;
        r.c_.assign(c_.size() + 1, C());
        for (std::size_t j = 0; j < c_.size(); ++j) {
            r.c_[j + 1] += alg_.sigma(c_[j]);
            if (alg_.kind == OreKind::differential)
                r.c_[j] += alg_.delta(c_[j]);
        }
        r.trim();
        return r;
    }

    friend OreOp operator*(const OreOp &p, const OreOp &q) {
        p.check(q);
        OreOp r(p.alg_);
        if (p.is_zero() || q.is_zero())
            return r;
        OreOp dq = q; // D^i * q
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (i > 0)
                dq = dq.d_times();
            if (!is_zero_coeff(p.c_[i]))
                r += p.c_[i] * dq;
        }
        return r;
    }
    OreOp &operator*=(const OreOp &o) { return *this = *this * o; }

    std::string str() const;

  private:
    static bool is_zero_coeff(const C &c) { return c.is_zero(); }
    void check(const OreOp &o) const {
        if (alg_ != o.alg_ && !is_zero() && !o.is_zero())
            throw DomainError("operators from different Ore algebras");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
    OreAlgebra alg_;
    std::vector<C> c_;
};

template <class R> using OreOperator = OreOp<Poly<R>>;
template <class R> using RatOreOperator = OreOp<RatFunc<R>>;

namespace detail {
template <class C> std::string coeff_str(const C &c, const std::string &var) { return c.str(var); }
} // namespace detail

/// Canonical text form, highest order first, e.g. `(16*n + 1)*Dn^2 - 3`.
template <class C> std::string OreOp<C>::str() const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    const std::string d = alg_.op_symbol();
    for (int i = order(); i >= 0; --i) {
        const C &c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        std::string mag = detail::coeff_str(c, alg_.var);
        bool neg = mag[0] == '-';
        if (neg)
            mag = detail::coeff_str(-c, alg_.var);
        bool single = mag.find(' ') == std::string::npos;
        std::string term;
        if (i == 0) {
            term = single ? mag : "(" + mag + ")";
        } else {
            std::string dp = d + (i > 1 ? "^" + std::to_string(i) : "");
            if (mag == "1")
                term = dp;
            else
                term = (single ? mag : "(" + mag + ")") + "*" + dp;
        }
        if (first)
            out += neg ? "-" + term : term;
        else
            out += neg ? " - " + term : " + " + term;
        first = false;
    }
    return out;
}

/// Embeds a polynomial operator into Q_R(x)[D].
template <class R> RatOreOperator<R> to_rational(const OreOperator<R> &P) {
    std::vector<RatFunc<R>> v;
    v.reserve(P.coeffs().size());
    for (const auto &c : P.coeffs())
        v.emplace_back(c);
    return RatOreOperator<R>(P.algebra(), std::move(v));
}

/// Quotient and remainder of the right division F = Q*G + rem, order(rem) < order(G).
template <class R> struct RightDivision {
    RatOreOperator<R> quotient;
    RatOreOperator<R> remainder;
};

template <class R>
RightDivision<R> right_divide(const RatOreOperator<R> &F, const RatOreOperator<R> &G,
                              StepBudget &budget = unlimited_budget()) {
    if (G.is_zero())
        throw DomainError("right division by the zero operator");
    if (F.algebra() != G.algebra() && !F.is_zero())
        throw DomainError("operators from different Ore algebras");
    const OreAlgebra &alg = G.algebra();
    const int r = G.order();
    RatOreOperator<R> rem = F, quo(alg);
    std::vector<RatOreOperator<R>> dG{G}; // D^j * G
    while (rem.order() >= r) {
        int j = rem.order() - r;
        while (static_cast<int>(dG.size()) <= j)
            dG.push_back(dG.back().d_times());
        // lc(D^j G) = sigma^j(lc G)
        RatFunc<R> c = rem.lc() / dG[static_cast<std::size_t>(j)].lc();
        RatOreOperator<R> term(alg);
        term.set_coeff(static_cast<std::size_t>(j), c);
        quo += term;
        rem -= c * dG[static_cast<std::size_t>(j)];
        budget.tick();
    }
    return {quo, rem};
}

template <class R>
RatOreOperator<R> rrem(const RatOreOperator<R> &F, const RatOreOperator<R> &G,
                       StepBudget &budget = unlimited_budget()) {
    return right_divide(F, G, budget).remainder;
}

template <class R>
RatOreOperator<R> rrem(const OreOperator<R> &F, const OreOperator<R> &G, StepBudget &budget = unlimited_budget()) {
    return right_divide(to_rational(F), to_rational(G), budget).remainder;
}

/// sigma^j(f) in the given algebra.
template <class R> Poly<R> apply_sigma_power(const OreAlgebra &alg, const Poly<R> &f, long j) {
    return alg.sigma(f, j);
}

/// (b, P') with P' = b*P in R[x][D], b = lcm of the coefficient denominators.
template <class R> struct ClearedOperator {
    Poly<R> b;
    OreOperator<R> op;
};

template <class R> ClearedOperator<R> clear_denominators(const RatOreOperator<R> &P) {
    Poly<R> b(ring_traits<R>::one());
    for (const auto &c : P.coeffs())
        if (!c.is_zero())
            b = lcm(b, c.den());
    std::vector<Poly<R>> v;
    v.reserve(P.coeffs().size());
    for (const auto &c : P.coeffs())
        v.push_back(c.is_zero() ? Poly<R>() : c.num() * divexact(b, c.den()));
    return {b, OreOperator<R>(P.algebra(), std::move(v))};
}

/// The operator with polynomial coefficients when every denominator is 1.
template <class R> OreOperator<R> to_polynomial(const RatOreOperator<R> &P) {
    std::vector<Poly<R>> v;
    for (const auto &c : P.coeffs()) {
        if (!c.is_polynomial())
            throw DomainError("operator has non-polynomial coefficients");
        v.push_back(c.num());
    }
    return OreOperator<R>(P.algebra(), std::move(v));
}

/// Exact left quotient Q with F = Q*L over Q_R(x)[D]; throws if L does not right-divide F.
template <class R>
RatOreOperator<R> left_quotient(const OreOperator<R> &F, const OreOperator<R> &L,
                                StepBudget &budget = unlimited_budget()) {
    auto d = right_divide(to_rational(F), to_rational(L), budget);
    if (!d.remainder.is_zero())
        throw DomainError("left_quotient: operator is not a left multiple");
    return d.quotient;
}

/// gcd in R of the contents of all coefficients (normalized).
template <class R> R r_content(const OreOperator<R> &L) {
    using T = ring_traits<R>;
    R g = T::zero();
    for (const auto &c : L.coeffs()) {
        g = T::gcd(g, content(c));
        if (T::is_one(g))
            break;
    }
    return T::normal(g);
}

/// Polynomial gcd of all coefficients.
template <class R> Poly<R> poly_content(const OreOperator<R> &L) {
    Poly<R> g;
    for (const auto &c : L.coeffs()) {
        g = gcd(g, c);
        if (g.degree() == 0 && ring_traits<R>::is_one(g.lc()))
            break;
    }
    return g;
}

template <class R> OreOperator<R> divide_coeffs(const OreOperator<R> &L, const Poly<R> &g) {
    std::vector<Poly<R>> v;
    for (const auto &c : L.coeffs())
        v.push_back(divexact(c, g));
    return OreOperator<R>(L.algebra(), std::move(v));
}

template <class R> OreOperator<R> scale(const OreOperator<R> &L, const R &c) { return Poly<R>(c) * L; }

/// L divided by its polynomial content, with a canonical leading coefficient.
template <class R> OreOperator<R> primitive_normal(const OreOperator<R> &L) {
    if (L.is_zero())
        return L;
    OreOperator<R> P = divide_coeffs(L, poly_content(L));
    R u = ring_traits<R>::unit_part(P.lc().lc());
    if (!ring_traits<R>::is_one(u))
        P = scale(P, ring_traits<R>::unit_inverse(u));
    return P;
}

/// Operator of the form sum c_i D^i from a coefficient list.
template <class R> OreOperator<R> make_operator(const OreAlgebra &alg, std::vector<Poly<R>> coeffs) {
    return OreOperator<R>(alg, std::move(coeffs));
}

} // namespace oc
