#pragma once

// Dense univariate polynomials R[x] over a PID R, with the pieces of
// arithmetic the Ore and Groebner layers need: pseudo-division, content and
// primitive part, gcd over R[x], exact division, the shift automorphism.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pid.hpp"

namespace oc {

template <class R> class Poly {
  public:
    using traits = ring_traits<R>;
    using coeff_type = R;

    Poly() = default;
    Poly(const R &c) {
        if (!traits::is_zero(c))
            c_.push_back(c);
    }
    explicit Poly(long c) : Poly(traits::from_int(c)) {}
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(traits::one(), 1); }
    static Poly monomial(const R &c, int d) {
        if (traits::is_zero(c))
            return {};
        std::vector<R> v(d + 1, traits::zero());
        v[d] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const R &lc() const { return c_.back(); }
    R coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : traits::zero(); }
    const std::vector<R> &coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }
    const R &operator[](std::size_t i) const { return c_[i]; }

    friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto &v : r.c_)
            v = -v;
        return r;
    }
    Poly &operator+=(const Poly &o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), traits::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), traits::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly &operator*=(const R &s) {
        if (traits::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto &v : c_)
            v *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(Poly a, const R &s) { return a *= s; }
    friend Poly operator*(const R &s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly &a, const Poly &b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (traits::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }

    /// this -= c * x^d * g
    void submul(const R &c, int d, const Poly &g) {
        if (traits::is_zero(c) || g.is_zero())
            return;
        std::size_t need = g.c_.size() + d;
        if (need > c_.size())
            c_.resize(need, traits::zero());
        for (std::size_t j = 0; j < g.c_.size(); ++j)
            submul_coeff(c_[j + d], c, g.c_[j]);
        trim();
    }

    /// Divide every coefficient exactly by the constant s.
    Poly &divexact_const(const R &s) {
        for (auto &v : c_)
            v = traits::divexact(v, s);
        return *this;
    }

    /// Multiply by x^d.
    Poly shifted_up(int d) const {
        if (is_zero() || d == 0)
            return *this;
        std::vector<R> v(d, traits::zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    R eval(const R &at) const {
        R acc = traits::zero();
        for (int i = degree(); i >= 0; --i)
            acc = acc * at + c_[i];
        return acc;
    }

    std::string str(const std::string &var = "x") const;

  private:
    static void submul_coeff(R &acc, const R &a, const R &b) { acc -= a * b; }
    void trim() {
        while (!c_.empty() && traits::is_zero(c_.back()))
            c_.pop_back();
    }
    std::vector<R> c_;
};

template <> inline void Poly<ZZ>::submul_coeff(ZZ &acc, const ZZ &a, const ZZ &b) {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

template <class R> std::string Poly<R>::str(const std::string &var) const {
    using T = ring_traits<R>;
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        R a = c_[i];
        if (T::is_zero(a))
            continue;
        bool neg = T::is_negative(a);
        if (neg)
            a = -a;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string cs = T::str(a);
        if (!T::is_atomic(a))
            cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (!T::is_one(a))
            out += cs + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

/// Result of pseudo-division: s*f = q*g + h, s a power of lc(g), deg h < deg g.
template <class R> struct PseudoDivision {
    R s;
    Poly<R> q;
    Poly<R> h;
};

/// Pseudo-division that only multiplies by lc(g) when the current leading
/// coefficient is not already divisible by it.
template <class R> PseudoDivision<R> pseudo_divide(const Poly<R> &f, const Poly<R> &g) {
    using T = ring_traits<R>;
    if (g.is_zero())
        throw DomainError("pseudo_divide: division by the zero polynomial");
    R s = T::one();
    Poly<R> q, h = f;
    const R &b = g.lc();
    while (!h.is_zero() && h.degree() >= g.degree()) {
        int d = h.degree() - g.degree();
        R a = h.lc();
        if (!T::divides(b, a)) {
            h *= b;
            q *= b;
            s *= b;
            a = h.lc();
        }
        R c = T::divexact(a, b);
        q += Poly<R>::monomial(c, d);
        h.submul(c, d, g);
    }
    return {s, q, h};
}

/// Exact quotient f/g in R[x]; throws DomainError if g does not divide f.
template <class R> Poly<R> divexact(const Poly<R> &f, const Poly<R> &g) {
    using T = ring_traits<R>;
    if (g.is_zero())
        throw DomainError("divexact: division by the zero polynomial");
    if (f.is_zero())
        return {};
    if (f.degree() < g.degree())
        throw DomainError("divexact: inexact polynomial division");
    Poly<R> h = f;
    std::vector<R> q(f.degree() - g.degree() + 1, T::zero());
    const R &b = g.lc();
    while (!h.is_zero() && h.degree() >= g.degree()) {
        int d = h.degree() - g.degree();
        if (!T::divides(b, h.lc()))
            throw DomainError("divexact: inexact polynomial division");
        R c = T::divexact(h.lc(), b);
        h.submul(c, d, g);
        q[d] = std::move(c);
    }
    if (!h.is_zero())
        throw DomainError("divexact: inexact polynomial division");
    return Poly<R>(std::move(q));
}

/// True iff g divides f in R[x].
template <class R> bool divides(const Poly<R> &g, const Poly<R> &f) {
    using T = ring_traits<R>;
    if (g.is_zero())
        return f.is_zero();
    Poly<R> h = f;
    const R &b = g.lc();
    while (!h.is_zero() && h.degree() >= g.degree()) {
        if (!T::divides(b, h.lc()))
            return false;
        h.submul(T::divexact(h.lc(), b), h.degree() - g.degree(), g);
    }
    return h.is_zero();
}

/// Content: normalized gcd of the coefficients; content(0) = 0.
template <class R> R content(const Poly<R> &f) {
    using T = ring_traits<R>;
    R g = T::zero();
    for (const auto &c : f.coeffs()) {
        g = T::gcd(g, c);
        if (T::is_one(g))
            break;
    }
    return T::normal(g);
}

/// (c, g) with f = c*g, c the normalized content and g primitive.
template <class R> std::pair<R, Poly<R>> content_primitive(const Poly<R> &f) {
    R c = content(f);
    if (ring_traits<R>::is_zero(c))
        return {c, Poly<R>()};
    Poly<R> g = f;
    if (!ring_traits<R>::is_one(c))
        g.divexact_const(c);
    return {c, g};
}

template <class R> Poly<R> primitive_part(const Poly<R> &f) { return content_primitive(f).second; }

/// Associate of f whose leading coefficient is a canonical associate in R.
template <class R> Poly<R> normalize(const Poly<R> &f) {
    using T = ring_traits<R>;
    if (f.is_zero())
        return f;
    R u = T::unit_part(f.lc());
    if (T::is_one(u))
        return f;
    return f * T::unit_inverse(u);
}

/// Canonical primitive associate: primitive part, then unit-normalized.
template <class R> Poly<R> primitive_normal(const Poly<R> &f) { return normalize(primitive_part(f)); }

namespace detail {

template <class R> Poly<R> prs_gcd_primitive(Poly<R> a, Poly<R> b) {
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        Poly<R> r = pseudo_divide(a, b).h;
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_normal(a);
}

inline ZZ max_norm(const Poly<ZZ> &f) {
    ZZ m = 0;
    for (auto &c : f.coeffs())
        if (abs(c) > m)
            m = abs(c);
    return m;
}

// Heuristic gcd (evaluation at a large integer and balanced interpolation).
inline bool heuristic_gcd(const Poly<ZZ> &f, const Poly<ZZ> &g, Poly<ZZ> &out) {
    ZZ xi = 2 * std::min(max_norm(f), max_norm(g)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(std::max(f.degree(), g.degree()) + 1) >
            200000)
            return false;
        ZZ h = ring_traits<ZZ>::gcd(f.eval(xi), g.eval(xi));
        std::vector<ZZ> coeffs;
        ZZ half = xi / 2;
        while (sgn(h) != 0) {
            ZZ r = h % xi;
            if (r < 0)
                r += xi;
            if (r > half)
                r -= xi;
            coeffs.push_back(r);
            h = (h - r) / xi;
        }
        Poly<ZZ> cand = primitive_normal(Poly<ZZ>(std::move(coeffs)));
        if (!cand.is_zero() && divides(cand, f) && divides(cand, g)) {
            out = cand;
            return true;
        }
        xi = xi * 73794 / 27011;
    }
    return false;
}

template <class R> Poly<R> primitive_gcd(const Poly<R> &a, const Poly<R> &b) { return prs_gcd_primitive(a, b); }

template <> inline Poly<ZZ> primitive_gcd<ZZ>(const Poly<ZZ> &a, const Poly<ZZ> &b) {
    if (a.degree() == 0 || b.degree() == 0)
        return Poly<ZZ>(1);
    Poly<ZZ> out;
    if (heuristic_gcd(a, b, out))
        return out;
    return prs_gcd_primitive(a, b);
}

} // namespace detail

/// gcd over R[x], normalized (canonical leading coefficient). gcd(0,0) = 0.
template <class R> Poly<R> gcd(const Poly<R> &a, const Poly<R> &b) {
    using T = ring_traits<R>;
    if (a.is_zero())
        return normalize(b);
    if (b.is_zero())
        return normalize(a);
    auto [ca, pa] = content_primitive(a);
    auto [cb, pb] = content_primitive(b);
    R c = T::gcd(ca, cb);
    Poly<R> g = detail::primitive_gcd(pa, pb);
    return normalize(g * c);
}

template <class R> Poly<R> lcm(const Poly<R> &a, const Poly<R> &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    return normalize(divexact(a, gcd(a, b)) * b);
}

/// f(x + j): the j-th power of the shift automorphism x -> x + 1.
template <class R> Poly<R> shift(const Poly<R> &f, long j) {
    using T = ring_traits<R>;
    if (j == 0 || f.degree() <= 0)
        return f;
    // Horner in the basis (x + j)
    const R a = T::from_int(j);
    std::vector<R> acc;
    for (int i = f.degree(); i >= 0; --i) {
        // acc = acc*(x + a) + c_i
        acc.insert(acc.begin(), T::zero());
        for (std::size_t k = 0; k + 1 < acc.size(); ++k)
            acc[k] += a * acc[k + 1];
        acc[0] += f[i];
    }
    return Poly<R>(std::move(acc));
}

template <class R> Poly<R> derivative(const Poly<R> &f) {
    using T = ring_traits<R>;
    if (f.degree() <= 0)
        return {};
    std::vector<R> v(f.degree());
    for (int i = 1; i <= f.degree(); ++i)
        v[i - 1] = f[i] * T::from_int(i);
    return Poly<R>(std::move(v));
}

/// Result of the extended gcd over the fraction field Q_R[x].
///
/// `s` is the generator produced in R[x] by fraction-free extended Euclid,
/// with sum_i cofactors[i]*gens[i] == s exactly. `primitive` is the
/// canonical primitive associate s' and `scale` the constant d in R with
/// s = d*s'.
template <class R> struct FractionFieldGcd {
    Poly<R> s;
    std::vector<Poly<R>> cofactors;
    Poly<R> primitive;
    R scale;
};

template <class R> FractionFieldGcd<R> extended_gcd_over_fraction_field(const std::vector<Poly<R>> &gens) {
    using T = ring_traits<R>;
    const std::size_t m = gens.size();
    auto unit_row = [m](std::size_t i) {
        std::vector<Poly<R>> u(m);
        u[i] = Poly<R>(1);
        return u;
    };
    // Divides the identity r = sum u_i g_i by the common content of all entries.
    auto shrink = [](Poly<R> &r, std::vector<Poly<R>> &u) {
        R c = content(r);
        for (auto &p : u) {
            if (T::is_one(c))
                return;
            c = T::gcd(c, content(p));
        }
        if (T::is_zero(c) || T::is_one(c))
            return;
        r.divexact_const(c);
        for (auto &p : u)
            p.divexact_const(c);
    };

    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i)
        if (!gens[i].is_zero()) {
            first = i;
            break;
        }
    if (first == m)
        throw DomainError("extended_gcd_over_fraction_field: all generators are zero");

    Poly<R> r0 = gens[first];
    std::vector<Poly<R>> u0 = unit_row(first);
    for (std::size_t i = first + 1; i < m; ++i) {
        if (gens[i].is_zero())
            continue;
        Poly<R> r1 = gens[i];
        std::vector<Poly<R>> u1 = unit_row(i);
        if (r1.degree() > r0.degree()) {
            std::swap(r0, r1);
            std::swap(u0, u1);
        }
        while (!r1.is_zero()) {
            auto pd = pseudo_divide(r0, r1);
            // pd.s*r0 - pd.q*r1 = pd.h
            std::vector<Poly<R>> u2(m);
            for (std::size_t j = 0; j < m; ++j)
                u2[j] = u0[j] * pd.s - pd.q * u1[j];
            Poly<R> r2 = pd.h;
            shrink(r2, u2);
            r0 = std::move(r1);
            u0 = std::move(u1);
            r1 = std::move(r2);
            u1 = std::move(u2);
        }
    }
    // canonical sign for the generator
    R u = T::unit_part(r0.lc());
    if (!T::is_one(u)) {
        R inv = T::unit_inverse(u);
        r0 *= inv;
        for (auto &p : u0)
            p *= inv;
    }
    Poly<R> prim = primitive_normal(r0);
    R scale = T::divexact(r0.lc(), prim.lc());
    return {r0, u0, prim, scale};
}

} // namespace oc
