#pragma once

// Coefficient rings. Two principal ideal domains are supported: the integers
// (mpz_class) and univariate polynomials in a parameter t with rational
// coefficients (QtPoly). Both are driven through ring_traits<R>.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace oc {

using ZZ = mpz_class;
using QQ = mpq_class;

/// Dense polynomial in the parameter t over the rationals, lowest degree first.
/// Invariant: no trailing zero coefficient; zero is the empty vector.
class QtPoly {
  public:
    QtPoly() = default;
    QtPoly(long v) {
        if (v != 0)
            c_.emplace_back(v);
    }
    QtPoly(const QQ &v) {
        if (sgn(v) != 0) {
            c_.push_back(v);
            c_.back().canonicalize();
        }
    }
    // callers may hand in uncanonical fractions like 4/2
    explicit QtPoly(std::vector<QQ> coeffs) : c_(std::move(coeffs)) {
        for (auto &x : c_)
            x.canonicalize();
        trim();
    }

    static QtPoly t() { return QtPoly(std::vector<QQ>{QQ(0), QQ(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<QQ> &coeffs() const { return c_; }
    QQ coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : QQ(0); }
    const QQ &lead() const { return c_.back(); }

    friend bool operator==(const QtPoly &a, const QtPoly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const QtPoly &a, const QtPoly &b) { return !(a == b); }

    QtPoly operator-() const {
        QtPoly r = *this;
        for (auto &x : r.c_)
            x = -x;
        return r;
    }
    QtPoly &operator+=(const QtPoly &o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), QQ(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    QtPoly &operator-=(const QtPoly &o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), QQ(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend QtPoly operator+(QtPoly a, const QtPoly &b) { return a += b; }
    friend QtPoly operator-(QtPoly a, const QtPoly &b) { return a -= b; }
    friend QtPoly operator*(const QtPoly &a, const QtPoly &b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<QQ> r(a.c_.size() + b.c_.size() - 1, QQ(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return QtPoly(std::move(r));
    }
    QtPoly &operator*=(const QtPoly &o) { return *this = *this * o; }

    /// Euclidean division over the rationals.
    static std::pair<QtPoly, QtPoly> divrem(const QtPoly &a, const QtPoly &b) {
        if (b.is_zero())
            throw DomainError("division by zero in QQ[t]");
        if (a.degree() < b.degree())
            return {QtPoly(), a};
        std::vector<QQ> r = a.c_;
        std::vector<QQ> q(a.c_.size() - b.c_.size() + 1, QQ(0));
        const QQ inv = 1 / b.lead();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            QQ f = r[i + b.degree()] * inv;
            if (sgn(f) == 0)
                continue;
            q[i] = f;
            for (int j = 0; j <= b.degree(); ++j)
                r[i + j] -= f * b.c_[j];
        }
        r.resize(b.c_.size() - 1);
        return {QtPoly(std::move(q)), QtPoly(std::move(r))};
    }

    /// Lexicographic total order (degree first), used only for deterministic tie breaks.
    friend int compare(const QtPoly &a, const QtPoly &b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree() ? -1 : 1;
        for (int i = a.degree(); i >= 0; --i) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0)
                return c < 0 ? -1 : 1;
        }
        return 0;
    }

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0)
            c_.pop_back();
    }
    std::vector<QQ> c_;
};

int compare(const QtPoly &a, const QtPoly &b);

namespace detail {

inline std::string rational_str(const QQ &q) { return q.get_str(); }

/// Renders a_d t^d + ... with explicit `*` and `^`, highest degree first.
template <class C, class Str>
std::string render_terms(const std::vector<C> &c, const char *var, Str &&coeff_str) {
    if (c.empty())
        return "0";
    std::string out;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (sgn(c[i]) == 0)
            continue;
        C a = c[i];
        bool neg = sgn(a) < 0;
        if (neg)
            a = -a;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        bool unit = (a == 1);
        if (i == 0) {
            out += coeff_str(a);
            continue;
        }
        if (!unit)
            out += coeff_str(a) + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace detail

inline std::string QtPoly::str() const { return detail::render_terms(c_, "t", detail::rational_str); }

template <class R> struct ring_traits;

/// The integers. Canonical associates are non-negative; remainders lie in [0, |b|).
template <> struct ring_traits<ZZ> {
    static constexpr const char *name = "ZZ";
    static ZZ zero() { return 0; }
    static ZZ one() { return 1; }
    static ZZ from_int(long v) { return v; }
    static bool is_zero(const ZZ &a) { return sgn(a) == 0; }
    static bool is_one(const ZZ &a) { return a == 1; }
    static bool is_unit(const ZZ &a) { return a == 1 || a == -1; }
    static ZZ unit_part(const ZZ &a) { return sgn(a) < 0 ? ZZ(-1) : ZZ(1); }
    static ZZ normal(const ZZ &a) { return abs(a); }
    static ZZ unit_inverse(const ZZ &u) { return u; }
    static bool divides(const ZZ &b, const ZZ &a) {
        if (sgn(b) == 0)
            return sgn(a) == 0;
        return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
    }
    static ZZ divexact(const ZZ &a, const ZZ &b) {
        ZZ q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static std::pair<ZZ, ZZ> divrem(const ZZ &a, const ZZ &b) {
        if (sgn(b) == 0)
            throw DomainError("integer division by zero");
        ZZ q, r, ab = abs(b);
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), ab.get_mpz_t());
        if (sgn(b) < 0)
            q = -q;
        return {q, r};
    }
    static ZZ gcd(const ZZ &a, const ZZ &b) {
        ZZ g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    /// g = s*a + t*b with g = gcd(a, b) >= 0.
    static std::tuple<ZZ, ZZ, ZZ> xgcd(const ZZ &a, const ZZ &b) {
        ZZ g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return {g, s, t};
    }
    static std::size_t size(const ZZ &a) { return mpz_sizeinbase(a.get_mpz_t(), 2); }
    static int compare(const ZZ &a, const ZZ &b) {
        int c = cmp(a, b);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    static std::string str(const ZZ &a) { return a.get_str(); }
    /// True when `str(a)` can be juxtaposed with `*` without parentheses.
    static bool is_atomic(const ZZ &) { return true; }
    static bool is_negative(const ZZ &a) { return sgn(a) < 0; }
};

/// The rationals, used as a field for the QQ[x] step of the submodule
/// tower. Every nonzero element is a unit; the canonical associate is 1.
template <> struct ring_traits<QQ> {
    static constexpr const char *name = "QQ";
    static QQ zero() { return 0; }
    static QQ one() { return 1; }
    static QQ from_int(long v) { return v; }
    static bool is_zero(const QQ &a) { return sgn(a) == 0; }
    static bool is_one(const QQ &a) { return a == 1; }
    static bool is_unit(const QQ &a) { return sgn(a) != 0; }
    static QQ unit_part(const QQ &a) { return sgn(a) == 0 ? QQ(1) : a; }
    static QQ normal(const QQ &a) { return sgn(a) == 0 ? QQ(0) : QQ(1); }
    static QQ unit_inverse(const QQ &u) { return QQ(1) / u; }
    static bool divides(const QQ &b, const QQ &a) { return sgn(b) != 0 || sgn(a) == 0; }
    static QQ divexact(const QQ &a, const QQ &b) { return a / b; }
    static std::pair<QQ, QQ> divrem(const QQ &a, const QQ &b) {
        if (sgn(b) == 0)
            throw DomainError("rational division by zero");
        return {a / b, QQ(0)};
    }
    static QQ gcd(const QQ &a, const QQ &b) { return (sgn(a) == 0 && sgn(b) == 0) ? QQ(0) : QQ(1); }
    static std::tuple<QQ, QQ, QQ> xgcd(const QQ &a, const QQ &b) {
        if (sgn(a) != 0)
            return {QQ(1), QQ(1) / a, QQ(0)};
        if (sgn(b) != 0)
            return {QQ(1), QQ(0), QQ(1) / b};
        return {QQ(0), QQ(0), QQ(0)};
    }
    static std::size_t size(const QQ &a) {
        return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
    }
    static int compare(const QQ &a, const QQ &b) {
        int c = cmp(a, b);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    static std::string str(const QQ &a) { return a.get_str(); }
    static bool is_atomic(const QQ &a) { return a.get_den() == 1; }
    static bool is_negative(const QQ &a) { return sgn(a) < 0; }
};

/// QQ[t]. Canonical associates are monic; units are the nonzero rationals.
template <> struct ring_traits<QtPoly> {
    static constexpr const char *name = "QQt";
    static QtPoly zero() { return {}; }
    static QtPoly one() { return QtPoly(1); }
    static QtPoly from_int(long v) { return QtPoly(v); }
    static bool is_zero(const QtPoly &a) { return a.is_zero(); }
    static bool is_one(const QtPoly &a) { return a == QtPoly(1); }
    static bool is_unit(const QtPoly &a) { return a.degree() == 0; }
    static QtPoly unit_part(const QtPoly &a) { return a.is_zero() ? QtPoly(1) : QtPoly(a.lead()); }
    static QtPoly normal(const QtPoly &a) {
        if (a.is_zero())
            return a;
        return a * QtPoly(QQ(1) / a.lead());
    }
    static QtPoly unit_inverse(const QtPoly &u) { return QtPoly(QQ(1) / u.lead()); }
    static bool divides(const QtPoly &b, const QtPoly &a) {
        if (b.is_zero())
            return a.is_zero();
        return QtPoly::divrem(a, b).second.is_zero();
    }
    static QtPoly divexact(const QtPoly &a, const QtPoly &b) { return QtPoly::divrem(a, b).first; }
    static std::pair<QtPoly, QtPoly> divrem(const QtPoly &a, const QtPoly &b) { return QtPoly::divrem(a, b); }
    static QtPoly gcd(QtPoly a, QtPoly b) {
        while (!b.is_zero()) {
            QtPoly r = QtPoly::divrem(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return normal(a);
    }
    static std::tuple<QtPoly, QtPoly, QtPoly> xgcd(const QtPoly &a, const QtPoly &b) {
        QtPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (!r1.is_zero()) {
            auto [q, r] = QtPoly::divrem(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            QtPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.is_zero())
            return {QtPoly(), QtPoly(), QtPoly()};
        QtPoly inv(QQ(1) / r0.lead());
        return {r0 * inv, s0 * inv, t0 * inv};
    }
    static std::size_t size(const QtPoly &a) {
        std::size_t s = 0;
        for (auto &x : a.coeffs())
            s += mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
        return static_cast<std::size_t>(a.degree() + 1) * 1'000'000 + s;
    }
    static int compare(const QtPoly &a, const QtPoly &b) { return oc::compare(a, b); }
    static std::string str(const QtPoly &a) { return a.str(); }
    static bool is_atomic(const QtPoly &a) {
        if (a.degree() <= 0)
            return a.is_zero() || a.lead().get_den() == 1;
        int nz = 0;
        for (auto &x : a.coeffs())
            nz += sgn(x) != 0;
        return nz == 1 && a.lead() == 1;
    }
    static bool is_negative(const QtPoly &a) { return !a.is_zero() && sgn(a.lead()) < 0; }
};

template <class R> inline bool is_zero(const R &a) { return ring_traits<R>::is_zero(a); }

} // namespace oc
