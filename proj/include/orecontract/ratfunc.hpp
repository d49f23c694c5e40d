#pragma once

#include <string>
#include <utility>

#include "poly.hpp"

namespace oc {

/// Element of the fraction field Q_R(x), kept in lowest terms with a
/// denominator whose leading coefficient is a canonical associate.
template <class R> class RatFunc {
  public:
    using traits = ring_traits<R>;

    RatFunc() : den_(R(traits::one())) {}
    RatFunc(const Poly<R> &p) : num_(p), den_(R(traits::one())) {}
    RatFunc(const R &c) : num_(c), den_(R(traits::one())) {}
    RatFunc(Poly<R> num, Poly<R> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw DomainError("rational function with zero denominator");
        reduce();
    }

    const Poly<R> &num() const { return num_; }
    const Poly<R> &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0 && traits::is_one(den_.lc()); }

    friend bool operator==(const RatFunc &a, const RatFunc &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

    RatFunc operator-() const { return raw(-num_, den_); }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        if (a.den_ == b.den_)
            return RatFunc(a.num_ + b.num_, a.den_);
        Poly<R> g = gcd(a.den_, b.den_);
        Poly<R> ad = divexact(a.den_, g), bd = divexact(b.den_, g);
        return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
    }
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b) {
        if (a.is_zero() || b.is_zero())
            return {};
        // cross-cancel before multiplying
        Poly<R> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        return raw_normalized(divexact(a.num_, g1) * divexact(b.num_, g2),
                              divexact(a.den_, g2) * divexact(b.den_, g1));
    }
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b) {
        if (b.is_zero())
            throw DomainError("division by zero rational function");
        return a * RatFunc::raw(b.den_, b.num_, true);
    }
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }

    std::string str(const std::string &var = "x") const {
        if (is_polynomial())
            return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

  private:
    static RatFunc raw(Poly<R> n, Poly<R> d, bool fix_unit = false) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        if (fix_unit)
            r.fix_unit();
        return r;
    }
    static RatFunc raw_normalized(Poly<R> n, Poly<R> d) { return raw(std::move(n), std::move(d), true); }

    void fix_unit() {
        if (num_.is_zero()) {
            den_ = Poly<R>(traits::one());
            return;
        }
        R u = traits::unit_part(den_.lc());
        if (!traits::is_one(u)) {
            R inv = traits::unit_inverse(u);
            num_ *= inv;
            den_ *= inv;
        }
    }
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<R>(traits::one());
            return;
        }
        Poly<R> g = gcd(num_, den_);
        if (!(g.degree() == 0 && traits::is_one(g.lc()))) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        fix_unit();
    }

    Poly<R> num_;
    Poly<R> den_;
};

template <class R> RatFunc<R> shift(const RatFunc<R> &f, long j) {
    if (j == 0)
        return f;
    return RatFunc<R>(shift(f.num(), j), shift(f.den(), j));
}

template <class R> RatFunc<R> derivative(const RatFunc<R> &f) {
    if (f.is_polynomial())
        return RatFunc<R>(derivative(f.num()));
    return RatFunc<R>(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

} // namespace oc
