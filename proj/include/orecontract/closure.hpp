#pragma once

// P-recursive sequences over Z: product of two sequences, multiplication by
// n!, exact unrolling of terms, and the leading-coefficient-n check for
// n! a_n b_n.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "complete.hpp"

namespace oc {

/// Sequence annihilated by a forward shift operator sum_i e_i(n) D^i.
struct PRecurrence {
    OreOperator<ZZ> annihilator;
    std::vector<QQ> initial;
};

inline void check_recurrence(const PRecurrence &A) {
    if (A.annihilator.algebra().kind != OreKind::shift)
        throw UnsupportedShape("recurrences need the shift algebra");
    if (A.annihilator.order() < 1)
        throw UnsupportedShape("recurrence of order 0");
    if (!A.initial.empty() && A.initial.size() < static_cast<std::size_t>(A.annihilator.order()))
        throw DomainError("fewer initial values than the order of the recurrence");
}

/// Terms u_0..u_{count-1}. The leading coefficient must not vanish at the
/// integers where it is used.
inline std::vector<QQ> unroll(const PRecurrence &A, std::size_t count) {
    check_recurrence(A);
    const auto &L = A.annihilator;
    const auto r = static_cast<std::size_t>(L.order());
    if (A.initial.size() < r)
        throw DomainError("unroll: not enough initial values");
    std::vector<QQ> u(A.initial.begin(), A.initial.end());
    for (std::size_t m = 0; u.size() < count; ++m) {
        if (m + r < u.size())
            continue;
        ZZ nv(static_cast<long>(m));
        ZZ lead = L.lc().eval(nv);
        if (sgn(lead) == 0)
            throw DomainError("unroll: leading coefficient vanishes at n = " + std::to_string(m));
        QQ acc = 0;
        for (std::size_t i = 0; i < r; ++i)
            acc += QQ(L.coeffs()[i].eval(nv)) * u[m + i];
        QQ next = -acc / QQ(lead);
        next.canonicalize();
        u.push_back(next);
    }
    u.resize(count);
    return u;
}

/// True iff sum_i e_i(n) u_{n+i} = 0 for every n with all terms available.
inline bool annihilates(const OreOperator<ZZ> &L, const std::vector<QQ> &u) {
    const auto r = static_cast<std::size_t>(L.order());
    for (std::size_t m = 0; m + r < u.size(); ++m) {
        ZZ nv(static_cast<long>(m));
        QQ acc = 0;
        for (std::size_t i = 0; i <= r; ++i)
            acc += QQ(L.coeffs()[i].eval(nv)) * u[m + i];
        if (sgn(acc) != 0)
            return false;
    }
    return true;
}

namespace detail {

using RF = RatFunc<ZZ>;

/// u_{n+i+1} in the basis u_n..u_{n+p-1}, for i = 0..p-1.
inline std::vector<std::vector<RF>> companion(const OreOperator<ZZ> &A) {
    const auto p = static_cast<std::size_t>(A.order());
    std::vector<std::vector<RF>> S(p, std::vector<RF>(p));
    for (std::size_t i = 0; i + 1 < p; ++i)
        S[i][i + 1] = RF(Poly<ZZ>(1));
    for (std::size_t l = 0; l < p; ++l)
        S[p - 1][l] = RF(-A.coeffs()[l], A.lc());
    return S;
}

} // namespace detail

/// Annihilator of (a_n b_n): first linear dependence among the shifts of
/// a_n b_n written in the basis a_{n+i} b_{n+j}.
inline PRecurrence product_annihilator(const PRecurrence &A, const PRecurrence &B,
                                       StepBudget &budget = unlimited_budget()) {
    using detail::RF;
    check_recurrence(A);
    check_recurrence(B);
    if (A.annihilator.algebra() != B.annihilator.algebra())
        throw DomainError("product_annihilator: different algebras");
    const OreAlgebra alg = A.annihilator.algebra();
    const auto p = static_cast<std::size_t>(A.annihilator.order());
    const auto q = static_cast<std::size_t>(B.annihilator.order());
    const std::size_t dim = p * q;
    auto SA = detail::companion(A.annihilator);
    auto SB = detail::companion(B.annihilator);

    // echelon rows: vector, pivot, combination of the v_s
    struct Row {
        std::vector<RF> v;
        std::size_t pivot;
        std::vector<RF> comb;
    };
    std::vector<Row> ech;
    std::vector<RF> v(dim);
    v[0] = RF(Poly<ZZ>(1));
    for (std::size_t s = 0; s <= dim; ++s) {
        if (s > 0) {
            std::vector<RF> w(dim);
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < q; ++j) {
                    const RF &x = v[i * q + j];
                    if (x.is_zero())
                        continue;
                    RF sx = shift(x, 1);
                    for (std::size_t l = 0; l < p; ++l) {
                        if (SA[i][l].is_zero())
                            continue;
                        RF f = sx * SA[i][l];
                        for (std::size_t m = 0; m < q; ++m)
                            if (!SB[j][m].is_zero())
                                w[l * q + m] += f * SB[j][m];
                    }
                    budget.tick();
                }
            v = std::move(w);
        }
        // reduce v_s against the echelon rows
        std::vector<RF> red = v;
        std::vector<RF> comb(s + 1);
        comb[s] = RF(Poly<ZZ>(1));
        for (const auto &row : ech) {
            const RF &x = red[row.pivot];
            if (x.is_zero())
                continue;
            RF f = x / row.v[row.pivot];
            for (std::size_t t = 0; t < dim; ++t)
                if (!row.v[t].is_zero())
                    red[t] -= f * row.v[t];
            for (std::size_t t = 0; t < row.comb.size(); ++t)
                if (!row.comb[t].is_zero())
                    comb[t] -= f * row.comb[t];
            budget.tick();
        }
        std::size_t piv = dim;
        for (std::size_t t = 0; t < dim; ++t)
            if (!red[t].is_zero()) {
                piv = t;
                break;
            }
        if (piv == dim) {
            RatOreOperator<ZZ> rel(alg, comb);
            auto cleared = clear_denominators(rel);
            return {primitive_normal(cleared.op), {}};
        }
        ech.push_back({std::move(red), piv, std::move(comb)});
    }
    throw DomainError("product_annihilator: no dependence found");
}

/// Annihilator of n! u_n: coefficient i is multiplied by (n+i+1)...(n+k).
inline PRecurrence factorial_scale(const PRecurrence &A) {
    check_recurrence(A);
    const auto &L = A.annihilator;
    const int k = L.order();
    std::vector<Poly<ZZ>> c;
    for (int i = 0; i <= k; ++i) {
        Poly<ZZ> f = L.coeffs()[static_cast<std::size_t>(i)];
        for (int j = i + 1; j <= k; ++j)
            f *= Poly<ZZ>(std::vector<ZZ>{ZZ(j), ZZ(1)});
        c.push_back(std::move(f));
    }
    PRecurrence out{primitive_normal(OreOperator<ZZ>(L.algebra(), std::move(c))), {}};
    if (!A.initial.empty()) {
        ZZ fact = 1;
        for (std::size_t m = 0; m < A.initial.size(); ++m) {
            if (m > 0)
                fact *= static_cast<unsigned long>(m);
            out.initial.push_back(A.initial[m] * QQ(fact));
        }
    }
    return out;
}

/// Forward operator from a backward recurrence lhs(n) u_n = sum_i rhs[i-1](n) u_{n-i}.
inline OreOperator<ZZ> from_backward(const OreAlgebra &alg, const Poly<ZZ> &lhs, const std::vector<Poly<ZZ>> &rhs) {
    const long p = static_cast<long>(rhs.size());
    std::vector<Poly<ZZ>> c(static_cast<std::size_t>(p + 1));
    c[static_cast<std::size_t>(p)] = shift(lhs, p);
    for (long i = 1; i <= p; ++i)
        c[static_cast<std::size_t>(p - i)] = -shift(rhs[static_cast<std::size_t>(i - 1)], p);
    return OreOperator<ZZ>(alg, std::move(c));
}

/// Backward form of a forward operator: lhs(n) u_n = sum_i rhs[i-1](n) u_{n-i}.
struct BackwardRecurrence {
    Poly<ZZ> lhs;
    std::vector<Poly<ZZ>> rhs;
};

inline BackwardRecurrence to_backward(const OreOperator<ZZ> &L) {
    const long k = L.order();
    BackwardRecurrence b;
    b.lhs = shift(L.lc(), -k);
    for (long i = 1; i <= k; ++i)
        b.rhs.push_back(-shift(L.coeffs()[static_cast<std::size_t>(k - i)], -k));
    return b;
}

inline std::string backward_str(const BackwardRecurrence &b, const std::string &var, const std::string &seq = "c") {
    auto term = [&](long i) {
        if (i == 0)
            return seq + "[" + var + "]";
        return seq + "[" + var + "-" + std::to_string(i) + "]";
    };
    auto wrap = [&](const Poly<ZZ> &p) {
        std::string s = p.str(var);
        if (s.find(' ') != std::string::npos || s[0] == '-')
            return "(" + s + ")";
        return s;
    };
    std::string out = (b.lhs == Poly<ZZ>(1) ? "" : wrap(b.lhs) + "*") + term(0) + " =";
    bool first = true;
    for (std::size_t i = 0; i < b.rhs.size(); ++i) {
        if (b.rhs[i].is_zero())
            continue;
        out += first ? " " : " + ";
        first = false;
        out += (b.rhs[i] == Poly<ZZ>(1) ? "" : wrap(b.rhs[i]) + "*") + term(static_cast<long>(i + 1));
    }
    if (first)
        out += " 0";
    return out;
}

/// Whether n! a_n b_n again satisfies a recurrence n c_n = sum_i alpha_i(n) c_{n-i}.
struct KrattenthalerReport {
    OreOperator<ZZ> annihilator;
    CompleteDesingResult<ZZ> complete;
    bool verdict = false;
    BackwardRecurrence recurrence;
};

inline void check_leading_n(const PRecurrence &A, const char *name) {
    check_recurrence(A);
    const auto &L = A.annihilator;
    Poly<ZZ> want(std::vector<ZZ>{ZZ(L.order()), ZZ(1)});
    if (content_primitive(L.lc()).second != want)
        throw UnsupportedShape(std::string("recurrence ") + name +
                               " must have the form n*a[n] = ... (leading coefficient n)");
}

inline KrattenthalerReport check_krattenthaler(const PRecurrence &A, const PRecurrence &B,
                                               const CompleteOptions &opt = {},
                                               StepBudget &budget = unlimited_budget()) {
    check_leading_n(A, "A");
    check_leading_n(B, "B");
    KrattenthalerReport rep;
    rep.annihilator = factorial_scale(product_annihilator(A, B, budget)).annihilator;
    rep.complete = completely_desingularize(rep.annihilator, opt, budget);
    const auto &C = rep.complete;
    rep.verdict = C.f == Poly<ZZ>(std::vector<ZZ>{ZZ(C.ell), ZZ(1)});
    rep.recurrence = to_backward(C.F);
    return rep;
}

} // namespace oc
