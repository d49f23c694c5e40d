#pragma once

// Left Groebner bases in R[x,y][D] with y central. The monomial order is
// lexicographic y > D > x, so y is eliminated first and, without y, the
// order is D-major. Used for left-ideal membership and for saturation by a
// constant c via the extra generator 1 - c*y.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "../ore.hpp"
#include "buchberger.hpp"

namespace oc {

/// Operator in R[x,y][D]: (y-degree, D-order) -> coefficient in R[x].
template <class R> using YOperator = std::map<std::pair<int, int>, Poly<R>>;

template <class R> YOperator<R> to_y_operator(const OreOperator<R> &P) {
    YOperator<R> out;
    for (int i = 0; i <= P.order(); ++i)
        if (!P.coeffs()[static_cast<std::size_t>(i)].is_zero())
            out[{0, i}] = P.coeffs()[static_cast<std::size_t>(i)];
    return out;
}

template <class R> bool is_y_free(const YOperator<R> &P) {
    for (const auto &[k, v] : P)
        if (k.first != 0)
            return false;
    return true;
}

template <class R> OreOperator<R> from_y_operator(const OreAlgebra &alg, const YOperator<R> &P) {
    std::vector<Poly<R>> v;
    for (const auto &[k, p] : P) {
        if (k.first != 0)
            throw DomainError("operator still involves the auxiliary variable");
        if (v.size() <= static_cast<std::size_t>(k.second))
            v.resize(static_cast<std::size_t>(k.second) + 1);
        v[static_cast<std::size_t>(k.second)] = p;
    }
    return OreOperator<R>(alg, std::move(v));
}

namespace gb {

struct OreTerm {
    int y;
    int d;
    int x;
};

/// Policy for left Buchberger in R[x,y][D]. Component 0 is ordered; further
/// components carry left cofactors.
template <class R> struct OrePolicy {
    using Elem = std::vector<YOperator<R>>;
    using Term = OreTerm;
    using Coeff = R;

    OreAlgebra alg;

    static void add_to(YOperator<R> &acc, std::pair<int, int> k, const Poly<R> &p) {
        if (p.is_zero())
            return;
        auto it = acc.find(k);
        if (it == acc.end()) {
            acc.emplace(k, p);
            return;
        }
        it->second += p;
        if (it->second.is_zero())
            acc.erase(it);
    }

    /// c * x^m.x * y^m.y * D^m.d * P
    YOperator<R> left_mul(const YOperator<R> &P, const R &c, const Term &m) const {
        YOperator<R> cur = P;
        for (int s = 0; s < m.d; ++s) {
            YOperator<R> nxt;
            for (const auto &[k, p] : cur) {
                add_to(nxt, {k.first, k.second + 1}, alg.sigma(p));
                if (alg.kind == OreKind::differential)
                    add_to(nxt, k, alg.delta(p));
            }
            cur = std::move(nxt);
        }
        YOperator<R> out;
        for (auto &[k, p] : cur) {
            Poly<R> q = p.shifted_up(m.x) * c;
            if (!q.is_zero())
                out.emplace(std::make_pair(k.first + m.y, k.second), std::move(q));
        }
        return out;
    }

    bool is_zero(const Elem &e) const { return e[0].empty(); }
    Term head(const Elem &e) const {
        if (e[0].empty())
            throw DomainError("head of the zero operator");
        const auto &[k, p] = *e[0].rbegin();
        return {k.first, k.second, p.degree()};
    }
    R head_coeff(const Elem &e) const { return e[0].rbegin()->second.lc(); }
    int cmp(const Term &a, const Term &b) const {
        if (a.y != b.y)
            return a.y < b.y ? -1 : 1;
        if (a.d != b.d)
            return a.d < b.d ? -1 : 1;
        return a.x < b.x ? -1 : (a.x > b.x ? 1 : 0);
    }
    bool divides(const Term &a, const Term &b) const { return a.y <= b.y && a.d <= b.d && a.x <= b.x; }
    bool compatible(const Term &, const Term &) const { return true; }
    Term lcm(const Term &a, const Term &b) const {
        return {std::max(a.y, b.y), std::max(a.d, b.d), std::max(a.x, b.x)};
    }
    Term quotient(const Term &b, const Term &a) const { return {b.y - a.y, b.d - a.d, b.x - a.x}; }
    Elem mul(const Elem &g, const R &c, const Term &m) const {
        Elem r(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            r[i] = left_mul(g[i], c, m);
        return r;
    }
    void submul(Elem &acc, const R &c, const Term &m, const Elem &g) const {
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i].empty())
                continue;
            for (auto &[k, p] : left_mul(g[i], c, m))
                add_to(acc[i], k, -p);
        }
    }
    void scale(Elem &e, const R &c) const {
        for (auto &comp : e)
            for (auto &[k, p] : comp)
                p *= c;
    }
    Elem take_head(Elem &e) const {
        Elem h(e.size());
        auto it = std::prev(e[0].end());
        Poly<R> mono = Poly<R>::monomial(it->second.lc(), it->second.degree());
        h[0][it->first] = mono;
        it->second -= mono;
        if (it->second.is_zero())
            e[0].erase(it);
        return h;
    }
    void add(Elem &acc, const Elem &t) const {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (const auto &[k, p] : t[i])
                add_to(acc[i], k, p);
    }
    std::size_t size(const Elem &e) const {
        std::size_t s = 0;
        for (const auto &[k, p] : e[0])
            s += p.size();
        return s;
    }
};

} // namespace gb

/// Basis of a left ideal of R[x][D]; when is_groebner it is a reduced
/// strong Groebner basis for the D-major order.
template <class R> struct OreIdealBasis {
    OreAlgebra algebra;
    std::vector<OreOperator<R>> gens;
    bool is_groebner = false;
    /// trace[j][i]: left cofactor of input i in gens[j] (empty unless requested)
    std::vector<std::vector<OreOperator<R>>> trace;
};

namespace detail {

template <class R>
std::vector<std::vector<YOperator<R>>> run_ore_gb(const OreAlgebra &alg, const std::vector<YOperator<R>> &input,
                                                  bool with_trace, StepBudget &budget) {
    gb::OrePolicy<R> pol{alg};
    std::vector<std::vector<YOperator<R>>> gens;
    for (std::size_t i = 0; i < input.size(); ++i) {
        std::vector<YOperator<R>> e(with_trace ? input.size() + 1 : 1);
        e[0] = input[i];
        if (with_trace)
            e[i + 1][{0, 0}] = Poly<R>(ring_traits<R>::one());
        gens.push_back(std::move(e));
    }
    gb::Buchberger<gb::OrePolicy<R>> engine(pol, budget);
    return engine.run(gens);
}

} // namespace detail

template <class R>
OreIdealBasis<R> left_groebner(const std::vector<OreOperator<R>> &gens, bool with_trace = false,
                               StepBudget &budget = unlimited_budget()) {
    if (gens.empty())
        return {};
    const OreAlgebra alg = gens[0].algebra();
    std::vector<YOperator<R>> in;
    for (const auto &g : gens) {
        if (g.algebra() != alg && !g.is_zero())
            throw DomainError("left_groebner: operators from different Ore algebras");
        in.push_back(to_y_operator(g));
    }
    auto out = detail::run_ore_gb<R>(alg, in, with_trace, budget);
    OreIdealBasis<R> B{alg, {}, true, {}};
    for (auto &e : out) {
        B.gens.push_back(from_y_operator(alg, e[0]));
        if (with_trace) {
            std::vector<OreOperator<R>> row;
            for (std::size_t i = 1; i < e.size(); ++i)
                row.push_back(from_y_operator(alg, e[i]));
            B.trace.push_back(std::move(row));
        }
    }
    return B;
}

/// Left normal form of F modulo a Groebner basis.
template <class R>
OreOperator<R> left_normal_form(const OreOperator<R> &F, const OreIdealBasis<R> &B,
                                StepBudget &budget = unlimited_budget()) {
    if (!B.is_groebner)
        throw DomainError("left_normal_form: basis is not a Groebner basis");
    gb::OrePolicy<R> pol{B.algebra};
    std::vector<std::vector<YOperator<R>>> basis;
    for (const auto &g : B.gens)
        basis.push_back({to_y_operator(g)});
    auto r = gb::Buchberger<gb::OrePolicy<R>>::normal_form(pol, {to_y_operator(F)}, basis, budget);
    return from_y_operator(B.algebra, r[0]);
}

template <class R>
bool member(const OreOperator<R> &F, const OreIdealBasis<R> &B, StepBudget &budget = unlimited_budget()) {
    return left_normal_form(F, B, budget).is_zero();
}

/// Left cofactors u with F = sum_j u_j * B.gens[j]; empty when F is not a member.
template <class R>
std::vector<OreOperator<R>> member_cofactors(const OreOperator<R> &F, const OreIdealBasis<R> &B,
                                             StepBudget &budget = unlimited_budget()) {
    if (!B.is_groebner)
        throw DomainError("member_cofactors: basis is not a Groebner basis");
    const std::size_t n = B.gens.size();
    gb::OrePolicy<R> pol{B.algebra};
    std::vector<std::vector<YOperator<R>>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<YOperator<R>> e(n + 1);
        e[0] = to_y_operator(B.gens[j]);
        e[j + 1][{0, 0}] = Poly<R>(ring_traits<R>::one());
        basis.push_back(std::move(e));
    }
    std::vector<YOperator<R>> f(n + 1);
    f[0] = to_y_operator(F);
    auto r = gb::Buchberger<gb::OrePolicy<R>>::normal_form(pol, f, basis, budget);
    if (!r[0].empty())
        return {};
    std::vector<OreOperator<R>> u;
    for (std::size_t j = 0; j < n; ++j)
        u.push_back(-from_y_operator(B.algebra, r[j + 1]));
    return u;
}

/// Cofactors of F over the original inputs of a traced basis.
template <class R>
std::vector<OreOperator<R>> input_cofactors(const OreOperator<R> &F, const OreIdealBasis<R> &B,
                                            StepBudget &budget = unlimited_budget()) {
    if (B.trace.empty())
        throw DomainError("input_cofactors: basis has no trace");
    auto u = member_cofactors(F, B, budget);
    if (u.empty())
        return {};
    std::size_t m = B.trace[0].size();
    std::vector<OreOperator<R>> w(m, OreOperator<R>(B.algebra));
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (!u[j].is_zero() && !B.trace[j][i].is_zero())
                w[i] += u[j] * B.trace[j][i];
    return w;
}

/// Membership certificate c^exponent * F = sum_i cofactors[i] * I[i].
template <class R> struct SaturationCertificate {
    OreOperator<R> F;
    unsigned exponent;
    std::vector<OreOperator<R>> cofactors;
};

template <class R> struct SaturationResult {
    OreIdealBasis<R> basis;
    R c;
    std::vector<SaturationCertificate<R>> certificates;
};

/// Basis of I : c^inf via the generator 1 - c*y and elimination of y,
/// with a certificate c^i F in <I> for every output F (i <= max_exponent).
template <class R>
SaturationResult<R> saturate_by_constant(const std::vector<OreOperator<R>> &I, const R &c,
                                         unsigned max_exponent = 64, StepBudget &budget = unlimited_budget()) {
    using T = ring_traits<R>;
    if (T::is_zero(c))
        throw DomainError("saturate_by_constant: c must be nonzero");
    if (I.empty())
        throw DomainError("saturate_by_constant: empty ideal");
    const OreAlgebra alg = I[0].algebra();
    SaturationResult<R> res{{alg, {}, true, {}}, T::normal(c), {}};
    if (T::is_unit(c)) {
        res.basis = left_groebner(I, false, budget);
    } else {
        std::vector<YOperator<R>> in;
        for (const auto &g : I)
            in.push_back(to_y_operator(g));
        YOperator<R> sat;
        sat[{0, 0}] = Poly<R>(T::one());
        sat[{1, 0}] = Poly<R>(-c);
        in.push_back(sat);
        auto out = detail::run_ore_gb<R>(alg, in, false, budget);
        for (auto &e : out)
            if (is_y_free(e[0]))
                res.basis.gens.push_back(from_y_operator(alg, e[0]));
    }
    // certificates against a traced basis of I
    OreIdealBasis<R> traced = left_groebner(I, true, budget);
    for (const auto &F : res.basis.gens) {
        OreOperator<R> G = F;
        bool found = false;
        for (unsigned i = 0; i <= max_exponent; ++i) {
            auto w = input_cofactors(G, traced, budget);
            if (!w.empty() || G.is_zero()) {
                res.certificates.push_back({F, i, std::move(w)});
                found = true;
                break;
            }
            G = scale(G, c);
        }
        if (!found)
            throw ResourceError("saturation certificate not found up to exponent " + std::to_string(max_exponent));
    }
    return res;
}

/// True iff the two ideals coincide (mutual membership).
template <class R>
bool left_ideal_equal(const std::vector<OreOperator<R>> &A, const std::vector<OreOperator<R>> &B,
                      StepBudget &budget = unlimited_budget()) {
    auto GA = left_groebner(A, false, budget);
    auto GB = left_groebner(B, false, budget);
    for (const auto &g : A)
        if (!member(g, GB, budget))
            return false;
    for (const auto &g : B)
        if (!member(g, GA, budget))
            return false;
    return true;
}

} // namespace oc
