#pragma once

// Contraction of an Ore operator L: the submodules M_k of cont(L) of order
// at most k, their coefficient ideals I_k, desingularized operators and a
// basis of cont(L).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gb/hermite.hpp"
#include "gb/module.hpp"
#include "gb/ore_gb.hpp"
#include "ore.hpp"

namespace oc {

/// Coefficient vector of P with k+1 components; component i is [D^i]P.
template <class R> ModuleElement<R> phi(const OreOperator<R> &P, int k) {
    if (P.order() > k)
        throw DomainError("phi: operator order exceeds " + std::to_string(k));
    ModuleElement<R> v(static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= P.order(); ++i)
        v[static_cast<std::size_t>(i)] = P.coeffs()[static_cast<std::size_t>(i)];
    return v;
}

template <class R> OreOperator<R> phi_inverse(const OreAlgebra &alg, const ModuleElement<R> &v) {
    return OreOperator<R>(alg, std::vector<Poly<R>>(v.begin(), v.end()));
}

/// Rows i = 0..k hold rrem(D^i, L) with each column scaled by the lcm of its
/// denominators, so z*A = 0 iff sum z_i D^i lies in M_k.
template <class R> struct LinearSystem {
    int k = 0;
    std::vector<std::vector<Poly<R>>> A;
    std::vector<Poly<R>> column_scale;
};

template <class R>
LinearSystem<R> build_system(const OreOperator<R> &L, int k, StepBudget &budget = unlimited_budget()) {
    const int r = L.order();
    if (r < 1)
        throw DomainError("build_system: operator of order 0 has a trivial contraction");
    if (k < r)
        throw DomainError("build_system: k must be at least the order of L");
    const OreAlgebra &alg = L.algebra();
    RatOreOperator<R> Lr = to_rational(L);
    std::vector<std::vector<RatFunc<R>>> rows;
    RatOreOperator<R> rem = RatOreOperator<R>::d_power(alg, 0);
    for (int i = 0; i <= k; ++i) {
        if (i > 0)
            rem = rrem(rem.d_times(), Lr, budget);
        std::vector<RatFunc<R>> row(static_cast<std::size_t>(r));
        for (int j = 0; j <= rem.order(); ++j)
            row[static_cast<std::size_t>(j)] = rem.coeffs()[static_cast<std::size_t>(j)];
        rows.push_back(std::move(row));
    }
    LinearSystem<R> S;
    S.k = k;
    S.column_scale.assign(static_cast<std::size_t>(r), Poly<R>(ring_traits<R>::one()));
    for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j)
        for (const auto &row : rows)
            if (!row[j].is_zero())
                S.column_scale[j] = lcm(S.column_scale[j], row[j].den());
    for (const auto &row : rows) {
        std::vector<Poly<R>> out(static_cast<std::size_t>(r));
        for (std::size_t j = 0; j < out.size(); ++j)
            if (!row[j].is_zero())
                out[j] = row[j].num() * divexact(S.column_scale[j], row[j].den());
        S.A.push_back(std::move(out));
    }
    return S;
}

/// z*A as a row vector.
template <class R> std::vector<Poly<R>> apply_system(const ModuleElement<R> &z, const LinearSystem<R> &S) {
    std::size_t n = S.A.empty() ? 0 : S.A[0].size();
    std::vector<Poly<R>> out(n);
    for (std::size_t i = 0; i < z.size() && i < S.A.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!z[i].is_zero() && !S.A[i][j].is_zero())
                out[j] += z[i] * S.A[i][j];
    return out;
}

enum class SubmoduleRoute { incremental, kernel };

/// R[x]-generators of M_k(L), as a reduced POT Groebner basis of their
/// coefficient vectors.
template <class R> struct SubmoduleBasis {
    int k = 0;
    OreOperator<R> L;
    std::vector<OreOperator<R>> operators;
    GroebnerBasis<R> gb;
    /// over ZZ: a QQ[x]-basis of the span, one primitive operator per order
    std::vector<OreOperator<ZZ>> rational;
};

template <class R> struct CoefficientIdeal {
    int k = 0;
    std::vector<Poly<R>> generators;
    /// operators of order k in M_k whose leading coefficients are the generators
    std::vector<OreOperator<R>> sources;
    /// reduced basis, traced over `generators`
    GroebnerBasis<R> gb;
};

template <class R> SubmoduleBasis<R> make_submodule(const OreOperator<R> &L, int k, GroebnerBasis<R> G) {
    SubmoduleBasis<R> M;
    M.k = k;
    M.L = L;
    for (const auto &v : G.gens)
        M.operators.push_back(phi_inverse(L.algebra(), v));
    M.gb = std::move(G);
    return M;
}

/// M_k through the syzygies of build_system.
template <class R>
SubmoduleBasis<R> submodule_basis_kernel(const OreOperator<R> &L, int k, StepBudget &budget = unlimited_budget()) {
    auto S = build_system(L, k, budget);
    auto Z = kernel(S.A, budget);
    return make_submodule(L, k, groebner(Z, static_cast<std::size_t>(k + 1), ModuleOrder::POT, false, budget));
}

namespace detail {

inline ModuleElement<QQ> to_rational_element(const ModuleElement<ZZ> &v) {
    ModuleElement<QQ> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::vector<QQ> c(v[i].coeffs().begin(), v[i].coeffs().end());
        out[i] = Poly<QQ>(std::move(c));
    }
    return out;
}

/// Integral multiple of v with coprime coefficients and positive head.
inline ModuleElement<ZZ> integral_primitive(const ModuleElement<QQ> &v) {
    ZZ den = 1;
    for (const auto &p : v)
        for (const auto &c : p.coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ModuleElement<ZZ> out(v.size());
    ZZ g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::vector<ZZ> c;
        for (const auto &x : v[i].coeffs()) {
            QQ y = x * den;
            c.push_back(y.get_num());
        }
        out[i] = Poly<ZZ>(std::move(c));
        if (!out[i].is_zero())
            g = ring_traits<ZZ>::gcd(g, content(out[i]));
    }
    if (g == 0)
        return out;
    std::size_t top = v.size();
    while (top > 0 && out[top - 1].is_zero())
        --top;
    if (sgn(out[top - 1].lc()) < 0)
        g = -g;
    for (auto &p : out)
        p.divexact_const(g);
    return out;
}

} // namespace detail

/// M_r = R[x] * (L divided by the gcd of its coefficients).
template <class R> SubmoduleBasis<R> submodule_base(const OreOperator<R> &L, StepBudget &budget) {
    OreOperator<R> P = primitive_normal(L);
    const auto rank = static_cast<std::size_t>(L.order() + 1);
    auto M = make_submodule(L, L.order(), groebner<R>({phi(P, L.order())}, rank, ModuleOrder::POT, false, budget));
    if constexpr (std::is_same_v<R, ZZ>)
        M.rational = {P};
    return M;
}

/// M_{k+1} = (M_k + R[x] D E) : c with E in M_k of order k and c = lc(D E).
template <class R> SubmoduleBasis<R> submodule_step(const SubmoduleBasis<R> &M, StepBudget &budget) {
    const int k = M.k;
    const auto rank = static_cast<std::size_t>(k + 2);
    const OreAlgebra &alg = M.L.algebra();
    (void)alg;
    if constexpr (std::is_same_v<R, ZZ>) {
        // Over ZZ the quotient by a polynomial is done over QQ[x] modulo c,
        // which leaves a quotient by an integer.
        const OreOperator<ZZ> *best = nullptr;
        ZZ best_c;
        for (const auto &B : M.operators) {
            if (B.order() != k)
                continue;
            ZZ cb = content(B.lc());
            if (!best || B.lc().degree() < best->lc().degree() ||
                (B.lc().degree() == best->lc().degree() && cmp(cb, best_c) < 0)) {
                best = &B;
                best_c = cb;
            }
        }
        if (!best)
            throw DomainError("submodule_step: M_k has no element of order k");
        OreOperator<ZZ> F = primitive_normal(*best).d_times();
        const auto m = static_cast<std::size_t>(k + 1);
        std::vector<ModuleElement<QQ>> qgens;
        for (const auto &H : M.rational)
            qgens.push_back(detail::to_rational_element(phi(H, k)));
        QPoly c = monic(detail::to_rational_element(ModuleElement<ZZ>{F.lc()})[0]);
        HermiteModC hm(qgens, c, m, budget);
        ModuleElement<QQ> w = detail::to_rational_element(phi(F, k + 1));
        QPoly top = w.back();
        w.pop_back();
        auto ann = hm.annihilator(w, budget);
        OreOperator<ZZ> H = F;
        if (ann.lambda.degree() < c.degree()) {
            ModuleElement<QQ> num(rank);
            for (std::size_t i = 0; i < m; ++i)
                num[i] = ann.lambda * w[i];
            num[m] = ann.lambda * top;
            for (std::size_t j = 0; j < qgens.size(); ++j)
                if (!ann.coef[j].is_zero())
                    for (std::size_t i = 0; i < qgens[j].size(); ++i)
                        num[i] -= ann.coef[j] * qgens[j][i];
            for (auto &x : num)
                x = divexact(x, c);
            H = phi_inverse(alg, detail::integral_primitive(num));
        }
        ZZ cH = content(H.lc());
        std::vector<ModuleElement<ZZ>> gens;
        for (auto v : M.gb.gens) {
            v.resize(rank);
            gens.push_back(std::move(v));
        }
        std::vector<ModuleElement<ZZ>> known = gens;
        gens.push_back(phi(H, k + 1));
        auto G = cH == 1 ? groebner(gens, rank, ModuleOrder::POT, false, budget)
                         : module_quotient(gens, Poly<ZZ>(cH), rank, budget, known);
        auto out = make_submodule(M.L, k + 1, std::move(G));
        out.rational = M.rational;
        out.rational.push_back(std::move(H));
        return out;
    } else {
        const OreOperator<R> *E = nullptr;
        for (const auto &B : M.operators) {
            if (B.order() != k)
                continue;
            if (!E || B.lc().degree() < E->lc().degree() ||
                (B.lc().degree() == E->lc().degree() &&
                 ring_traits<R>::size(B.lc().lc()) < ring_traits<R>::size(E->lc().lc())))
                E = &B;
        }
        if (!E)
            throw DomainError("submodule_step: M_k has no element of order k");
        OreOperator<R> F = E->d_times();
        std::vector<ModuleElement<R>> gens;
        for (const auto &B : M.operators)
            gens.push_back(phi(B, k + 1));
        gens.push_back(phi(F, k + 1));
        return make_submodule(M.L, k + 1, module_quotient(gens, F.lc(), rank, budget));
    }
}

template <class R>
SubmoduleBasis<R> submodule_basis(const OreOperator<R> &L, int k, SubmoduleRoute route = SubmoduleRoute::incremental,
                                  StepBudget &budget = unlimited_budget()) {
    if (L.order() < 1)
        throw DomainError("submodule_basis: operator of order 0 has a trivial contraction");
    if (k < L.order())
        throw DomainError("submodule_basis: k must be at least the order of L");
    if (route == SubmoduleRoute::kernel)
        return submodule_basis_kernel(L, k, budget);
    SubmoduleBasis<R> M = submodule_base(L, budget);
    while (M.k < k)
        M = submodule_step(M, budget);
    return M;
}

template <class R>
CoefficientIdeal<R> coefficient_ideal(const SubmoduleBasis<R> &M, StepBudget &budget = unlimited_budget()) {
    CoefficientIdeal<R> I;
    I.k = M.k;
    for (const auto &B : M.operators)
        if (B.order() == M.k) {
            I.generators.push_back(B.lc());
            I.sources.push_back(B);
        }
    I.gb = groebner_ideal(I.generators, true, budget);
    return I;
}

/// Caches M_k for successive k.
template <class R> class SubmoduleTower {
  public:
    SubmoduleTower(OreOperator<R> L, StepBudget &budget, SubmoduleRoute route = SubmoduleRoute::incremental)
        : L_(std::move(L)), budget_(budget), route_(route) {
        if (L_.order() < 1)
            throw DomainError("contraction of an operator of order 0 is trivial");
    }

    const OreOperator<R> &L() const { return L_; }
    StepBudget &budget() const { return budget_; }

    const SubmoduleBasis<R> &module(int k) {
        if (k < L_.order())
            throw DomainError("order bound below the order of L");
        auto it = M_.find(k);
        if (it != M_.end())
            return it->second;
        if (route_ == SubmoduleRoute::kernel)
            return M_.emplace(k, submodule_basis_kernel(L_, k, budget_)).first->second;
        int start = L_.order();
        for (const auto &[kk, m] : M_)
            if (kk < k)
                start = kk;
        if (M_.find(start) == M_.end())
            M_.emplace(start, submodule_base(L_, budget_));
        for (int j = start; j < k; ++j)
            M_.emplace(j + 1, submodule_step(M_.at(j), budget_));
        return M_.at(k);
    }

    const CoefficientIdeal<R> &ideal(int k) {
        auto it = I_.find(k);
        if (it != I_.end())
            return it->second;
        return I_.emplace(k, coefficient_ideal(module(k), budget_)).first->second;
    }

  private:
    OreOperator<R> L_;
    StepBudget &budget_;
    SubmoduleRoute route_;
    std::map<int, SubmoduleBasis<R>> M_;
    std::map<int, CoefficientIdeal<R>> I_;
};

/// sigma(I_k) == I_{k+1}
template <class R> bool stabilization_check(SubmoduleTower<R> &tower, int k) {
    const OreAlgebra &alg = tower.L().algebra();
    const auto &Ik = tower.ideal(k);
    std::vector<Poly<R>> shifted;
    for (const auto &g : ideal_generators(Ik.gb))
        shifted.push_back(alg.sigma(g, 1));
    auto S = groebner_ideal(shifted, false, tower.budget());
    const auto &Ik1 = tower.ideal(k + 1);
    GroebnerBasis<R> J = Ik1.gb;
    J.trace.clear();
    return ideal_equal(S, J, tower.budget());
}

template <class R> bool stabilization_check(const OreOperator<R> &L, int k, StepBudget &budget = unlimited_budget()) {
    SubmoduleTower<R> tower(L, budget);
    return stabilization_check(tower, k);
}

/// Default cap for the order bound: r + deg lc(L) + 4.
template <class R> int default_order_cap(const OreOperator<R> &L) { return L.order() + L.lc().degree() + 4; }

/// Smallest k >= r with stabilization at k and k+1, or the explicit bound.
template <class R> int select_bound(SubmoduleTower<R> &tower, std::optional<int> bound, std::optional<int> cap = {}) {
    const OreOperator<R> &L = tower.L();
    if (bound) {
        if (*bound < L.order())
            throw DomainError("order bound " + std::to_string(*bound) + " is below the order of L");
        return *bound;
    }
    int c = cap ? *cap : default_order_cap(L);
    for (int k = L.order(); k <= c; ++k)
        if (stabilization_check(tower, k) && stabilization_check(tower, k + 1))
            return k;
    throw ResourceError("coefficient ideals did not stabilize up to order " + std::to_string(c));
}

/// A desingularized operator T of order k with the witness identity
/// a1 * lc(L) = b1 * removed_factor * sigma^{r-k}(s).
template <class R> struct DesingCertificate {
    OreOperator<R> T;
    int k = 0;
    Poly<R> s;
    R a;
    Poly<R> g;
    Poly<R> removed_factor;
    R a1;
    R b1;
    /// T = sum cofactors[i] * sources[i]
    std::vector<Poly<R>> cofactors;
    std::vector<OreOperator<R>> sources;
    /// generator of the extension of I_k from the extended gcd over the fraction field
    Poly<R> extension_generator;
};

template <class R>
DesingCertificate<R> desingularized_operator(const CoefficientIdeal<R> &I, const OreOperator<R> &L) {
    using T = ring_traits<R>;
    if (I.generators.empty())
        throw DomainError("desingularized_operator: zero coefficient ideal");
    const OreAlgebra &alg = L.algebra();
    auto xg = extended_gcd_over_fraction_field(I.generators);
    // the minimal-degree element of the reduced basis generates the same
    // extension and has the smallest content among such elements
    auto m = minimal_degree_element(I.gb);
    if (m.f.degree() != xg.s.degree())
        throw DomainError("desingularized_operator: inconsistent extension generator");
    DesingCertificate<R> C;
    C.k = I.k;
    C.s = m.f;
    C.extension_generator = xg.primitive;
    C.cofactors = m.trace;
    C.sources = I.sources;
    OreOperator<R> Top(alg);
    for (std::size_t i = 0; i < I.sources.size(); ++i)
        if (!m.trace[i].is_zero())
            Top += m.trace[i] * I.sources[i];
    C.T = Top;
    if (C.T.order() != C.k || C.T.lc() != C.s)
        throw DomainError("desingularized_operator: cofactor combination failed");
    auto [a, g] = content_primitive(C.s);
    C.a = a;
    C.g = g;
    // witness for the removed factor
    const int r = L.order();
    Poly<R> gs = alg.sigma(g, r - C.k);
    Poly<R> h = divexact(L.lc(), gs);
    auto [hc, hp] = content_primitive(h);
    C.removed_factor = hp;
    C.a1 = a;
    C.b1 = hc;
    Poly<R> lhs = L.lc() * C.a1;
    Poly<R> rhs = C.removed_factor * alg.sigma(C.s, r - C.k) * C.b1;
    if (lhs != rhs)
        throw DomainError("desingularized_operator: witness identity failed");
    (void)T::one();
    return C;
}

template <class R>
DesingCertificate<R> desingularized_operator(const SubmoduleBasis<R> &M, StepBudget &budget = unlimited_budget()) {
    return desingularized_operator(coefficient_ideal(M, budget), M.L);
}

/// Basis of cont(L) with the certificate used to build it.
template <class R> struct ContractionBasis {
    std::vector<OreOperator<R>> generators;
    DesingCertificate<R> certificate;
    R a;
    int k = 0;
    /// a^exponent * F = sum cofactors[i] * module_generators[i]
    std::vector<SaturationCertificate<R>> saturation;
    std::vector<OreOperator<R>> module_generators;
};

namespace detail {

template <class R> std::size_t op_size(const OreOperator<R> &P) {
    std::size_t s = 0;
    for (const auto &c : P.coeffs())
        for (const auto &x : c.coeffs())
            s += ring_traits<R>::size(x);
    return s;
}

template <class R> void sort_by_order(std::vector<OreOperator<R>> &v) {
    std::stable_sort(v.begin(), v.end(), [](const OreOperator<R> &a, const OreOperator<R> &b) {
        if (a.order() != b.order())
            return a.order() < b.order();
        return op_size(a) < op_size(b);
    });
}

/// Greedy subset whose D-shifts span the same R[x]-module up to order k.
template <class R>
std::vector<OreOperator<R>> prune_by_span(std::vector<OreOperator<R>> ops, int k, StepBudget &budget) {
    sort_by_order(ops);
    std::vector<OreOperator<R>> kept;
    std::vector<ModuleElement<R>> span;
    const auto rank = static_cast<std::size_t>(k + 1);
    for (const auto &g : ops) {
        if (!span.empty()) {
            auto G = groebner(span, rank, ModuleOrder::POT, false, budget);
            if (member(phi(g, k), G, budget))
                continue;
        }
        kept.push_back(g);
        OreOperator<R> s = g;
        while (s.order() <= k) {
            span.push_back(phi(s, k));
            s = s.d_times();
        }
    }
    return kept;
}

/// Greedy subset of a POT basis of M_k by leading coefficients: g is kept when
/// lc(g) is not in the ideal of the shifted leading coefficients kept so far.
/// The kept shifts have the coefficient ideals I_j at every order, so they
/// span M_k.
template <class R>
std::vector<OreOperator<R>> prune_by_leading_ideal(std::vector<OreOperator<R>> ops, const OreAlgebra &alg,
                                                   StepBudget &budget) {
    sort_by_order(ops);
    std::vector<OreOperator<R>> kept;
    for (const auto &g : ops) {
        const int j = g.order();
        std::vector<Poly<R>> lcs;
        for (const auto &h : kept)
            lcs.push_back(alg.sigma(h.lc(), j - h.order()));
        if (!lcs.empty() && member(ModuleElement<R>{g.lc()}, groebner_ideal(lcs, false, budget), budget))
            continue;
        kept.push_back(g);
    }
    return kept;
}

/// Greedy subset generating the same left ideal.
template <class R> std::vector<OreOperator<R>> prune_by_ideal(std::vector<OreOperator<R>> ops, StepBudget &budget) {
    sort_by_order(ops);
    std::vector<OreOperator<R>> kept;
    for (const auto &g : ops) {
        if (!kept.empty() && member(g, left_groebner(kept, false, budget), budget))
            continue;
        kept.push_back(g);
    }
    return kept;
}

} // namespace detail

struct ContractOptions {
    std::optional<int> bound{};
    std::optional<int> cap{};
    unsigned max_exponent = 64;
};

template <class R> ContractionBasis<R> contract(SubmoduleTower<R> &tower, const ContractOptions &opt = {}) {
    using T = ring_traits<R>;
    StepBudget &budget = tower.budget();
    int k = select_bound(tower, opt.bound, opt.cap);
    const auto &M = tower.module(k);
    ContractionBasis<R> B;
    B.k = k;
    B.certificate = desingularized_operator(tower.ideal(k), tower.L());
    B.a = B.certificate.a;
    B.module_generators = M.operators;
    if (T::is_unit(B.a)) {
        B.generators = detail::prune_by_leading_ideal(M.operators, tower.L().algebra(), budget);
        for (const auto &F : B.generators) {
            std::vector<OreOperator<R>> cof(M.operators.size(), OreOperator<R>(tower.L().algebra()));
            for (std::size_t i = 0; i < M.operators.size(); ++i)
                if (M.operators[i] == F)
                    cof[i] = OreOperator<R>(F.algebra(), {Poly<R>(T::one())});
            B.saturation.push_back({F, 0, std::move(cof)});
        }
        return B;
    }
    auto sat = saturate_by_constant(M.operators, B.a, opt.max_exponent, budget);
    B.generators = detail::prune_by_ideal(sat.basis.gens, budget);
    for (const auto &F : B.generators)
        for (const auto &c : sat.certificates)
            if (c.F == F)
                B.saturation.push_back(c);
    return B;
}

template <class R>
ContractionBasis<R> contract(const OreOperator<R> &L, const ContractOptions &opt = {},
                             StepBudget &budget = unlimited_budget()) {
    SubmoduleTower<R> tower(L, budget);
    return contract(tower, opt);
}

} // namespace oc
