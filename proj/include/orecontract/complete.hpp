#pragma once

// Completely desingularized operators, the content ideal, removability of
// factors of the leading coefficient and R-primitivity.

#include <optional>
#include <string>
#include <vector>

#include "contraction.hpp"

namespace oc {

template <class R> struct CompleteDesingResult {
    OreOperator<R> F;
    int ell = 0;
    /// lc(F), the minimal-degree element of the reduced basis of I_ell
    Poly<R> f;
    R content;
    /// sigma^{r-ell}(f) = content * g, g primitive
    Poly<R> g;
    /// F = sum cofactors[i] * sources[i]
    std::vector<Poly<R>> cofactors;
    std::vector<OreOperator<R>> sources;
    ContractionBasis<R> contraction;
};

struct CompleteOptions {
    std::optional<int> bound{};
    std::optional<int> cap{};
    unsigned max_exponent = 64;
};

template <class R>
CompleteDesingResult<R> completely_desingularize(SubmoduleTower<R> &tower, const CompleteOptions &opt = {}) {
    using T = ring_traits<R>;
    const OreOperator<R> &L = tower.L();
    const OreAlgebra &alg = L.algebra();
    StepBudget &budget = tower.budget();
    CompleteDesingResult<R> out;
    out.contraction = contract(tower, ContractOptions{opt.bound, opt.cap, opt.max_exponent});
    int ell = L.order();
    for (const auto &B : out.contraction.generators)
        ell = std::max(ell, B.order());
    // an explicit bound k gives I_k = sigma^{k-l}(I_l) for the stable l <= k
    if (opt.bound)
        ell = std::max(ell, *opt.bound);
    if (!stabilization_check(tower, ell))
        throw DomainError("coefficient ideals are not stable at order " + std::to_string(ell) +
                          "; try a larger order bound");
    out.ell = ell;
    auto C = desingularized_operator(tower.ideal(ell), L);
    out.F = C.T;
    out.f = C.s;
    out.content = T::normal(C.a);
    out.g = alg.sigma(C.g, L.order() - ell);
    out.cofactors = C.cofactors;
    out.sources = C.sources;
    if (alg.sigma(out.f, L.order() - ell) != out.g * Poly<R>(C.a))
        throw DomainError("completely_desingularize: content factorization failed");
    if (!rrem(out.F, L, budget).is_zero())
        throw DomainError("completely_desingularize: result is not a left multiple of L");
    if (!T::divides(out.content, out.contraction.certificate.a))
        throw DomainError("completely_desingularize: content does not divide the certificate content");
    return out;
}

template <class R>
CompleteDesingResult<R> completely_desingularize(const OreOperator<R> &L, const CompleteOptions &opt = {},
                                                 StepBudget &budget = unlimited_budget()) {
    SubmoduleTower<R> tower(L, budget);
    return completely_desingularize(tower, opt);
}

/// Generator of the ideal of contents of desingularized operators.
template <class R>
R content_of_desing_ideal(const OreOperator<R> &L, const CompleteOptions &opt = {},
                          StepBudget &budget = unlimited_budget()) {
    return completely_desingularize(L, opt, budget).content;
}

template <class R> struct RPrimitivity {
    bool primitive = false;
    R gcd;
};

template <class R> RPrimitivity<R> is_r_primitive(const OreOperator<R> &L) {
    if (L.is_zero())
        throw DomainError("is_r_primitive: zero operator");
    R g = r_content(L);
    return {ring_traits<R>::is_unit(g), g};
}

enum class Removability { removable, non_removable, unknown };

inline std::string removability_str(Removability v) {
    switch (v) {
    case Removability::removable:
        return "removable";
    case Removability::non_removable:
        return "non-removable";
    default:
        return "unknown";
    }
}

template <class R> struct RemovingWitness {
    int k = 0;
    RatOreOperator<R> P;
    OreOperator<R> PL;
    /// sigma^{-k}(lc(PL)) = w / (v p) * lc(L)
    Poly<R> w, v;
};

template <class R> struct RemovabilityReport {
    Poly<R> p;
    Removability verdict = Removability::unknown;
    std::optional<RemovingWitness<R>> witness;
    /// content gcd of L, for the constant certificate
    std::optional<R> content_gcd;
    /// orders k searched: 0..searched
    int searched = -1;
};

/// Checks that PL (a left multiple of L of order r+k) is p-removing.
template <class R>
std::optional<RemovingWitness<R>> check_removing(const OreOperator<R> &L, const Poly<R> &p, const OreOperator<R> &PL,
                                                 StepBudget &budget = unlimited_budget()) {
    const int k = PL.order() - L.order();
    if (k < 0)
        return std::nullopt;
    auto d = right_divide(to_rational(PL), to_rational(L), budget);
    if (!d.remainder.is_zero())
        return std::nullopt;
    const OreAlgebra &alg = L.algebra();
    RatFunc<R> ratio = RatFunc<R>(alg.sigma(PL.lc(), -k), L.lc()) * RatFunc<R>(p);
    const Poly<R> &w = ratio.num();
    Poly<R> g = gcd(w, p);
    if (!(g.degree() == 0 && ring_traits<R>::is_unit(g.lc())))
        return std::nullopt;
    return RemovingWitness<R>{k, d.quotient, PL, w, ratio.den()};
}

template <class R> int default_removal_search(const OreOperator<R> &L) { return L.lc().degree() + L.order(); }

/// Removability of p from L. With use_certificate, a constant p and an
/// R-primitive L are answered without search.
template <class R>
RemovabilityReport<R> is_removable(const OreOperator<R> &L, const Poly<R> &p, std::optional<int> max_order = {},
                                   bool use_certificate = true, StepBudget &budget = unlimited_budget()) {
    using T = ring_traits<R>;
    if (L.order() < 1)
        throw DomainError("is_removable: operator of order 0");
    if (p.is_zero() || !divides(p, L.lc()))
        throw DomainError("is_removable: p does not divide the leading coefficient");
    const bool constant = p.degree() == 0;
    if (!constant && !T::is_unit(content(p)))
        throw DomainError("is_removable: p must be primitive or constant");
    RemovabilityReport<R> rep;
    rep.p = p;
    if (constant && T::is_unit(p.lc())) {
        rep.verdict = Removability::non_removable;
        return rep;
    }
    if (constant && use_certificate) {
        auto prim = is_r_primitive(L);
        if (prim.primitive) {
            rep.verdict = Removability::non_removable;
            rep.content_gcd = prim.gcd;
            return rep;
        }
    }
    const int kmax = max_order ? *max_order : default_removal_search(L);
    SubmoduleTower<R> tower(L, budget);
    for (int k = 0; k <= kmax; ++k) {
        const auto &I = tower.ideal(L.order() + k);
        rep.searched = k;
        std::vector<std::size_t> cand;
        if (constant) {
            for (std::size_t i = 0; i < I.gb.gens.size(); ++i)
                cand.push_back(i);
        } else {
            cand.push_back(minimal_degree_element(I.gb).index);
        }
        for (auto i : cand) {
            OreOperator<R> F(L.algebra());
            for (std::size_t j = 0; j < I.sources.size(); ++j)
                if (!I.gb.trace[i][j].is_zero())
                    F += I.gb.trace[i][j] * I.sources[j];
            if (F.order() != L.order() + k)
                continue;
            if (auto w = check_removing(L, p, F, budget)) {
                rep.verdict = Removability::removable;
                rep.witness = std::move(w);
                return rep;
            }
        }
    }
    return rep;
}

} // namespace oc
