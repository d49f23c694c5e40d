#pragma once

// Submodules of the free module R[x]^m: strong Groebner bases, normal forms,
// syzygies (kernel), module quotients and ideal comparison.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "../poly.hpp"
#include "buchberger.hpp"

namespace oc {

/// Element of R[x]^m; component i is the i-th coordinate.
template <class R> using ModuleElement = std::vector<Poly<R>>;

/// POT: position first (higher position is larger), then degree.
/// TOP: degree first, then position.
enum class ModuleOrder { POT, TOP };

namespace gb {

struct ModuleTerm {
    int pos;
    int deg;
};

/// Policy for Buchberger over R[x]^m. Only the first `main` components take
/// part in the order; the rest ride along (cofactor traces).
template <class R> struct ModulePolicy {
    using Elem = ModuleElement<R>;
    using Term = ModuleTerm;
    using Coeff = R;

    std::size_t main;
    ModuleOrder order;

    bool is_zero(const Elem &e) const {
        for (std::size_t i = 0; i < main; ++i)
            if (!e[i].is_zero())
                return false;
        return true;
    }
    Term head(const Elem &e) const {
        if (order == ModuleOrder::POT) {
            for (std::size_t i = main; i-- > 0;)
                if (!e[i].is_zero())
                    return {static_cast<int>(i), e[i].degree()};
            throw DomainError("head of the zero module element");
        }
        Term best{-1, -1};
        for (std::size_t i = 0; i < main; ++i)
            if (!e[i].is_zero() && e[i].degree() >= best.deg)
                best = {static_cast<int>(i), e[i].degree()};
        if (best.pos < 0)
            throw DomainError("head of the zero module element");
        return best;
    }
    R head_coeff(const Elem &e) const { return e[static_cast<std::size_t>(head(e).pos)].lc(); }
    int cmp(const Term &a, const Term &b) const {
        if (order == ModuleOrder::POT) {
            if (a.pos != b.pos)
                return a.pos < b.pos ? -1 : 1;
            return a.deg < b.deg ? -1 : (a.deg > b.deg ? 1 : 0);
        }
        if (a.deg != b.deg)
            return a.deg < b.deg ? -1 : 1;
        return a.pos < b.pos ? -1 : (a.pos > b.pos ? 1 : 0);
    }
    bool divides(const Term &a, const Term &b) const { return a.pos == b.pos && a.deg <= b.deg; }
    bool compatible(const Term &a, const Term &b) const { return a.pos == b.pos; }
    Term lcm(const Term &a, const Term &b) const { return {a.pos, std::max(a.deg, b.deg)}; }
    Term quotient(const Term &b, const Term &a) const { return {-1, b.deg - a.deg}; }
    void submul(Elem &acc, const R &c, const Term &m, const Elem &g) const {
        for (std::size_t i = 0; i < g.size(); ++i)
            acc[i].submul(c, m.deg, g[i]);
    }
    Elem mul(const Elem &g, const R &c, const Term &m) const {
        Elem r(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            if (!g[i].is_zero())
                r[i] = g[i].shifted_up(m.deg) * c;
        return r;
    }
    void scale(Elem &e, const R &c) const {
        for (auto &p : e)
            p *= c;
    }
    Elem take_head(Elem &e) const {
        Term t = head(e);
        Elem h(e.size());
        auto i = static_cast<std::size_t>(t.pos);
        h[i] = Poly<R>::monomial(e[i].lc(), t.deg);
        e[i] -= h[i];
        return h;
    }
    void add(Elem &acc, const Elem &t) const {
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!t[i].is_zero())
                acc[i] += t[i];
    }
    std::size_t size(const Elem &e) const {
        std::size_t s = 0;
        for (const auto &p : e)
            for (const auto &c : p.coeffs())
                s += ring_traits<R>::size(c) / 64 + 1;
        return s;
    }
};

} // namespace gb

/// Reduced strong Groebner basis of a submodule of R[x]^rank.
template <class R> struct GroebnerBasis {
    std::size_t rank = 1;
    ModuleOrder order = ModuleOrder::POT;
    std::vector<ModuleElement<R>> gens;
    /// trace[j][i]: cofactor of input i in gens[j] (empty unless requested).
    std::vector<std::vector<Poly<R>>> trace;
    std::size_t inputs = 0;
};

template <class R>
GroebnerBasis<R> groebner(const std::vector<ModuleElement<R>> &input, std::size_t rank,
                          ModuleOrder order = ModuleOrder::POT, bool with_trace = false,
                          StepBudget &budget = unlimited_budget()) {
    gb::ModulePolicy<R> pol{rank, order};
    std::vector<ModuleElement<R>> gens;
    gens.reserve(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i].size() != rank)
            throw DomainError("groebner: element of rank " + std::to_string(input[i].size()) +
                              " in a module of rank " + std::to_string(rank));
        ModuleElement<R> e = input[i];
        if (with_trace) {
            e.resize(rank + input.size());
            e[rank + i] = Poly<R>(ring_traits<R>::one());
        }
        gens.push_back(std::move(e));
    }
    gb::Buchberger<gb::ModulePolicy<R>> engine(pol, budget);
    auto out = engine.run(gens);
    GroebnerBasis<R> G;
    G.rank = rank;
    G.order = order;
    G.inputs = input.size();
    for (auto &e : out) {
        if (with_trace) {
            G.trace.emplace_back(e.begin() + static_cast<long>(rank), e.end());
            e.resize(rank);
        }
        G.gens.push_back(std::move(e));
    }
    return G;
}

/// Reduced strong Groebner basis of an ideal of R[x].
template <class R>
GroebnerBasis<R> groebner_ideal(const std::vector<Poly<R>> &gens, bool with_trace = false,
                                StepBudget &budget = unlimited_budget()) {
    std::vector<ModuleElement<R>> v;
    for (const auto &g : gens)
        v.push_back({g});
    return groebner(v, 1, ModuleOrder::POT, with_trace, budget);
}

template <class R> std::vector<Poly<R>> ideal_generators(const GroebnerBasis<R> &G) {
    std::vector<Poly<R>> out;
    for (const auto &e : G.gens)
        out.push_back(e[0]);
    return out;
}

/// Canonical normal form of f modulo G.
template <class R>
ModuleElement<R> normal_form(const ModuleElement<R> &f, const GroebnerBasis<R> &G,
                             StepBudget &budget = unlimited_budget()) {
    gb::ModulePolicy<R> pol{G.rank, G.order};
    return gb::Buchberger<gb::ModulePolicy<R>>::normal_form(pol, f, G.gens, budget);
}

template <class R> bool is_zero_element(const ModuleElement<R> &e) {
    for (const auto &p : e)
        if (!p.is_zero())
            return false;
    return true;
}

template <class R>
bool member(const ModuleElement<R> &f, const GroebnerBasis<R> &G, StepBudget &budget = unlimited_budget()) {
    return is_zero_element(normal_form(f, G, budget));
}

/// Cofactors u with f = sum_i u_i * G.gens[i], or empty when f is not a member.
template <class R>
std::vector<Poly<R>> member_cofactors(const ModuleElement<R> &f, const GroebnerBasis<R> &G,
                                      StepBudget &budget = unlimited_budget()) {
    const std::size_t n = G.gens.size();
    gb::ModulePolicy<R> pol{G.rank, G.order};
    std::vector<ModuleElement<R>> basis;
    for (std::size_t i = 0; i < n; ++i) {
        ModuleElement<R> e = G.gens[i];
        e.resize(G.rank + n);
        e[G.rank + i] = Poly<R>(ring_traits<R>::one());
        basis.push_back(std::move(e));
    }
    ModuleElement<R> g = f;
    g.resize(G.rank + n);
    auto r = gb::Buchberger<gb::ModulePolicy<R>>::normal_form(pol, g, basis, budget);
    for (std::size_t i = 0; i < G.rank; ++i)
        if (!r[i].is_zero())
            return {};
    std::vector<Poly<R>> u(n);
    for (std::size_t i = 0; i < n; ++i)
        u[i] = -r[G.rank + i];
    return u;
}

/// True iff the two bases span the same module (mutual membership).
template <class R>
bool ideal_equal(const GroebnerBasis<R> &I, const GroebnerBasis<R> &J, StepBudget &budget = unlimited_budget()) {
    if (I.rank != J.rank || I.order != J.order)
        throw DomainError("ideal_equal: bases use different ranks or orders");
    for (const auto &g : I.gens)
        if (!member(g, J, budget))
            return false;
    for (const auto &g : J.gens)
        if (!member(g, I, budget))
            return false;
    return true;
}

/// Generators z of {z in R[x]^m : z*A = 0} for an m x n matrix A (rows).
template <class R>
std::vector<ModuleElement<R>> kernel(const std::vector<std::vector<Poly<R>>> &A,
                                     StepBudget &budget = unlimited_budget()) {
    const std::size_t m = A.size();
    if (m == 0)
        return {};
    const std::size_t n = A[0].size();
    // identity block at positions 0..m-1, A block above it (eliminated first)
    std::vector<ModuleElement<R>> rows;
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n)
            throw DomainError("kernel: ragged matrix");
        ModuleElement<R> e(m + n);
        e[i] = Poly<R>(ring_traits<R>::one());
        for (std::size_t j = 0; j < n; ++j)
            e[m + j] = A[i][j];
        rows.push_back(std::move(e));
    }
    auto G = groebner(rows, m + n, ModuleOrder::POT, false, budget);
    std::vector<ModuleElement<R>> out;
    for (auto &g : G.gens) {
        bool zero_tail = true;
        for (std::size_t j = 0; j < n; ++j)
            if (!g[m + j].is_zero()) {
                zero_tail = false;
                break;
            }
        if (!zero_tail)
            continue;
        g.resize(m);
        out.push_back(std::move(g));
    }
    return out;
}

/// Reduced basis of (N : c) = { v : c*v in N } for N spanned by `gens`.
/// `inside` may list elements already known to lie in (N : c); the lower
/// copy is then only needed modulo c*inside, which keeps entries small.
template <class R>
GroebnerBasis<R> module_quotient(const std::vector<ModuleElement<R>> &gens, const Poly<R> &c, std::size_t rank,
                                 StepBudget &budget = unlimited_budget(),
                                 const std::vector<ModuleElement<R>> &inside = {}) {
    if (c.is_zero())
        throw DomainError("module_quotient: zero divisor");
    // second copy at positions 0..m-1, eliminated copy at m..2m-1
    std::vector<ModuleElement<R>> rows;
    for (const auto &g : gens) {
        ModuleElement<R> e(2 * rank);
        for (std::size_t i = 0; i < rank; ++i) {
            e[i] = g[i];
            e[rank + i] = g[i];
        }
        rows.push_back(std::move(e));
    }
    for (std::size_t p = 0; p < rank; ++p) {
        ModuleElement<R> e(2 * rank);
        e[rank + p] = c;
        rows.push_back(std::move(e));
    }
    for (const auto &g : inside) {
        ModuleElement<R> e(2 * rank);
        for (std::size_t i = 0; i < rank && i < g.size(); ++i)
            e[i] = g[i] * c;
        rows.push_back(std::move(e));
    }
    auto G = groebner(rows, 2 * rank, ModuleOrder::POT, false, budget);
    std::vector<ModuleElement<R>> out = inside;
    for (auto &v : out)
        v.resize(rank);
    for (auto &g : G.gens) {
        bool upper_zero = true;
        for (std::size_t i = rank; i < 2 * rank; ++i)
            if (!g[i].is_zero()) {
                upper_zero = false;
                break;
            }
        if (!upper_zero)
            continue;
        g.resize(rank);
        for (auto &p : g)
            p = divexact(p, c);
        out.push_back(std::move(g));
    }
    return groebner(out, rank, ModuleOrder::POT, false, budget);
}

/// Element of minimal degree in a reduced ideal basis, with its trace row.
/// The reduced basis has exactly one such element; ties (which do not occur
/// for reduced bases) go to the smaller head coefficient.
template <class R> struct MinimalElement {
    Poly<R> f;
    std::vector<Poly<R>> trace;
    std::size_t index;
};

template <class R> MinimalElement<R> minimal_degree_element(const GroebnerBasis<R> &G) {
    using T = ring_traits<R>;
    if (G.rank != 1)
        throw DomainError("minimal_degree_element: not an ideal basis");
    std::size_t best = G.gens.size();
    for (std::size_t i = 0; i < G.gens.size(); ++i) {
        const auto &p = G.gens[i][0];
        if (p.is_zero())
            continue;
        if (best == G.gens.size())
            best = i;
        else {
            const auto &b = G.gens[best][0];
            if (p.degree() < b.degree() ||
                (p.degree() == b.degree() && T::compare(T::normal(content(p)), T::normal(content(b))) < 0))
                best = i;
        }
    }
    if (best == G.gens.size())
        throw DomainError("minimal_degree_element: zero ideal");
    MinimalElement<R> m{G.gens[best][0], {}, best};
    if (!G.trace.empty())
        m.trace = G.trace[best];
    return m;
}

/// sigma^j applied to every generator of an ideal (shift case).
template <class R> std::vector<Poly<R>> shift_all(const std::vector<Poly<R>> &v, long j) {
    std::vector<Poly<R>> out;
    out.reserve(v.size());
    for (const auto &p : v)
        out.push_back(shift(p, j));
    return out;
}

} // namespace oc
