#pragma once

// Hermite bases over QQ[x] modulo a monic polynomial c. For a submodule K of
// QQ[x]^m that contains c*QQ[x]^m, every entry can be kept reduced mod c, so
// sizes stay bounded. Used for the rational half of the submodule tower.

#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "module.hpp"

namespace oc {

using QPoly = Poly<QQ>;

inline QPoly monic(const QPoly &f) {
    if (f.is_zero())
        return f;
    return f * QPoly(QQ(1) / f.lc());
}

inline std::pair<QPoly, QPoly> divrem(const QPoly &f, const QPoly &g) {
    auto pd = pseudo_divide(f, g);
    return {pd.q, pd.h};
}

inline QPoly rem(const QPoly &f, const QPoly &g) {
    if (f.degree() < g.degree())
        return f;
    return pseudo_divide(f, g).h;
}

/// (g, s, t) with g = s*a + t*b monic (g = 0 when a = b = 0).
inline std::tuple<QPoly, QPoly, QPoly> xgcd(const QPoly &a, const QPoly &b) {
    QPoly r0 = a, r1 = b, s0(QQ(1)), s1, t0, t1(QQ(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {QPoly(), QPoly(), QPoly()};
    QPoly inv(QQ(1) / r0.lc());
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// Hermite basis of span(gens) + c*QQ[x]^m. Every pivot row also carries its
/// coefficients over `gens`, reduced mod c.
class HermiteModC {
  public:
    struct Row {
        ModuleElement<QQ> v;
        std::vector<QPoly> coef;
    };

    HermiteModC(const std::vector<ModuleElement<QQ>> &gens, QPoly c, std::size_t rank,
                StepBudget &budget = unlimited_budget())
        : c_(monic(c)), m_(rank), n_(gens.size()), piv_(rank) {
        if (c_.degree() < 0)
            throw DomainError("HermiteModC: zero modulus");
        std::vector<std::vector<Row>> bucket(rank);
        for (std::size_t i = 0; i < n_; ++i) {
            Row r{gens[i], std::vector<QPoly>(n_)};
            r.coef[i] = QPoly(QQ(1));
            push(bucket, std::move(r));
        }
        for (std::size_t p = rank; p-- > 0;) {
            std::optional<Row> pivot;
            for (auto &r : bucket[p]) {
                if (!pivot) {
                    pivot = std::move(r);
                    continue;
                }
                const QPoly &a = pivot->v[p], &b = r.v[p];
                auto [g, s, t] = xgcd(a, b);
                Row np = combine(*pivot, s, r, t);
                Row left = combine(*pivot, divexact(b, g), r, -divexact(a, g));
                pivot = std::move(np);
                push(bucket, std::move(left));
                budget.tick();
            }
            if (!pivot)
                continue;
            // merge with c*e_p
            const QPoly a = pivot->v[p];
            auto [g, s, t] = xgcd(a, c_);
            if (g.degree() == c_.degree())
                continue;
            Row left = scaled(*pivot, divexact(c_, g));
            Row np = scaled(*pivot, s);
            np.v[p] = g;
            push(bucket, std::move(left));
            piv_[p] = std::move(np);
            budget.tick();
        }
    }

    const QPoly &modulus() const { return c_; }

    /// Diagonal entry at position p (c when no pivot row).
    QPoly diagonal(std::size_t p) const { return piv_[p] ? piv_[p]->v[p] : c_; }

    struct Annihilator {
        QPoly lambda;
        /// lambda*w = sum coef[i]*gens[i]  (mod c)
        std::vector<QPoly> coef;
    };

    /// Monic generator of {lambda : lambda*w in span(gens) + c*QQ[x]^m}.
    Annihilator annihilator(const ModuleElement<QQ> &w, StepBudget &budget = unlimited_budget()) const {
        ModuleElement<QQ> v = reduce(w);
        QPoly lambda(QQ(1));
        std::vector<QPoly> coef(n_);
        for (std::size_t p = m_; p-- > 0;) {
            if (v[p].is_zero())
                continue;
            QPoly d = diagonal(p);
            auto [g, s, t] = xgcd(v[p], d);
            (void)s;
            (void)t;
            if (g.degree() < d.degree()) {
                QPoly mu = divexact(d, g);
                lambda = lambda * mu;
                for (auto &x : v)
                    x = rem(x * mu, c_);
                for (auto &x : coef)
                    x = rem(x * mu, c_);
            }
            if (v[p].is_zero() || !piv_[p])
                continue;
            QPoly q = divexact(v[p], d);
            const Row &P = *piv_[p];
            for (std::size_t i = 0; i <= p; ++i)
                if (!P.v[i].is_zero())
                    v[i] = rem(v[i] - q * P.v[i], c_);
            for (std::size_t i = 0; i < n_; ++i)
                if (!P.coef[i].is_zero())
                    coef[i] = rem(coef[i] + q * P.coef[i], c_);
            budget.tick();
        }
        for (const auto &x : v)
            if (!x.is_zero())
                throw DomainError("HermiteModC: reduction did not terminate at zero");
        return {monic(lambda), [&] {
                    QQ inv = QQ(1) / lambda.lc();
                    for (auto &x : coef)
                        x = x * QPoly(inv);
                    return coef;
                }()};
    }

  private:
    ModuleElement<QQ> reduce(const ModuleElement<QQ> &w) const {
        ModuleElement<QQ> v(m_);
        for (std::size_t i = 0; i < m_ && i < w.size(); ++i)
            v[i] = rem(w[i], c_);
        return v;
    }

    Row scaled(const Row &a, const QPoly &s) const {
        Row r{ModuleElement<QQ>(m_), std::vector<QPoly>(n_)};
        for (std::size_t i = 0; i < m_; ++i)
            if (!a.v[i].is_zero())
                r.v[i] = rem(a.v[i] * s, c_);
        for (std::size_t i = 0; i < n_; ++i)
            if (!a.coef[i].is_zero())
                r.coef[i] = rem(a.coef[i] * s, c_);
        return r;
    }

    Row combine(const Row &a, const QPoly &s, const Row &b, const QPoly &t) const {
        Row r{ModuleElement<QQ>(m_), std::vector<QPoly>(n_)};
        for (std::size_t i = 0; i < m_; ++i)
            r.v[i] = rem(a.v[i] * s + b.v[i] * t, c_);
        for (std::size_t i = 0; i < n_; ++i)
            r.coef[i] = rem(a.coef[i] * s + b.coef[i] * t, c_);
        return r;
    }

    void push(std::vector<std::vector<Row>> &bucket, Row r) const {
        for (auto &x : r.v)
            x = rem(x, c_);
        for (auto &x : r.coef)
            x = rem(x, c_);
        for (std::size_t p = m_; p-- > 0;)
            if (!r.v[p].is_zero()) {
                bucket[p].push_back(std::move(r));
                return;
            }
    }

    QPoly c_;
    std::size_t m_, n_;
    std::vector<std::optional<Row>> piv_;
};

} // namespace oc
