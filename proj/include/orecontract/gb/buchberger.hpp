#pragma once

// Strong Buchberger algorithm over a PID, parameterized by a policy that
// knows the element representation and the monomial order. Used both for
// submodules of R[x]^m and for left ideals of R[x,y][D].
//
// Policy interface:
//   Elem, Term, Coeff
//   bool is_zero(const Elem&)
//   Term head(const Elem&)                   leading term (nonzero elem)
//   Coeff head_coeff(const Elem&)
//   int cmp(const Term&, const Term&)
//   bool divides(const Term& a, const Term& b)      a | b
//   bool compatible(const Term&, const Term&)       same position
//   Term lcm(const Term&, const Term&)
//   Term quotient(const Term& b, const Term& a)     b / a
//   void submul(Elem& acc, const Coeff& c, const Term& m, const Elem& g)   acc -= c*m*g
//   Elem mul(const Elem& g, const Coeff& c, const Term& m)                  c*m*g
//   void scale(Elem&, const Coeff&)
//   Elem take_head(Elem&)           removes and returns the head term
//   void add(Elem& acc, const Elem& t)
//   std::size_t size(const Elem&)

#include <algorithm>
#include <cstddef>
#include <vector>

#include "../error.hpp"
#include "../pid.hpp"

namespace oc::gb {

template <class Policy> class Buchberger {
  public:
    using Elem = typename Policy::Elem;
    using Term = typename Policy::Term;
    using Coeff = typename Policy::Coeff;
    using T = ring_traits<Coeff>;

    struct Entry {
        Elem e;
        Term t;
        Coeff c;
    };

    Buchberger(const Policy &p, StepBudget &budget) : P_(p), budget_(budget) {}

    /// Reduced strong Groebner basis of the span of `gens`.
    std::vector<Elem> run(const std::vector<Elem> &gens) {
        G_.clear();
        pairs_.clear();
        done_.clear();
        for (const auto &g : gens) {
            Elem h = head_reduce(g);
            if (!P_.is_zero(h))
                insert(std::move(h));
        }
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < pairs_.size(); ++i)
                if (better(pairs_[i], pairs_[best]))
                    best = i;
            Pair pr = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<long>(best));
            if (!pr.g_pair && chain_skip(pr)) {
                mark_done(pr.i, pr.j);
                continue;
            }
            Elem h = pr.g_pair ? gpoly(pr) : spoly(pr);
            mark_done(pr.i, pr.j);
            h = head_reduce(h);
            if (!P_.is_zero(h))
                insert(full_reduce(P_, std::move(h), G_, budget_, true));
        }
        return finish();
    }

    /// Canonical normal form of f modulo a reduced strong basis `basis`.
    static Elem normal_form(const Policy &P, Elem f, const std::vector<Elem> &basis, StepBudget &budget) {
        std::vector<Entry> G;
        G.reserve(basis.size());
        for (const auto &b : basis)
            G.push_back({b, P.head(b), P.head_coeff(b)});
        return full_reduce(P, std::move(f), G, budget, false);
    }

  private:
    struct Pair {
        std::size_t i, j;
        bool g_pair;
        Term l;
        std::size_t sz;
    };

    bool better(const Pair &a, const Pair &b) const {
        int c = P_.cmp(a.l, b.l);
        if (c != 0)
            return c < 0;
        if (a.sz != b.sz)
            return a.sz < b.sz;
        if (a.g_pair != b.g_pair)
            return a.g_pair;
        if (a.j != b.j)
            return a.j < b.j;
        return a.i < b.i;
    }

    void mark_done(std::size_t i, std::size_t j) {
        if (i > j)
            std::swap(i, j);
        done_[j][i] = true;
    }
    bool is_done(std::size_t i, std::size_t j) const {
        if (i > j)
            std::swap(i, j);
        return done_[j][i];
    }

    bool has_pending(std::size_t i, std::size_t j) const {
        for (const auto &p : pairs_)
            if ((p.i == i && p.j == j) || (p.i == j && p.j == i))
                return true;
        return false;
    }

    // Chain criterion: some k whose head strongly divides the pair's lcm
    // head, with both (i,k) and (k,j) already processed.
    bool chain_skip(const Pair &pr) const {
        const Entry &a = G_[pr.i], &b = G_[pr.j];
        Coeff l = lcm_coeff(a.c, b.c);
        for (std::size_t k = 0; k < G_.size(); ++k) {
            if (k == pr.i || k == pr.j)
                continue;
            const Entry &g = G_[k];
            if (!P_.compatible(g.t, pr.l) || !P_.divides(g.t, pr.l) || !T::divides(g.c, l))
                continue;
            if (is_done(pr.i, k) && is_done(k, pr.j) && !has_pending(pr.i, k) && !has_pending(k, pr.j))
                return true;
        }
        return false;
    }

    static Coeff lcm_coeff(const Coeff &a, const Coeff &b) {
        Coeff g = T::gcd(a, b);
        return T::normal(T::divexact(a, g) * b);
    }

    Elem spoly(const Pair &pr) {
        const Entry &a = G_[pr.i], &b = G_[pr.j];
        Coeff l = lcm_coeff(a.c, b.c);
        Elem h = P_.mul(a.e, T::divexact(l, a.c), P_.quotient(pr.l, a.t));
        P_.submul(h, T::divexact(l, b.c), P_.quotient(pr.l, b.t), b.e);
        budget_.tick();
        return h;
    }

    Elem gpoly(const Pair &pr) {
        const Entry &a = G_[pr.i], &b = G_[pr.j];
        auto [g, s, t] = T::xgcd(a.c, b.c);
        Elem h = P_.mul(a.e, s, P_.quotient(pr.l, a.t));
        P_.submul(h, -t, P_.quotient(pr.l, b.t), b.e);
        budget_.tick();
        return h;
    }

    // Strong head reduction only.
    Elem head_reduce(Elem f) {
        while (!P_.is_zero(f)) {
            Term t = P_.head(f);
            Coeff c = P_.head_coeff(f);
            const Entry *best = nullptr;
            for (const auto &g : G_) {
                if (!P_.compatible(g.t, t) || !P_.divides(g.t, t) || !T::divides(g.c, c))
                    continue;
                if (!best || T::size(g.c) < T::size(best->c))
                    best = &g;
            }
            if (!best)
                break;
            P_.submul(f, T::divexact(c, best->c), P_.quotient(t, best->t), best->e);
            budget_.tick();
        }
        return f;
    }

    // Full reduction with canonical remainders on every term. With
    // keep_head the head term is left alone and only the tail is reduced.
    static Elem full_reduce(const Policy &P, Elem f, const std::vector<Entry> &G, StepBudget &budget,
                            bool keep_head) {
        Elem rem{};
        bool rem_init = false;
        if (keep_head && !P.is_zero(f)) {
            rem = P.take_head(f);
            rem_init = true;
        }
        while (!P.is_zero(f)) {
            Term t = P.head(f);
            Coeff c = P.head_coeff(f);
            const Entry *best = nullptr;
            for (std::size_t k = 0; k < G.size(); ++k) {
                const Entry &g = G[k];
                if (!P.compatible(g.t, t) || !P.divides(g.t, t))
                    continue;
                if (!best || T::size(g.c) < T::size(best->c) ||
                    (T::size(g.c) == T::size(best->c) && T::compare(g.c, best->c) < 0))
                    best = &g;
            }
            if (best) {
                auto [q, r] = T::divrem(c, best->c);
                if (!T::is_zero(q)) {
                    P.submul(f, q, P.quotient(t, best->t), best->e);
                    budget.tick();
                    if (T::is_zero(r))
                        continue;
                }
            }
            Elem h = P.take_head(f);
            if (!rem_init) {
                rem = std::move(h);
                rem_init = true;
            } else {
                P.add(rem, h);
            }
        }
        if (!rem_init)
            return f;
        // f may still carry trace components
        P.add(rem, f);
        return rem;
    }

    void insert(Elem h) {
        Term t = P_.head(h);
        Coeff c = P_.head_coeff(h);
        Coeff u = T::unit_part(c);
        if (!T::is_one(u)) {
            P_.scale(h, T::unit_inverse(u));
            c = P_.head_coeff(h);
        }
        std::size_t n = G_.size();
        G_.push_back({std::move(h), t, c});
        done_.emplace_back(n + 1, false);
        for (std::size_t i = 0; i < n; ++i) {
            const Entry &g = G_[i];
            if (!P_.compatible(g.t, t))
                continue;
            Term l = P_.lcm(g.t, t);
            std::size_t sz = P_.size(g.e) + P_.size(G_[n].e);
            pairs_.push_back({i, n, false, l, sz});
            if (!T::divides(g.c, c) && !T::divides(c, g.c))
                pairs_.push_back({i, n, true, l, sz});
        }
    }

    std::vector<Elem> finish() {
        // drop elements whose head is strongly divisible by another one
        std::vector<bool> keep(G_.size(), true);
        for (std::size_t i = 0; i < G_.size(); ++i) {
            for (std::size_t j = 0; j < G_.size(); ++j) {
                if (i == j || !keep[j])
                    continue;
                if (!P_.compatible(G_[j].t, G_[i].t) || !P_.divides(G_[j].t, G_[i].t) ||
                    !T::divides(G_[j].c, G_[i].c))
                    continue;
                // equal heads: keep the earlier one
                bool same = P_.cmp(G_[j].t, G_[i].t) == 0 && T::divides(G_[i].c, G_[j].c);
                if (same && j > i)
                    continue;
                keep[i] = false;
                break;
            }
        }
        std::vector<Entry> H;
        for (std::size_t i = 0; i < G_.size(); ++i)
            if (keep[i])
                H.push_back(std::move(G_[i]));
        for (std::size_t i = 0; i < H.size(); ++i) {
            Elem e = full_reduce(P_, H[i].e, H, budget_, true);
            H[i].e = std::move(e);
        }
        std::sort(H.begin(), H.end(), [this](const Entry &a, const Entry &b) {
            int c = P_.cmp(a.t, b.t);
            if (c != 0)
                return c < 0;
            return T::compare(a.c, b.c) < 0;
        });
        std::vector<Elem> out;
        out.reserve(H.size());
        for (auto &h : H)
            out.push_back(std::move(h.e));
        G_.clear();
        return out;
    }

    const Policy &P_;
    StepBudget &budget_;
    std::vector<Entry> G_;
    std::vector<Pair> pairs_;
    std::vector<std::vector<bool>> done_;
};

} // namespace oc::gb
