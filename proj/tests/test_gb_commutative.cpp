#include <gtest/gtest.h>

#include "support.hpp"

using namespace oc;
using namespace oc::testing;

namespace {

using ME = ModuleElement<ZZ>;

GroebnerBasis<ZZ> ideal(std::vector<std::string> gens) {
    std::vector<PZ> v;
    for (auto &s : gens)
        v.push_back(pz(s));
    return groebner_ideal(v, true);
}

std::vector<PZ> gens_of(const GroebnerBasis<ZZ> &G) { return ideal_generators(G); }

bool in_ideal(const PZ &f, const GroebnerBasis<ZZ> &G) { return member(ME{f}, G); }

void expect_trace(const GroebnerBasis<ZZ> &G, const std::vector<ME> &input) {
    ASSERT_EQ(G.trace.size(), G.gens.size());
    for (std::size_t j = 0; j < G.gens.size(); ++j) {
        ME sum(G.rank);
        for (std::size_t i = 0; i < input.size(); ++i)
            for (std::size_t p = 0; p < G.rank; ++p)
                sum[p] += G.trace[j][i] * input[i][p];
        EXPECT_EQ(sum, G.gens[j]);
    }
}

/// S- and G-polynomials of every pair of an ideal basis reduce to zero.
void expect_buchberger_criterion(const GroebnerBasis<ZZ> &G) {
    auto g = gens_of(G);
    PZ x = PZ::x();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            int D = std::max(g[i].degree(), g[j].degree());
            PZ mi = PZ::monomial(ZZ(1), D - g[i].degree()), mj = PZ::monomial(ZZ(1), D - g[j].degree());
            ZZ ci = g[i].lc(), cj = g[j].lc();
            ZZ l = lcm(ci, cj);
            PZ S = g[i] * mi * PZ(ZZ(l / ci)) - g[j] * mj * PZ(ZZ(l / cj));
            EXPECT_TRUE(is_zero_element(normal_form(ME{S}, G)));
            auto [d, u, v] = ring_traits<ZZ>::xgcd(ci, cj);
            (void)d;
            PZ Gp = g[i] * mi * PZ(u) + g[j] * mj * PZ(v);
            EXPECT_TRUE(is_zero_element(normal_form(ME{Gp}, G)));
        }
}

} // namespace

TEST(Groebner, Examples) {
    auto A = ideal({"2*n", "3*n"});
    EXPECT_EQ(gens_of(A), std::vector<PZ>{pz("n")});

    auto B = ideal({"2*n", "n*(n-26)"});
    EXPECT_EQ(gens_of(B), (std::vector<PZ>{pz("2*n"), pz("n^2")}));
    auto orig = groebner_ideal(std::vector<PZ>{pz("2*n"), pz("n*(n-26)")});
    for (auto &g : gens_of(B))
        EXPECT_TRUE(in_ideal(g, orig));
    EXPECT_TRUE(in_ideal(pz("2*n"), B));
    EXPECT_TRUE(in_ideal(pz("n*(n-26)"), B));

    auto C = ideal({"4*n", "n*(n-24)"});
    auto m = minimal_degree_element(C);
    EXPECT_EQ(m.f.degree(), 1);
    EXPECT_EQ(content(m.f), 4);
}

TEST(Groebner, TracesReexpand) {
    std::vector<std::vector<std::string>> cases = {
        {"2*n", "3*n"},
        {"11104*n", "4*n*(n-466)", "n*(n^2-34*n+1336)"},
        {"6*n^2+4", "10*n+2", "15"},
    };
    for (auto &c : cases) {
        std::vector<ME> in;
        for (auto &s : c)
            in.push_back({pz(s)});
        expect_trace(ideal(c), in);
    }
}

TEST(Groebner, IdealEqual) {
    EXPECT_TRUE(ideal_equal(ideal({"n"}), ideal({"2*n", "3*n"})));
    EXPECT_FALSE(ideal_equal(ideal({"2*n"}), ideal({"n"})));
    auto I = ideal({"n"});
    GroebnerBasis<ZZ> M = groebner(std::vector<ME>{{pz("n"), PZ()}}, 2);
    EXPECT_THROW(ideal_equal(I, M), DomainError);
}

TEST(Groebner, MinimalDegreeElement) {
    EXPECT_EQ(minimal_degree_element(ideal({"n^2", "3"})).f, PZ(3));
    EXPECT_THROW(minimal_degree_element(groebner_ideal(std::vector<PZ>{})), DomainError);

    std::vector<PZ> g = {pz("11104*n"), pz("4*n*(n-466)"), pz("n*(n^2-34*n+1336)")};
    auto m = minimal_degree_element(groebner_ideal(g));
    ASSERT_EQ(m.f.degree(), 1);
    // brute force: every degree-1 combination u1 g1 + u2 g2 + u3 g3 with small cofactors
    ZZ brute = 0;
    const long B = 6;
    for (long a0 = -B; a0 <= B; ++a0)
        for (long b0 = -B; b0 <= B; ++b0)
            for (long b1 = -B; b1 <= B; ++b1)
                for (long c0 = -B; c0 <= B; ++c0) {
                    PZ f = g[0] * PZ(a0) + g[1] * PZ(std::vector<ZZ>{ZZ(b0), ZZ(b1)}) + g[2] * PZ(c0);
                    if (!f.is_zero() && f.degree() <= 1)
                        brute = gcd(brute, content(f));
                }
    EXPECT_EQ(brute, content(m.f));
    EXPECT_EQ(m.f, PZ(content(m.f)) * pz("n"));
}

TEST(Groebner, BuchbergerCriterionAndNormalForm) {
    Gen gen(31);
    for (int i = 0; i < 80; ++i) {
        std::vector<PZ> v;
        int m = static_cast<int>(gen.integer(1, 4));
        for (int j = 0; j < m; ++j)
            v.push_back(gen.poly(3, 12));
        auto G = groebner_ideal(v, true);
        std::vector<ME> in;
        for (auto &p : v)
            in.push_back({p});
        expect_trace(G, in);
        expect_buchberger_criterion(G);
        for (auto &p : v)
            EXPECT_TRUE(in_ideal(p, G));
        PZ f = gen.poly(5, 50);
        auto r1 = normal_form(ME{f}, G);
        EXPECT_EQ(normal_form(r1, G), r1);
        // f - nf(f) lies in the ideal
        EXPECT_TRUE(in_ideal(f - r1[0], G));
        // reduced: heads are positive, no head divides another
        for (auto &g : gens_of(G))
            EXPECT_GT(sgn(g.lc()), 0);
    }
}

TEST(Groebner, ModuleTraces) {
    Gen gen(32);
    for (int i = 0; i < 30; ++i) {
        std::vector<ME> in;
        for (int j = 0; j < 3; ++j)
            in.push_back({gen.poly(2), gen.poly(2), gen.poly(2)});
        auto G = groebner(in, 3, ModuleOrder::POT, true);
        expect_trace(G, in);
        for (auto &e : in)
            EXPECT_TRUE(member(e, G));
    }
}

TEST(Kernel, Examples) {
    PZ x = PZ::x();
    auto K = kernel<ZZ>({{x}, {PZ(-1)}});
    ASSERT_EQ(K.size(), 1u);
    EXPECT_TRUE(ideal_equal(groebner(K, 2), groebner(std::vector<ME>{{PZ(1), x}}, 2)));

    auto Z = kernel<ZZ>({{PZ()}, {PZ()}});
    EXPECT_TRUE(ideal_equal(groebner(Z, 2), groebner(std::vector<ME>{{PZ(1), PZ()}, {PZ(), PZ(1)}}, 2)));
}

TEST(Kernel, ParametricSystemGivesT1T2) {
    auto L = opt(L_PAR);
    auto S = build_system(L, 2);
    ASSERT_EQ(S.A.size(), 3u);
    ASSERT_EQ(S.A[0].size(), 1u);
    auto K = kernel(S.A);
    for (auto &z : K)
        for (auto &p : apply_system(z, S))
            EXPECT_TRUE(p.is_zero());
    std::vector<OreOperator<QtPoly>> ops;
    for (auto &z : K)
        ops.push_back(phi_inverse(SH, z));
    EXPECT_TRUE(same_module(ops, {opt(T1_PAR), opt(T2_PAR), L, L.d_times()}, 2));
    EXPECT_TRUE(same_module(ops, {opt(T1_PAR), opt(T2_PAR)}, 2));
}

TEST(Kernel, SoundnessAndBoundedCompleteness) {
    Gen gen(33);
    for (int i = 0; i < 40; ++i) {
        std::vector<std::vector<PZ>> A(3, std::vector<PZ>(2));
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                A[r][c] = gen.poly(2, 5);
        long a = gen.integer(-1, 1), b = gen.integer(-1, 1);
        for (int c = 0; c < 2; ++c)
            A[2][c] = A[0][c] * PZ(a) + A[1][c] * PZ(b);
        auto K = kernel(A);
        for (auto &z : K) {
            for (int c = 0; c < 2; ++c) {
                PZ s;
                for (int r = 0; r < 3; ++r)
                    s += z[r] * A[r][c];
                ASSERT_TRUE(s.is_zero());
            }
        }
        auto G = groebner(K, 3);
        // exhaustive ansatz: entries of degree <= 1 with coefficients in {-1,0,1}
        int found = 0;
        for (int code = 0; code < 729; ++code) {
            int q = code;
            ME z(3);
            for (int r = 0; r < 3; ++r) {
                long c0 = q % 3 - 1;
                q /= 3;
                long c1 = q % 3 - 1;
                q /= 3;
                z[r] = PZ(std::vector<ZZ>{ZZ(c0), ZZ(c1)});
            }
            bool zero = true;
            for (int c = 0; c < 2 && zero; ++c) {
                PZ s;
                for (int r = 0; r < 3; ++r)
                    s += z[r] * A[r][c];
                zero = s.is_zero();
            }
            if (zero) {
                ++found;
                ASSERT_TRUE(member(z, G));
            }
        }
        EXPECT_GE(found, 1);
    }
}
