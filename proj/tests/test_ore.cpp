#include <gtest/gtest.h>

#include "support.hpp"

using namespace oc;
using namespace oc::testing;

namespace {

using RF = RatFunc<ZZ>;
using RO = RatOreOperator<ZZ>;

template <class R> bool same_rat_op(const RatOreOperator<R> &a, const RatOreOperator<R> &b) {
    if (a.order() != b.order())
        return false;
    for (int i = 0; i <= a.order(); ++i) {
        auto x = a.coeff(i), y = b.coeff(i);
        if (x.num() * y.den() != y.num() * x.den())
            return false;
    }
    return true;
}

OZ D(const OreAlgebra &alg) { return OZ::d_power(alg, 1); }
OZ C(const OreAlgebra &alg, const PZ &f) { return OZ::constant(alg, f); }

} // namespace

TEST(Multiply, CommutationRules) {
    PZ n = PZ::x();
    EXPECT_EQ(D(SH) * C(SH, n), OZ(SH, {PZ(), n + PZ(1)}));
    EXPECT_EQ(D(DF) * C(DF, n), OZ(DF, {PZ(1), n}));
    EXPECT_EQ((D(SH) * C(SH, n)).str(), "(n + 1)*Dn");
}

TEST(Multiply, RationalMultiplierGivesClassicalT) {
    OZ L = opz(L_SQ);
    PZ den = pz("(17+16*n)^2");
    RO M(SH, {RF(pz("(23+16*n)*(25+16*n)"), den), RF(PZ(64), den)});
    RO prod = M * to_rational(L);
    EXPECT_EQ(to_polynomial(prod), opz(T_SQ_SCALED));
}

TEST(Rrem, Examples) {
    OZ L = opz(L_SQ);
    EXPECT_TRUE(rrem(L, L).is_zero());
    EXPECT_TRUE(rrem(opz(T_DX, DF), opz(L_DX, DF)).is_zero());
    EXPECT_TRUE(rrem(opz(T_SQ), L).is_zero());
}

TEST(Rrem, ParametricAgainstHandDivision) {
    using Q = QtPoly;
    auto G = opt(L_PAR);
    auto F = OreOperator<Q>::d_power(SH, 2);
    auto r = rrem(F, G);
    ASSERT_EQ(r.order(), 0);
    // two elimination steps: D^2 - (1/s(a)) D G, then the D-term against G
    Poly<Q> a = G.coeff(1), b = G.coeff(0);
    RatFunc<Q> expect(shift(b, 1) * b, shift(a, 1) * a);
    EXPECT_EQ(r.coeff(0).num() * expect.den(), expect.num() * r.coeff(0).den());
    // and the closed form (n+t+2)/(n(n-1)(n+t))
    RatFunc<Q> closed(parse_operator<Q>("n+t+2", SH).lc(), parse_operator<Q>("n*(n-1)*(n+t)", SH).lc());
    EXPECT_EQ(r.coeff(0).num() * closed.den(), closed.num() * r.coeff(0).den());
}

TEST(ApplySigmaPower, Examples) {
    EXPECT_EQ(apply_sigma_power(SH, pz("n"), -1), pz("n-1"));
    EXPECT_EQ(apply_sigma_power(SH, pz("n+14"), -14), pz("n"));
    PZ f = pz("x^3-2*x+7", DF);
    for (long j : {-5L, -1L, 0L, 3L})
        EXPECT_EQ(apply_sigma_power(DF, f, j), f);
    Gen gen(21);
    for (int i = 0; i < 50; ++i) {
        PZ g = gen.poly(5);
        long j = gen.integer(-7, 7);
        EXPECT_EQ(apply_sigma_power(SH, apply_sigma_power(SH, g, j), -j), g);
    }
}

TEST(ClearDenominators, Examples) {
    OZ P = opz(L_SQ);
    auto a = clear_denominators(to_rational(P));
    EXPECT_EQ(a.b, PZ(1));
    EXPECT_EQ(a.op, P);

    RatOreOperator<ZZ> Q(DF, {RF(), RF(PZ(1), PZ::x())});
    auto b = clear_denominators(Q);
    EXPECT_EQ(b.b, PZ::x());
    EXPECT_EQ(b.op, D(DF));
}

TEST(ClearDenominators, RandomReexpansionAndMinimality) {
    Gen gen(22);
    // denominators are products of known irreducibles, so every maximal
    // proper divisor of b is b/f for one of them
    const std::vector<PZ> irr = {pz("n+1"), pz("n+2"), pz("2*n+3"), pz("n^2+1"), PZ(2), PZ(3)};
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        std::vector<RF> c;
        int r = static_cast<int>(gen.integer(0, 3));
        for (int j = 0; j <= r; ++j) {
            PZ den(1);
            for (int e = static_cast<int>(gen.integer(0, 3)); e > 0; --e)
                den *= irr[static_cast<std::size_t>(gen.integer(0, 5))];
            c.emplace_back(gen.nonzero_poly(2), den);
        }
        RO P(gen.coin() ? SH : DF, c);
        auto cl = clear_denominators(P);
        ASSERT_TRUE(same_rat_op(RatFunc<ZZ>(cl.b) * P, to_rational(cl.op)));
        for (const auto &f : irr) {
            if (!divides(f, cl.b))
                continue;
            RO Q = RatFunc<ZZ>(divexact(cl.b, f)) * P;
            bool poly = true;
            for (const auto &x : Q.coeffs())
                poly = poly && x.is_polynomial();
            EXPECT_FALSE(poly);
            ++checked;
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(OreProperties, Associativity) {
    Gen gen(23);
    for (const auto &alg : {SH, DF})
        for (int i = 0; i < 60; ++i) {
            OZ P = gen.op(alg, 3, 3), Q = gen.op(alg, 3, 3), S = gen.op(alg, 3, 3);
            ASSERT_EQ((P * Q) * S, P * (Q * S));
        }
}

TEST(OreProperties, CommutationIdentity) {
    Gen gen(24);
    for (const auto &alg : {SH, DF})
        for (int i = 0; i < 100; ++i) {
            PZ f = gen.poly(6, 40);
            OZ lhs = D(alg) * C(alg, f) - C(alg, alg.sigma(f)) * D(alg) - C(alg, alg.delta(f));
            ASSERT_TRUE(lhs.is_zero());
        }
}

TEST(OreProperties, DivisionIdentity) {
    Gen gen(25);
    for (const auto &alg : {SH, DF})
        for (int i = 0; i < 60; ++i) {
            OZ F = gen.op(alg, 5, 3), G = gen.op(alg, 3, 3);
            auto d = right_divide(to_rational(F), to_rational(G));
            ASSERT_LT(d.remainder.order(), G.order());
            ASSERT_TRUE(same_rat_op(d.quotient * to_rational(G) + d.remainder, to_rational(F)));
        }
}

TEST(OreProperties, GaussLemma500PairsPerAlgebra) {
    Gen gen(26);
    for (const auto &alg : {SH, DF}) {
        int prim = 0;
        for (int i = 0; i < 500; ++i) {
            OZ P = gen.primitive_op(alg, 3, 3), Q = gen.primitive_op(alg, 3, 3);
            ASSERT_EQ(r_content(P), 1);
            ASSERT_EQ(r_content(Q), 1);
            OZ PQ = P * Q;
            ASSERT_TRUE(is_r_primitive(PQ).primitive) << P.str() << " * " << Q.str();
            ++prim;
        }
        EXPECT_EQ(prim, 500);
    }
}

TEST(OreProperties, ScalingBreaksPrimitivity) {
    Gen gen(27);
    for (int i = 0; i < 50; ++i) {
        OZ P = gen.primitive_op(SH, 3, 3);
        EXPECT_EQ(r_content(scale(P, ZZ(6))), 6);
    }
}

TEST(PrintParse, RoundTrip500PerAlgebraAndRing) {
    Gen gen(28);
    for (const auto &alg : {SH, DF}) {
        for (int i = 0; i < 500; ++i) {
            OZ P = gen.op(alg, 4, 4, 200);
            ASSERT_EQ(parse_operator<ZZ>(P.str(), alg), P) << P.str();
        }
        for (int i = 0; i < 500; ++i) {
            auto P = gen.qt_op(alg, 3, 3);
            ASSERT_EQ(parse_operator<QtPoly>(P.str(), alg), P) << P.str();
        }
    }
}

TEST(PrintParse, GoldenTexts) {
    OZ L = opz(L_SQ);
    EXPECT_EQ(L.order(), 2);
    EXPECT_EQ(L.lc(), pz("256*n^2+32*n+1"));
    EXPECT_EQ(opz("Dn*n"), opz("(n+1)*Dn"));
    EXPECT_EQ(opz("Dx*x", DF), opz("x*Dx+1", DF));
    EXPECT_THROW(opz("n +"), ParseError);
    EXPECT_THROW(opz("(n"), ParseError);
    EXPECT_THROW(opz("0"), ParseError);
    EXPECT_THROW(opz("n/2"), ParseError);
    EXPECT_EQ(opz("(4*n)/2"), opz("2*n"));
    EXPECT_THROW(opz("t*n"), ParseError);
    EXPECT_EQ(opt("n/2 + t").lc().lc(), QtPoly(QQ(1, 2)));
}

TEST(PrintParse, Recurrences) {
    auto r = parse_recurrence<ZZ>(REC_A3, SH);
    EXPECT_EQ(r.op, opz("(n+3)*Dn^3 - (31*n+87)*Dn^2 - (49*n+37)*Dn - (9*n-198)"));
    EXPECT_EQ(r.shift, 3);
    auto b = parse_recurrence<ZZ>(REC_B2, SH);
    EXPECT_EQ(b.op.order(), 5);
    EXPECT_EQ(to_backward(b.op).lhs, pz("n"));
}
