#pragma once

// Shared fixtures and random generators for the test binaries.

#include <random>
#include <string>
#include <vector>

#include <orecontract.hpp>

namespace oc::testing {

using PZ = Poly<ZZ>;
using OZ = OreOperator<ZZ>;

inline const OreAlgebra SH = OreAlgebra::shift_algebra("n");
inline const OreAlgebra DF = OreAlgebra::differential_algebra("x");

// golden operators
inline const char *L_SQ = "(1+16*n)^2*Dn^2 - (224+512*n)*Dn - (1+n)*(17+16*n)^2";
inline const char *T_SQ = "Dn^3 - (6272*n^3+3976*n^2+420*n+15)*Dn^2 + (12544*n^2+11871*n+2782)*Dn"
                          " + 6272*n^4+22792*n^3+30380*n^2+17459*n+3599";
inline const char *T_SQ_SCALED =
    "64*Dn^3 + (16*n+23)*(16*n-7)*Dn^2 - (576*n+928)*Dn - (16*n+23)*(16*n+25)*(n+1)";

inline const char *L_PAR = "(n-1)*(n+t)*Dn + n+t+1";
inline const char *T1_PAR = "(2+t)*n*Dn^2 + (4-n+t)*Dn - 1";
inline const char *T2_PAR = "(n-1)*n*Dn^2 + 2*(n-1)*Dn + 1";

inline const char *L_DX = "x*Dx^2-(x+2)*Dx+2";
inline const char *T_DX = "Dx^4 - Dx^3";

inline const char *L_BINOM = "3*(n+2)*(3*n+4)*(3*n+5)*(7*n+3)*(25*n^2+21*n+2)*Dn^2"
                           " + (-58975*n^6-347289*n^5-798121*n^4-902739*n^3-519976*n^2-141300*n-13680)*Dn"
                           " + 24*(2*n+1)*(4*n+1)*(4*n+3)*(7*n+10)*(25*n^2+71*n+48)";

inline const char *L_DIFF = "x*(1-x)*Dx - 1";

inline const char *REC_A2 = "n*a[n] = a[n-1] + a[n-2]";
inline const char *REC_B2 = "n*b[n] = b[n-1] + b[n-5]";
inline const char *REC_A3 = "n*a[n] = (31*n-6)*a[n-1] + (49*n-110)*a[n-2] + (9*n-225)*a[n-3]";
inline const char *REC_B3 = "n*b[n] = (4*n+13)*b[n-1] + (69*n-122)*b[n-2] + (36*n-67)*b[n-3]";

inline OZ opz(const std::string &s, const OreAlgebra &alg = SH) { return parse_operator<ZZ>(s, alg); }
inline OreOperator<QtPoly> opt(const std::string &s) { return parse_operator<QtPoly>(s, SH); }
inline PZ pz(const std::string &s, const OreAlgebra &alg = SH) { return parse_operator<ZZ>(s, alg).lc(); }
inline PRecurrence rec(const std::string &s) { return {parse_recurrence<ZZ>(s, SH).op, {}}; }

/// R[x]-module spanned by the coefficient vectors of the ops, padded to order k.
template <class R> GroebnerBasis<R> span_module(const std::vector<OreOperator<R>> &ops, int k) {
    std::vector<ModuleElement<R>> v;
    for (const auto &P : ops)
        v.push_back(phi(P, k));
    return groebner(v, static_cast<std::size_t>(k + 1));
}

template <class R> bool same_module(const std::vector<OreOperator<R>> &a, const std::vector<OreOperator<R>> &b, int k) {
    return ideal_equal(span_module(a, k), span_module(b, k));
}

/// All D-shifts of the ops that stay within order k.
template <class R> std::vector<OreOperator<R>> shifts_up_to(const std::vector<OreOperator<R>> &ops, int k) {
    std::vector<OreOperator<R>> out;
    for (auto s : ops)
        while (s.order() <= k) {
            out.push_back(s);
            s = s.d_times();
        }
    return out;
}

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    PZ poly(int maxdeg, long bound = 9) {
        int d = static_cast<int>(integer(0, maxdeg));
        std::vector<ZZ> c;
        for (int i = 0; i <= d; ++i)
            c.emplace_back(integer(-bound, bound));
        return PZ(std::move(c));
    }
    PZ nonzero_poly(int maxdeg, long bound = 9) {
        for (;;) {
            PZ p = poly(maxdeg, bound);
            if (!p.is_zero())
                return p;
        }
    }
    Poly<QtPoly> qt_poly(int maxdeg, int tdeg = 1, long bound = 5) {
        int d = static_cast<int>(integer(0, maxdeg));
        std::vector<QtPoly> c;
        for (int i = 0; i <= d; ++i) {
            QtPoly a;
            for (int j = 0; j <= tdeg; ++j)
                a += QtPoly(QQ(integer(-bound, bound), integer(1, 3))) * t_power(j);
            c.push_back(a);
        }
        return Poly<QtPoly>(std::move(c));
    }
    OZ op(const OreAlgebra &alg, int maxord, int maxdeg, long bound = 9) {
        int r = static_cast<int>(integer(0, maxord));
        std::vector<PZ> c;
        for (int i = 0; i < r; ++i)
            c.push_back(poly(maxdeg, bound));
        c.push_back(nonzero_poly(maxdeg, bound));
        return OZ(alg, std::move(c));
    }
    /// Order exactly r, primitive lc of positive degree when possible.
    OZ op_exact(const OreAlgebra &alg, int r, int maxdeg, long bound = 9) {
        std::vector<PZ> c;
        for (int i = 0; i < r; ++i)
            c.push_back(poly(maxdeg, bound));
        c.push_back(nonzero_poly(maxdeg, bound));
        return OZ(alg, std::move(c));
    }
    /// Z-primitive operator (gcd of all coefficient contents is 1).
    OZ primitive_op(const OreAlgebra &alg, int maxord, int maxdeg) {
        for (;;) {
            OZ P = op(alg, maxord, maxdeg);
            ZZ g = r_content(P);
            if (g != 1)
                P = OZ(alg, [&] {
                    std::vector<PZ> c;
                    for (auto f : P.coeffs())
                        c.push_back(f.divexact_const(g));
                    return c;
                }());
            if (r_content(P) == 1)
                return P;
        }
    }
    OreOperator<QtPoly> qt_op(const OreAlgebra &alg, int maxord, int maxdeg) {
        int r = static_cast<int>(integer(0, maxord));
        std::vector<Poly<QtPoly>> c;
        for (int i = 0; i <= r; ++i)
            c.push_back(qt_poly(maxdeg));
        while (c.back().is_zero())
            c.back() = qt_poly(maxdeg);
        return OreOperator<QtPoly>(alg, std::move(c));
    }

    std::mt19937_64 &engine() { return rng_; }

  private:
    static QtPoly t_power(int j) {
        QtPoly p(1);
        for (int i = 0; i < j; ++i)
            p = p * QtPoly::t();
        return p;
    }
    std::mt19937_64 rng_;
};

} // namespace oc::testing
