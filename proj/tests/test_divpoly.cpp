#include <random>

#include <gtest/gtest.h>

#include <ccr/divpoly.hpp>
#include <ccr/elkies.hpp>

using namespace ccr;

namespace
{

const RationalField QQ{};
const PolyRing<RationalField> QXAB{};

bool weighted_homogeneous_xab(const XABPoly &p, long total)
{
    for (const auto &[m, c] : p.terms()) {
        (void)c;
        if (m[0] + 2 * m[1] + 3 * m[2] != total) {
            return false;
        }
    }
    return true;
}

// P(g, A, B) for P in (X, Y, Z) with Y = A, Z = B.
XABPoly substitute_x(const MPoly<BigRat> &p, const XABPoly &g)
{
    XABPoly out;
    std::vector<XABPoly> gp{xab(1, 0, 0, 0)};
    for (const auto &[m, c] : p.terms()) {
        while (static_cast<int>(gp.size()) <= m[0]) {
            gp.push_back(gp.back() * g);
        }
        out += XABPoly::term(c, 0, m[1], m[2]) * gp[static_cast<std::size_t>(m[0])];
    }
    return out;
}

MPoly<BigRat> d_dx(const MPoly<BigRat> &p)
{
    MPoly<BigRat> out;
    for (const auto &[m, c] : p.terms()) {
        if (m[0] > 0) {
            out.add_term(Monomial{m[0] - 1, m[1], m[2]}, c * m[0]);
        }
    }
    return out;
}

} // namespace

TEST(DivisionPolynomials, PrintedValues)
{
    EXPECT_EQ(division_fn(-1).poly, xab(-1, 0, 0, 0));
    EXPECT_TRUE(division_fn(0).poly.is_zero());
    EXPECT_EQ(division_fn(1).poly, xab(1, 0, 0, 0));
    EXPECT_EQ(division_fn(2).poly, xab(1, 0, 0, 0));
    EXPECT_EQ(division_fn(3).poly, xab(3, 4, 0, 0) + xab(6, 2, 1, 0) + xab(12, 1, 0, 1) + xab(-1, 0, 2, 0));
    // psi_4/(2Y) is twice the printed f_4.
    const XABPoly printed = xab(1, 6, 0, 0) + xab(5, 4, 1, 0) + xab(20, 3, 0, 1) + xab(-5, 2, 2, 0) +
                            xab(-4, 1, 1, 1) + xab(-8, 0, 0, 2) + xab(-1, 0, 3, 0);
    EXPECT_EQ(division_fn(4).poly, BigRat(2) * printed);
    EXPECT_THROW(division_fn(-2), std::invalid_argument);
}

TEST(DivisionPolynomials, DegreeAndWeightUpTo25)
{
    DivisionPolynomials dp;
    for (long n = 1; n <= 25; ++n) {
        const auto &f = dp.f(n);
        EXPECT_EQ(x_degree(f), divpoly_degree(n)) << n;
        EXPECT_TRUE(weighted_homogeneous_xab(f, divpoly_degree(n))) << n;
        const BigRat *lead = f.find(static_cast<int>(divpoly_degree(n)), 0, 0);
        ASSERT_NE(lead, nullptr);
        EXPECT_EQ(*lead, n % 2 != 0 ? n : n / 2) << n;
    }
    EXPECT_EQ(divpoly_degree(7), 24);
}

TEST(DivisionPolynomials, PhiIsHomogeneousOfDegreeNSquared)
{
    DivisionPolynomials dp;
    for (long n = 1; n <= 12; ++n) {
        const XABPoly phi = dp.phi(n);
        EXPECT_EQ(x_degree(phi), n * n) << n;
        EXPECT_TRUE(weighted_homogeneous_xab(phi, n * n)) << n;
        EXPECT_EQ(*phi.find(static_cast<int>(n * n), 0, 0), 1) << n;
    }
}

TEST(DivisionPolynomials, RecurrenceMatchesMultiplicationOnACurve)
{
    // y^2 = x^3 + 2x + 3 over GF(97), P = (3, 6): x([n]P) = phi_n/psi_n^2.
    const std::uint64_t p = 97;
    const PrimeField f(p);
    const FpElem a(2, p), b(3, p), x0(3, p), y0(6, p);
    ASSERT_EQ(y0 * y0, x0 * x0 * x0 + a * x0 + b);
    DivisionPolynomials dp;
    FpElem x = x0, y = y0;
    for (long n = 2; n <= 12; ++n) {
        const bool dbl = n == 2;
        if (!dbl && x == x0) {
            break;
        }
        const FpElem lam = dbl ? (FpElem(3, p) * x0 * x0 + a) * (FpElem(2, p) * y0).inverse()
                               : (y - y0) * (x - x0).inverse();
        const FpElem xn = lam * lam - x - x0;
        y = lam * (x0 - xn) - y0;
        x = xn;
        const FpElem num = upoly_eval(f, specialize_xab(f, dp.phi(n), a, b), x0);
        const FpElem den = upoly_eval(f, specialize_xab(f, dp.psi_squared(n), a, b), x0);
        EXPECT_EQ(num * den.inverse(), x) << n;
    }
}

TEST(TorsionSums, ZeroPowerSumIsHalfDegree)
{
    for (long ell : {3L, 5L}) {
        const auto tp = tk_direct(ell, 2, BigRat(2), BigRat(3), QQ);
        ASSERT_EQ(tp.t.size(), 3u);
        EXPECT_EQ(tp.t[0], (UPoly<RationalField>{BigRat((ell - 1) / 2)}));
        EXPECT_EQ(upoly_degree<RationalField>(tp.modulus), divpoly_degree(ell));
    }
    EXPECT_THROW(tk_direct(11, 1, BigRat(1), BigRat(1), QQ), std::invalid_argument);
}

TEST(TorsionSums, UThreeIsMinimalPolynomialOfTheAbscissa)
{
    // For ell = 3 the kernel sum t_1 is x1 itself, so U_3 = f_3/3.
    const auto u3 = compute_ccr_divpoly(3);
    EXPECT_EQ(u3.poly, BigRat(1, 3) * division_fn(3).poly);
    EXPECT_EQ(u3, compute_ccr_series(Kind::U, 3, QQ));
}

TEST(TorsionSums, UFiveAndSevenMatchSeries)
{
    EXPECT_EQ(compute_ccr_divpoly(5), compute_ccr_series(Kind::U, 5, QQ));
    EXPECT_EQ(compute_ccr_divpoly(7, 3), compute_ccr_series(Kind::U, 7, QQ));
}

TEST(TorsionSums, ModPrimePowerSumsMatchSeries)
{
    const std::uint64_t p = 1000003;
    const PrimeField f(p);
    const auto ps = powersums_series_YZ(Kind::U, 5, f);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> d(1, p - 1);
    for (int i = 0; i < 5; ++i) {
        const FpElem a(d(rng), p), b(d(rng), p);
        const auto v = divpoly_powersums_at(5, 6, a, b, f);
        for (std::size_t r = 0; r < 6; ++r) {
            FpElem acc(0, p);
            for (const auto &[m, c] : ps[r].terms()) {
                acc += c * a.pow(static_cast<std::uint64_t>(m[1])) * b.pow(static_cast<std::uint64_t>(m[2]));
            }
            EXPECT_EQ(v[r], acc) << r;
        }
    }
}

TEST(Elkies, SymbolicIdentitiesForEllThree)
{
    // x1 a root of f_3: the kernel {P, -P} has s_k = x1^k.
    const XABPoly m = BigRat(1, 3) * division_fn(3).poly;
    const XABPoly a = xab(1, 0, 1, 0), b = xab(1, 0, 0, 1), x1 = xab(1, 1, 0, 0);
    const auto [as, bs] = velu_codomain(QXAB, {x1}, a, b);
    const std::array<XABPoly, 4> s{xab(1, 0, 0, 0), x1, x1 * x1, x1 * x1 * x1};
    EXPECT_TRUE(verify_elkies(QXAB, s, a, b, as, bs));
    EXPECT_FALSE(verify_elkies(QXAB, s, a, b, as + xab(1, 0, 1, 0), bs));

    const auto v3 = compute_ccr_series(Kind::V, 3, QQ);
    const auto w3 = compute_ccr_series(Kind::W, 3, QQ);
    const auto u3 = compute_ccr_series(Kind::U, 3, QQ);
    EXPECT_TRUE(reduce_mod_monic_x(substitute_x(v3.poly, as), m).is_zero());
    EXPECT_TRUE(reduce_mod_monic_x(substitute_x(w3.poly, bs), m).is_zero());

    const auto n3 = compute_numerators(3, u3, QQ);
    const XABPoly du = substitute_x(d_dx(u3.poly), x1);
    EXPECT_TRUE(reduce_mod_monic_x(du * as - substitute_x(n3.a.poly, x1), m).is_zero());
    EXPECT_TRUE(reduce_mod_monic_x(du * bs - substitute_x(n3.b.poly, x1), m).is_zero());
}

TEST(Elkies, ReductionRequiresMonicModulus)
{
    EXPECT_THROW(reduce_mod_monic_x(xab(1, 5, 0, 0), division_fn(3).poly), std::invalid_argument);
    const XABPoly m = BigRat(1, 3) * division_fn(3).poly;
    EXPECT_TRUE(reduce_mod_monic_x(m * xab(1, 3, 1, 0), m).is_zero());
}
