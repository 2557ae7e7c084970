#include <vector>

#include <gtest/gtest.h>

#include <ccr/qseries.hpp>

using namespace ccr;

namespace
{

using ZSeries = TruncatedSeries<IntegerRing>;
const IntegerRing ZZ{};

// Brute force sum of r-th powers of divisors.
BigInt naive_sigma(unsigned r, long n)
{
    BigInt s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += pow_int(BigInt(d), r);
        }
    }
    return s;
}

} // namespace

TEST(DivisorSigma, Examples)
{
    EXPECT_EQ(divisor_sigma(1, 6), 12);
    EXPECT_EQ(divisor_sigma(3, 2), 9);
    EXPECT_EQ(divisor_sigma(5, 4), 1057);
    EXPECT_THROW(divisor_sigma(1, 0), std::invalid_argument);
}

TEST(DivisorSigma, TableAgreesWithEnumeration)
{
    for (unsigned r : {0u, 1u, 3u, 5u}) {
        const SigmaTable t(r, 200);
        EXPECT_EQ(t(1), 1);
        for (long n = 1; n < 200; ++n) {
            EXPECT_EQ(t(n), naive_sigma(r, n));
        }
        for (long p : {2L, 3L, 5L, 7L, 199L}) {
            EXPECT_EQ(t(p), 1 + pow_int(BigInt(p), r));
        }
    }
}

TEST(Eisenstein, LeadingCoefficients)
{
    EXPECT_EQ(eisenstein_qexp(4, 2, ZZ).to_string(), "0:2: 1 240");
    EXPECT_EQ(eisenstein_qexp(2, 3, ZZ).to_string(), "0:3: 1 -24 -72");
    EXPECT_EQ(eisenstein_qexp(6, 3, ZZ).to_string(), "0:3: 1 -504 -16632");
    EXPECT_THROW(eisenstein_qexp(8, 3, ZZ), std::invalid_argument);
}

TEST(Eisenstein, DeltaAndJ)
{
    EXPECT_EQ(delta_qexp(3, ZZ).to_string(), "1:3: 1 -24");
    const auto j = j_qexp(3, ZZ);
    EXPECT_EQ(j.start(), -1);
    EXPECT_EQ(j.coeff(-1), 1);
    EXPECT_EQ(j.coeff(0), 744);
    EXPECT_EQ(j.coeff(1), 196884);
    EXPECT_EQ(j.coeff(2), 21493760);
}

TEST(Eisenstein, WeightTwelveCuspFormHasValuationOne)
{
    for (long n : {2L, 5L, 20L, 60L}) {
        const auto e4 = eisenstein_qexp(4, n, ZZ);
        const auto e6 = eisenstein_qexp(6, n, ZZ);
        const auto cusp = e4 * e4 * e4 - e6 * e6;
        EXPECT_EQ(cusp.valuation(), n > 1 ? 1 : n);
        EXPECT_EQ(cusp.coeff(1), 1728);
    }
}

TEST(Eisenstein, EtaProductMatchesEisensteinRoute)
{
    const long n = 50;
    const auto e4 = eisenstein_qexp(4, n, ZZ);
    const auto e6 = eisenstein_qexp(6, n, ZZ);
    const auto cusp = e4 * e4 * e4 - e6 * e6;
    const auto delta = delta_qexp(n, ZZ);
    for (long m = 0; m < n; ++m) {
        EXPECT_EQ(ZZ.div_exact(cusp.coeff(m), 1728), delta.coeff(m)) << m;
    }
}

TEST(Multiplier, Coefficients)
{
    const auto f5 = multiplier_qexp(5, 12, ZZ);
    EXPECT_EQ(f5.coeff(0), -4);
    EXPECT_EQ(f5.coeff(1), -24);
    // q^5: -24 sigma1(5) + 5 * 24 sigma1(1)
    EXPECT_EQ(f5.coeff(5), -24 * 6 + 120);
}

TEST(Multiplier, SevenThetaSquareRelation)
{
    // F_7 = -6 (sum q^(m^2 + mn + 2n^2))^2
    const long n = 30;
    ZSeries theta(ZZ, n);
    for (long a = -10; a <= 10; ++a) {
        for (long b = -10; b <= 10; ++b) {
            const long e = a * a + a * b + 2 * b * b;
            if (e < n) {
                theta.add_to_coeff(e, BigInt(1));
            }
        }
    }
    EXPECT_EQ(multiplier_qexp(7, n, ZZ), BigInt(-6) * (theta * theta));
}

TEST(Sigma1, Coefficients)
{
    const auto s = sigma1_qexp(5, 12, ZZ);
    EXPECT_EQ(s.coeff(0), 10);
    EXPECT_EQ(s.coeff(1), 60);
    EXPECT_EQ(s.coeff(5), 60);
    EXPECT_EQ(s.coeff(10), 60 * 3);
    EXPECT_THROW(sigma1_qexp(9, 5, ZZ), std::invalid_argument);
}

TEST(Sigma1, IsMinusHalfEllTimesMultiplier)
{
    for (long l : {3L, 5L, 7L, 11L}) {
        const long n = 60;
        const auto s = sigma1_qexp(l, n, ZZ);
        const auto f = multiplier_qexp(l, n, ZZ);
        EXPECT_EQ(BigInt(2) * s, BigInt(-l) * f) << l;
    }
}

TEST(PowerSums, PrincipalRootIsKernelTrace)
{
    const auto roots = root_series(Kind::U, 5, 20, ZZ);
    EXPECT_EQ(roots.principal, sigma1_qexp(5, 20, ZZ));
    EXPECT_EQ(roots.conjugate.exp_den(), 5);
    EXPECT_EQ(roots.conjugate.order(), 100);
}

TEST(PowerSums, TraceOfUVanishes)
{
    for (long l : {3L, 5L, 7L, 11L, 13L}) {
        const auto p = powersum_series(Kind::U, l, 1, 25, ZZ);
        EXPECT_TRUE(p[0].is_zero()) << l;
    }
}

TEST(PowerSums, SymmetrizeMatchesLiteralCyclotomicSum)
{
    // Oracle: expand every conjugate g(w zeta^k) over Z[zeta], raise to the
    // r-th power and add; fractional and zeta parts must vanish.
    const long l = 5, n = 12;
    using CR = CycloRing<IntegerRing>;
    const CR cr(ZZ, static_cast<int>(l));
    for (Kind kind : {Kind::U, Kind::V, Kind::W}) {
        const auto roots = root_series(kind, l, n, ZZ);
        const auto fast = powersum_series(kind, l, static_cast<int>(l + 1), n, ZZ);
        std::vector<TruncatedSeries<CR>> conj;
        for (long k = 0; k < l; ++k) {
            TruncatedSeries<CR> g(cr, l * n, 0, l);
            for (long m = 0; m < l * n; ++m) {
                auto c = cr.zero();
                c.add_term(roots.conjugate.coeff(m), k * m);
                g.set_coeff(m, c);
            }
            conj.push_back(g);
        }
        for (int r = 1; r <= l + 1; ++r) {
            TruncatedSeries<CR> total(cr, l * n, 0, l);
            for (const auto &g : conj) {
                total += g.pow(static_cast<unsigned long>(r));
            }
            const auto pr = roots.principal.pow(static_cast<unsigned long>(r));
            for (long m = 0; m < l * n; ++m) {
                const auto c = total.coeff(m);
                ASSERT_TRUE(c.is_base());
                if (m % l != 0) {
                    ASSERT_TRUE(is_zero(c.base_part()));
                } else {
                    EXPECT_EQ(BigInt(c.base_part() + pr.coeff(m / l)), fast[static_cast<std::size_t>(r - 1)].coeff(m / l))
                        << kind_letter(kind) << " r=" << r << " m=" << m;
                }
            }
        }
    }
}

TEST(PowerSums, ReductionModPrimeCommutes)
{
    const PrimeField f(1811);
    const auto z = powersum_series(Kind::W, 7, 8, 10, ZZ);
    const auto p = powersum_series(Kind::W, 7, 8, 10, f);
    for (std::size_t r = 0; r < z.size(); ++r) {
        for (long m = 0; m < 10; ++m) {
            EXPECT_EQ(FpElem::from_integer(z[r].coeff(m), 1811), p[r].coeff(m));
        }
    }
}
