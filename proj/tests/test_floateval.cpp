#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <ccr/floateval.hpp>

using namespace ccr;

namespace
{

constexpr mpfr_prec_t P = 256;

BigFloat tol_bits(long e)
{
    return BigFloat::pow2(e, 64);
}

BigComplex itau(double y, mpfr_prec_t bits = P)
{
    return BigComplex(BigFloat(bits), BigFloat(y, bits));
}

BigComplex qreal(const BigFloat &x)
{
    return BigComplex(x);
}

// Naive T_{2k}(q) with n = 1..N-1 and plain powering.
BigComplex naive_T(const BigComplex &q, long n_terms, int k)
{
    BigComplex acc(BigFloat(1L, q.precision()));
    for (long n = 1; n < n_terms; ++n) {
        for (int r = 1; r <= 2; ++r) {
            const long e = r == 1 ? n * (3 * n - 1) / 2 : n * (3 * n + 1) / 2;
            const long base = r == 1 ? 6 * n - 1 : 6 * n + 1;
            BigComplex t = q.pow(static_cast<unsigned long>(e));
            for (int i = 0; i < 2 * k; ++i) {
                t *= base;
            }
            if (n % 2 != 0) {
                acc -= t;
            } else {
                acc += t;
            }
        }
    }
    return acc;
}

} // namespace

TEST(Truncation, Examples)
{
    const BigFloat q0 = exp(-(BigFloat::pi(128) * 2L));
    const long n = truncation_order(q0, 64);
    EXPECT_LE(n, 6);
    EXPECT_GE(n, 1);
    EXPECT_EQ(truncation_order(BigFloat::pow2(-100000, 64), 64), 1);
    EXPECT_EQ(truncation_order(BigFloat(0L, 64), 500), 1);
    EXPECT_THROW(truncation_order(BigFloat(1L, 64), 64), std::invalid_argument);
    EXPECT_THROW(truncation_order(0.0, 64), std::invalid_argument);
}

TEST(Truncation, DoublingPrecisionGrowsOrderBySqrtTwo)
{
    const double l2 = -0.5;
    for (long p : {2000L, 8000L, 32000L}) {
        const double ratio = static_cast<double>(truncation_order(l2, 2 * p)) / truncation_order(l2, p);
        EXPECT_NEAR(ratio, std::sqrt(2.0), 0.1) << p;
    }
}

TEST(Truncation, BoundIsSoundForRandomComplexArguments)
{
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> rad(0.001, 1.0), ang(0, 2 * M_PI);
    const BigFloat qmax = exp(-BigFloat::pi(P));
    for (int i = 0; i < 20; ++i) {
        const BigFloat r = qmax * BigFloat(rad(rng), P);
        const BigComplex q = BigComplex::unit(BigFloat(ang(rng), P)) * r;
        for (long n : {2L, 3L, 4L}) {
            const auto tn = evaluate_many_T(q, n, 3);
            const auto t2n = evaluate_many_T(q, 2 * n, 3);
            for (int k = 0; k <= 3; ++k) {
                EXPECT_LE((tn[k] - t2n[k]).abs(), truncation_bound(r, n, k)) << i << " " << n << " " << k;
            }
        }
    }
}

TEST(PowerTable, Algorithm0Branches)
{
    PowerTable<BigInt> t(BigInt(3));
    EXPECT_EQ(t.find(1), 3);
    EXPECT_EQ(t.powers().size(), 1u);
    EXPECT_EQ(t.find(2), 9);
    EXPECT_EQ(t.multiplications(), 1u);
    EXPECT_EQ(t.find(5), 243);
    EXPECT_EQ(t.multiplications(), 3u);
    EXPECT_EQ(t.find(7), 2187);
    EXPECT_EQ(t.multiplications(), 4u);
    PowerTable<BigInt> u(BigInt(2));
    EXPECT_THROW(u.find(9), combination_miss_error);
}

TEST(PowerTable, PentagonalStreamNeverMisses)
{
    PowerTable<long> t(1);
    long c = 0;
    for (long n = 1; n * (3 * n + 1) / 2 <= 10000; ++n) {
        c += 2 * n - 1;
        EXPECT_NO_THROW(t.find(c));
        c += n;
        EXPECT_NO_THROW(t.find(c));
    }
    EXPECT_LE(t.multiplications(), 2 * t.powers().size());
}

TEST(PowerTable, CachedPowersMatchDirectPowering)
{
    const BigComplex z = BigComplex::unit(BigFloat(0.7, P)) * BigFloat(0.9, P);
    PowerTable<BigComplex> t(z);
    long c = 0;
    for (long n = 1; n < 25; ++n) {
        c += 2 * n - 1;
        t.find(c);
        c += n;
        t.find(c);
    }
    for (const auto &[e, v] : t.powers()) {
        EXPECT_LT((v - z.pow(static_cast<unsigned long>(e))).abs(), tol_bits(-(P - 16))) << e;
    }
}

TEST(ManyT, ZeroArgument)
{
    const auto t = evaluate_many_T(qreal(BigFloat(0L, P)), 10, 3);
    for (const auto &v : t) {
        EXPECT_EQ(v.real(), BigFloat(1L, P));
        EXPECT_TRUE(v.imag().is_zero());
    }
}

TEST(ManyT, AgreesWithNaiveSummation)
{
    const BigComplex q = BigComplex::unit(BigFloat(1.3, P)) * BigFloat(0.2, P);
    const auto t = evaluate_many_T(q, 12, 3);
    for (int k = 0; k <= 3; ++k) {
        EXPECT_LT((t[k] - naive_T(q, 12, k)).abs(), tol_bits(-(P - 40))) << k;
    }
}

TEST(ManyT, ValuesAtI)
{
    const auto e = eisenstein_at(itau(1.0));
    const BigFloat three_over_pi = BigFloat(3L, P) / BigFloat::pi(P);
    EXPECT_LT(abs(e.e2.real() - three_over_pi) + abs(e.e2.imag()), tol_bits(-(P - 16)));
    EXPECT_LT(e.e6.abs(), tol_bits(-(P - 16)));
    EXPECT_LT((e.j() - BigComplex(BigFloat(1728L, P))).abs(), tol_bits(-(P - 16)));
}

TEST(EValues, MonotonicAlongImaginaryAxis)
{
    const auto e1 = eisenstein_at(itau(1.0));
    const auto e2 = eisenstein_at(itau(2.0));
    EXPECT_GT(e1.e4.real(), e2.e4.real());
    EXPECT_GT(e2.e4.real(), BigFloat(1L, P));
    EXPECT_LT(e1.e2.real(), e2.e2.real());
    EXPECT_LT(e2.e2.real(), BigFloat(1L, P));
    EXPECT_LT(e1.e6.real(), e2.e6.real());
    EXPECT_LT(e2.e6.real(), BigFloat(1L, P));
}

TEST(EValues, TinyArgumentGivesOnes)
{
    const auto e = e_values_from_T(evaluate_many_T(qreal(BigFloat::pow2(-400, P)), 3, 3));
    for (const auto *v : {&e.e2, &e.e4, &e.e6}) {
        EXPECT_LT((*v - BigComplex(BigFloat(1L, P))).abs(), tol_bits(-300));
    }
    EXPECT_THROW(e_values_from_T({BigComplex(P), BigComplex(P)}), std::domain_error);
}

TEST(EValues, DeltaAgreesWithEtaProduct)
{
    const BigComplex tau(BigFloat(0.21, P), BigFloat(1.05, P));
    const BigComplex q = q_from_tau(tau);
    const auto t = evaluate_many_T(q, truncation_order(q.abs(), P), 3);
    const auto e = e_values_from_T(t);
    const BigComplex eta24 = q * t[0].pow(24);
    EXPECT_LT((e.delta() - eta24).abs(), tol_bits(-(P - 24)) * eta24.abs());
}

TEST(Conjugates, FirstColumnIsPlainEvaluation)
{
    const long ell = 7;
    const BigComplex w(exp(-(BigFloat::pi(P) * 2L * BigFloat(1.1, P)) / ell));
    std::vector<BigComplex> xi;
    for (long j = 0; j < ell; ++j) {
        xi.push_back(BigComplex::root_of_unity(j, ell, P));
    }
    const long n = truncation_order(w.abs(), P);
    const auto tc = evaluate_conjugate_values(ell, w, n, xi, 3);
    const auto t0 = evaluate_many_T(w, n, 3);
    for (int k = 0; k <= 3; ++k) {
        EXPECT_LT((tc[k][0] - t0[k]).abs(), tol_bits(-(P - 16)));
        for (long j = 1; j < ell; ++j) {
            EXPECT_LT((tc[k][ell - j] - tc[k][j].conj()).abs(), tol_bits(-(P - 24)));
            const BigComplex direct = evaluate_many_T(w * xi[j], n, 3)[k];
            EXPECT_LT((tc[k][j] - direct).abs(), tol_bits(-(P - 24)));
        }
    }
    EXPECT_THROW(evaluate_conjugate_values(ell, w, n, std::vector<BigComplex>(3, BigComplex(P)), 3),
                 std::invalid_argument);
}

TEST(Theta, LimitAndJacobiIdentity)
{
    const auto far = theta_eval(itau(30.0, 128), 10);
    EXPECT_LT(far.theta2.abs(), tol_bits(-32));
    EXPECT_LT(far.theta2.abs(), theta_eval(itau(10.0, 128), 10).theta2.abs());
    EXPECT_LT((far.theta3 - BigComplex(BigFloat(1L, 128))).abs(), tol_bits(-100));
    EXPECT_LT((far.theta4 - BigComplex(BigFloat(1L, 128))).abs(), tol_bits(-100));
    const auto th = theta_eval(itau(1.3), 40);
    const BigComplex lhs = th.theta3.pow(4);
    const BigComplex rhs = th.theta4.pow(4) + th.theta2.pow(4);
    EXPECT_LT((lhs - rhs).abs(), tol_bits(-(P - 16)));
}

TEST(Theta, EisensteinRoutesAgree)
{
    for (double y : {1.0, 1.1, 1.7}) {
        const BigComplex tau(BigFloat(0.13, P), BigFloat(y, P));
        const auto th = e4_e6_from_theta(theta_eval(tau, 40));
        const auto e = eisenstein_at(tau);
        EXPECT_LT((th.e4 - e.e4).abs(), tol_bits(-(P - 24))) << y;
        EXPECT_LT((th.e6 - e.e6).abs(), tol_bits(-(P - 24))) << y;
        EXPECT_LT((th.delta - e.delta()).abs(), tol_bits(-(P - 24))) << y;
    }
}

TEST(Multiplier, WeightTwoUnderGammaZero)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dd(-9, 9);
    std::uniform_real_distribution<double> xs(-0.5, 0.5), ys(1.0, 2.0);
    for (long ell : {5L, 7L, 11L}) {
        for (int trial = 0; trial < 10; ++trial) {
            const long c = ell;
            long d = 0;
            do {
                d = dd(rng);
            } while (d == 0 || std::gcd(c, d) != 1);
            // a d - b c = 1
            long a = 0, b = 0;
            for (long aa = -ell; aa <= ell; ++aa) {
                if ((aa * d - 1) % c == 0) {
                    a = aa;
                    b = (aa * d - 1) / c;
                    break;
                }
            }
            ASSERT_EQ(a * d - b * c, 1);
            const BigComplex tau(BigFloat(xs(rng), P), BigFloat(ys(rng), P));
            const BigComplex ctd = tau * c + BigComplex(BigFloat(d, P));
            const BigComplex tau2 = (tau * a + BigComplex(BigFloat(b, P))) / ctd;
            const BigComplex lhs = multiplier_at(ell, tau2);
            const BigComplex rhs = ctd * ctd * multiplier_at(ell, tau);
            EXPECT_LT((lhs - rhs).abs(), tol_bits(-100) * rhs.abs()) << ell << " " << trial;
        }
    }
}
