#include <gtest/gtest.h>

#include <ccr/ccr_crt.hpp>

using namespace ccr;

namespace
{

const RationalField QQ{};

} // namespace

TEST(CrtMethod, SmallExplicitPrimes)
{
    CrtOptions opt;
    opt.primes = {10007, 10009, 10037, 10039};
    CrtReport rep;
    const auto u5 = compute_ccr_crt(Kind::U, 5, opt, &rep);
    EXPECT_EQ(u5, compute_ccr_series(Kind::U, 5, QQ));
    EXPECT_EQ(rep.primes.size(), 3u);
    EXPECT_EQ(rep.verification, std::vector<std::uint64_t>{10039});
}

TEST(CrtMethod, SinglePrimeReductionMatchesPerPrimeComputation)
{
    const auto u5 = compute_ccr_series(Kind::U, 5, QQ);
    for (std::uint64_t p : {1811ULL, 10007ULL, 1000003ULL}) {
        EXPECT_EQ(reduce_mod(u5, p), compute_ccr_series(Kind::U, 5, PrimeField(p))) << p;
    }
}

TEST(CrtMethod, BudgetIsCheckedUpFront)
{
    CrtOptions opt;
    opt.primes = {10007, 10009};
    EXPECT_THROW(compute_ccr_crt(Kind::W, 7, opt), std::invalid_argument);
    CrtOptions tight;
    tight.budget = 2;
    EXPECT_THROW(compute_ccr_crt(Kind::U, 13, tight), std::invalid_argument);
    EXPECT_THROW(compute_ccr_crt(Kind::U, 3), std::invalid_argument);
    CrtOptions bad;
    bad.primes = {5, 10007, 10009, 10037};
    EXPECT_THROW(compute_ccr_crt(Kind::U, 5, bad), std::invalid_argument);
}

TEST(CrtMethod, WrongResidueIsCaughtByVerificationPrime)
{
    std::vector<WeightedPoly> res;
    for (std::uint64_t p : {10007ULL, 10009ULL}) {
        res.push_back(compute_ccr_series(Kind::W, 5, PrimeField(p)));
    }
    // Too few primes: the reconstruction is wrong and a third prime sees it.
    WeightedPoly guess{Kind::W, 5, 0, crt_combine_polys(res)};
    const auto r3 = compute_ccr_series(Kind::W, 5, PrimeField(10037));
    EXPECT_FALSE(reduce_mod(guess, 10037) == r3);
}

TEST(CrtMethod, BitSizeOfW5)
{
    const auto w5 = compute_ccr_crt(Kind::W, 5);
    EXPECT_EQ(height_stats(w5.poly, 5).bit_size, 602u);
}

TEST(CrtMethod, EqualsSeriesForAllKinds)
{
    CrtOptions opt;
    opt.threads = 4;
    for (long l : {5L, 7L, 11L}) {
        for (Kind k : {Kind::U, Kind::V, Kind::W}) {
            EXPECT_EQ(compute_ccr_crt(k, l, opt), compute_ccr_series(k, l, QQ)) << kind_letter(k) << l;
        }
    }
}

TEST(CrtMethod, BoundCoversActualHeights)
{
    for (long l : {5L, 7L, 11L, 13L}) {
        for (Kind k : {Kind::U, Kind::V, Kind::W}) {
            const auto p = compute_ccr_series(k, l, QQ);
            const double h = height_stats(p.poly, l).height / std::log(2.0);
            EXPECT_LT(h + 1, static_cast<double>(crt_bound_bits(k, l, 0.0))) << kind_letter(k) << l;
        }
    }
}
