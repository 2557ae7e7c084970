#include <string>

#include <gtest/gtest.h>

#include <ccr/ccr_float.hpp>

using namespace ccr;

namespace
{

// |x - printed| below one unit of the last printed decimal.
bool matches_printed(const BigFloat &x, const std::string &printed)
{
    const auto dot = printed.find('.');
    const long decimals = static_cast<long>(printed.size() - dot - 1);
    BigFloat unit(1L, x.precision());
    for (long i = 0; i < decimals; ++i) {
        unit /= 10L;
    }
    return abs(x - BigFloat(printed, x.precision())) < unit;
}

} // namespace

TEST(FloatRows, PrintedRowsForEllFive)
{
    const auto r1 = instantiate_float_row(Kind::U, 5, 6, BigRat(11, 10), 128);
    ASSERT_EQ(r1.coeffs.size(), 2u);
    EXPECT_TRUE(matches_printed(r1.coeffs[0], "1.912407642")) << r1.coeffs[0];
    EXPECT_TRUE(matches_printed(r1.coeffs[1], "0.0009726854527956")) << r1.coeffs[1];
    EXPECT_TRUE(matches_printed(r1.rhs, "1393450.57337539139")) << r1.rhs;
    const auto r2 = instantiate_float_row(Kind::U, 5, 6, BigRat(12, 10), 128);
    EXPECT_TRUE(matches_printed(r2.coeffs[0], "1.435895343")) << r2.coeffs[0];
    EXPECT_TRUE(matches_printed(r2.coeffs[1], "0.0005247501300701")) << r2.coeffs[1];
    EXPECT_TRUE(matches_printed(r2.rhs, "1156054.63606077432")) << r2.rhs;
}

TEST(FloatRows, TwoRowSolveRoundsToSeriesCoefficients)
{
    const FloatField ff(128);
    Matrix<BigFloat> a;
    std::vector<BigFloat> b;
    for (long i : {11L, 12L}) {
        auto row = instantiate_float_row(Kind::U, 5, 6, BigRat(i, 10), 128);
        a.push_back(row.coeffs);
        b.push_back(row.rhs);
    }
    const auto u = solve_linear(ff, a, b);
    const BigFloat tol = BigFloat::pow2(-20, 64);
    EXPECT_EQ(round_to_integer(u[0], tol), 1000320);
    EXPECT_EQ(round_to_integer(u[1], tol), -534159360);
}

TEST(FloatRows, SampleShapeAndTrace)
{
    const auto s = float_sample(Kind::U, 7, BigRat(13, 10), 160);
    ASSERT_EQ(s.powersums.size(), 9u);
    EXPECT_EQ(s.powersums[0], BigFloat(8L, 160));
    EXPECT_LT(abs(s.powersums[1]), BigFloat::pow2(-120, 64));
    EXPECT_THROW(instantiate_float_row(Kind::U, 9, s), std::invalid_argument);
    EXPECT_THROW(float_sample(Kind::U, 9, BigRat(11, 10), 128), std::invalid_argument);
}

TEST(FloatMethod, EqualsSeriesMethod)
{
    for (long l : {3L, 5L, 7L, 11L, 13L}) {
        for (Kind k : {Kind::U, Kind::V, Kind::W}) {
            EXPECT_EQ(compute_ccr_float(k, l), compute_ccr_series(k, l, RationalField{})) << kind_letter(k) << l;
        }
    }
}

TEST(FloatMethod, ThreadedSamplingMatches)
{
    FloatOptions opt;
    opt.threads = 4;
    EXPECT_EQ(compute_ccr_float(Kind::V, 11, opt), compute_ccr_float(Kind::V, 11));
}

TEST(FloatMethod, EscalatesPrecisionWhenRoundingFails)
{
    FloatReport rep;
    FloatOptions opt;
    opt.guard_bits = 4;
    const auto w = compute_ccr_float(Kind::W, 7, opt, &rep);
    EXPECT_GT(rep.attempts, 1);
    EXPECT_GT(rep.bits, float_default_bits(Kind::W, 7, 4));
    EXPECT_EQ(w, compute_ccr_series(Kind::W, 7, RationalField{}));
}

TEST(FloatMethod, CapStopsEscalation)
{
    FloatOptions opt;
    opt.bits_override = 40;
    opt.guard_bits = 2;
    opt.prec_cap_factor = 1;
    EXPECT_THROW(compute_ccr_float(Kind::W, 13, opt), precision_error);
}
