#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include <ccr/ccr.hpp>

using namespace ccr;

namespace
{

struct Run
{
    int status = -1;
    std::string out;
};

Run run(const std::string &args)
{
    const std::string cmd = std::string(CCR_TOOL_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test
{
protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path() /
               ("ccr_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override
    {
        std::filesystem::remove_all(dir_);
    }
    std::string path(const std::string &name) const
    {
        return (dir_ / name).string();
    }

    std::filesystem::path dir_;
};

} // namespace

TEST_F(CliTest, ComputeUThreeBySeries)
{
    const auto r = run("compute --kind U --ell 3 --method series");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "CCR kind=U ell=3\n4 0 0 1\n2 1 0 2\n1 0 1 4\n0 2 0 -1/3\n");
}

TEST_F(CliTest, FloatAndSeriesFilesAreByteIdentical)
{
    ASSERT_EQ(run("compute --kind U --ell 5 --method float -o " + path("f.ccr")).status, 0);
    ASSERT_EQ(run("compute --kind U --ell 5 --method series -o " + path("s.ccr")).status, 0);
    ASSERT_EQ(run("compute --kind U --ell 5 --method crt --seed 7 -o " + path("c.ccr")).status, 0);
    EXPECT_EQ(slurp(path("f.ccr")), slurp(path("s.ccr")));
    EXPECT_EQ(slurp(path("c.ccr")), slurp(path("s.ccr")));
    EXPECT_FALSE(slurp(path("s.ccr")).empty());
}

TEST_F(CliTest, VolcanoResidueAndItsPowerSums)
{
    const auto r = run("compute --kind U --ell 5 --method volcano --p 1811 --D -71 -o " + path("v.ccr"));
    ASSERT_EQ(r.status, 0);
    std::ifstream in(path("v.ccr"));
    const PolyFile f = read_poly(in);
    ASSERT_TRUE(f.ccr.has_value());
    EXPECT_EQ(f.modulus(), 1811u);
    // Newton's identities on the residue give sigma_6 = 1565 Y^3 + 1218 Z^2.
    const PrimeField fp(1811);
    const PolyRing<PrimeField> ring(fp);
    std::vector<MPoly<FpElem>> c(7);
    for (const auto &[m, v] : f.poly().terms()) {
        c[static_cast<std::size_t>(6 - m[0])] += MPoly<FpElem>::term(fp.from_rational(v), 0, m[1], m[2]);
    }
    const auto ps = coeffs_to_powersums(ring, c, 6);
    EXPECT_EQ(ps[5], MPoly<FpElem>::term(FpElem(1565, 1811), 0, 3, 0) +
                         MPoly<FpElem>::term(FpElem(1218, 1811), 0, 0, 2));
    ASSERT_EQ(run("compute --kind U --ell 5 -o " + path("s.ccr")).status, 0);
    EXPECT_EQ(run("compare " + path("v.ccr") + " " + path("s.ccr")).status, 0);
}

TEST_F(CliTest, EvalAtI)
{
    const auto r = run("eval --tau i --prec 128");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("j = 1728 "), std::string::npos) << r.out;
    const auto e6 = r.out.find("E6 = ");
    ASSERT_NE(e6, std::string::npos);
    const double v = std::stod(r.out.substr(e6 + 5));
    EXPECT_LT(std::abs(v), 1e-30);
    const auto j = run("eval --tau 0.5+1.3i --prec 64 --format json");
    ASSERT_EQ(j.status, 0);
    const auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed.at("prec"), 64);
    EXPECT_TRUE(parsed.contains("E2"));
    EXPECT_EQ(run("eval --q 0.001 --prec 64").status, 0);
}

TEST_F(CliTest, StatsOfUFive)
{
    ASSERT_EQ(run("compute --kind U --ell 5 -o " + path("u5.ccr")).status, 0);
    const auto r = run("stats " + path("u5.ccr"));
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("S = 36"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("Hhat = 0.5256"), std::string::npos) << r.out;
    const auto j = run("stats --format json " + path("u5.ccr"));
    EXPECT_EQ(nlohmann::json::parse(j.out).at("S"), 36);
}

TEST_F(CliTest, CompareExitCodes)
{
    ASSERT_EQ(run("compute --kind U --ell 5 -o " + path("a.ccr")).status, 0);
    ASSERT_EQ(run("compute --kind U --ell 5 --format json -o " + path("a.json")).status, 0);
    ASSERT_EQ(run("compute --kind U --ell 7 -o " + path("b.ccr")).status, 0);
    const auto same = run("compare " + path("a.ccr") + " " + path("a.ccr"));
    EXPECT_EQ(same.status, 0);
    EXPECT_NE(same.out.find("identical"), std::string::npos);
    EXPECT_EQ(run("compare " + path("a.ccr") + " " + path("a.json")).status, 0);
    EXPECT_EQ(run("compare " + path("a.ccr") + " " + path("b.ccr")).status, 3);
    std::string text = slurp(path("a.ccr"));
    text.replace(text.find(" 20\n"), 4, " 21\n");
    std::ofstream(path("c.ccr")) << text;
    const auto diff = run("compare " + path("a.ccr") + " " + path("c.ccr"));
    EXPECT_EQ(diff.status, 3);
    EXPECT_NE(diff.out.find("(4, 1, 0): 20 vs 21"), std::string::npos) << diff.out;
}

TEST_F(CliTest, NumeratorsOutput)
{
    const auto r = run("numerators --ell 3 --which A");
    ASSERT_EQ(r.status, 0);
    const PolyFile f = read_poly_string(r.out);
    ASSERT_TRUE(f.numerator.has_value());
    EXPECT_EQ(f.numerator->which, 'A');
    const auto both = run("numerators --ell 5");
    EXPECT_NE(both.out.find("CCRNUM which=A ell=5"), std::string::npos);
    EXPECT_NE(both.out.find("CCRNUM which=B ell=5"), std::string::npos);
}

TEST_F(CliTest, ErrorsMapToExitCodes)
{
    EXPECT_EQ(run("compute --kind U --ell 9").status, 1);
    EXPECT_EQ(run("compute --kind Q --ell 5").status, 1);
    EXPECT_EQ(run("compute --ell 5 --bogus").status, 1);
    EXPECT_EQ(run("").status, 1);
    EXPECT_EQ(run("compute --ell 5 --method volcano --D -71 --classpoly /nonexistent/H71.txt").status, 2);
    EXPECT_EQ(run("compute --ell 5 --method float --prec 40 --prec-cap 60 --kind W").status, 0);
    EXPECT_EQ(run("compute --ell 5 --method float --prec 40 --guard 2 --prec-cap 1 --kind W").status, 2);
    std::ofstream(path("bad.ccr")) << "CCR kind=U ell=5\n6 0 0 1\n4 1 x 20\n";
    EXPECT_EQ(run("stats " + path("bad.ccr")).status, 2);
    EXPECT_EQ(run("eval --tau -1i").status, 1);
}

TEST_F(CliTest, DeterministicForFixedSeed)
{
    const auto a = run("compute --kind W --ell 7 --method crt --seed 3");
    const auto b = run("compute --kind W --ell 7 --method crt --seed 3");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    const auto v1 = run("compute --kind V --ell 5 --method volcano --D -151 --seed 2");
    const auto v2 = run("compute --kind V --ell 5 --method volcano --D -151 --seed 2");
    ASSERT_EQ(v1.status, 0);
    EXPECT_EQ(v1.out, v2.out);
}
