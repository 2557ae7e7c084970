// ccr: compute CCR polynomials and isogeny numerators from the command line.
//
// Exit status: 0 success, 1 usage error, 2 computation error, 3 compare found
// a difference.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ccr/ccr.hpp>

namespace
{

using namespace ccr;

constexpr int kUsage = 1;
constexpr int kFailure = 2;
constexpr int kDiffers = 3;

// Errors found in the arguments before any work starts.
class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct JobConfig
{
    std::string kind = "U";
    long ell = 0;
    std::string method = "series";
    std::uint64_t p = 0;
    long D = 0;
    std::string classpoly;
    long prec = 0;
    long prec_cap = 8;
    long guard = 64;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string format = "text";
    std::string output;
    std::string which = "both";
    std::string tau;
    std::string q;
    std::vector<std::string> files;
};

void emit(const JobConfig &cfg, const std::string &text)
{
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) {
        throw std::runtime_error("cannot write " + cfg.output);
    }
    out << text;
}

std::string render(const JobConfig &cfg, const WeightedPoly &p)
{
    return cfg.format == "json" ? to_json(p).dump(2) + "\n" : to_text(p);
}

void check_ell(long ell)
{
    if (!is_odd_prime(ell)) {
        throw usage_error("--ell must be an odd prime, got " + std::to_string(ell));
    }
}

ClassPolynomial class_poly_for(const JobConfig &cfg)
{
    const std::filesystem::path path = cfg.classpoly.empty() ? class_poly_path(cfg.D) : std::filesystem::path(cfg.classpoly);
    const ClassPolynomial h = load_class_poly(path);
    if (h.D != cfg.D) {
        throw std::runtime_error(path.string() + " holds D = " + std::to_string(h.D) + ", expected " +
                                 std::to_string(cfg.D));
    }
    return h;
}

WeightedPoly compute_poly(const JobConfig &cfg)
{
    check_ell(cfg.ell);
    const Kind kind = parse_kind(cfg.kind);
    if (cfg.method == "series") {
        if (cfg.p != 0) {
            if (!is_prime_u64(cfg.p) || cfg.p <= static_cast<std::uint64_t>(cfg.ell + 1) || cfg.p <= 3) {
                throw usage_error("--p must be a prime above ell + 1 and 3");
            }
            return compute_ccr_series(kind, cfg.ell, PrimeField(cfg.p), SeriesOptions{4, cfg.threads});
        }
        return compute_ccr_series(kind, cfg.ell, RationalField{}, SeriesOptions{4, cfg.threads});
    }
    if (cfg.method == "float") {
        FloatOptions opt;
        opt.bits_override = cfg.prec;
        opt.prec_cap_factor = cfg.prec_cap;
        opt.guard_bits = cfg.guard;
        opt.threads = cfg.threads;
        FloatReport rep;
        auto out = compute_ccr_float(kind, cfg.ell, opt, &rep);
        std::cerr << "float method: " << rep.bits << " bits, " << rep.attempts << " attempt(s)\n";
        return out;
    }
    if (cfg.method == "crt") {
        if (cfg.ell == 3) {
            throw usage_error("the crt method needs ell >= 5");
        }
        CrtOptions opt;
        opt.seed = cfg.seed;
        opt.threads = cfg.threads;
        CrtReport rep;
        auto out = compute_ccr_crt(kind, cfg.ell, opt, &rep);
        std::cerr << "crt method: " << rep.primes.size() << " primes + " << rep.verification.size()
                  << " verification, bound " << rep.bound_bits << " bits\n";
        return out;
    }
    if (cfg.method == "volcano") {
        if (cfg.D >= 0) {
            throw usage_error("the volcano method needs a negative --D");
        }
        const ClassPolynomial h = class_poly_for(cfg);
        std::uint64_t p = cfg.p;
        if (p == 0) {
            p = find_volcano_prime(cfg.ell, cfg.D, 1000, std::uint64_t{1} << 40).p;
        }
        VolcanoOptions opt;
        opt.seed = cfg.seed;
        auto res = compute_u_mod_p(kind, cfg.ell, h, p, opt);
        std::cerr << "volcano method: p = " << p << ", m = " << res.prime.m << ", " << res.rows.size()
                  << " curves\n";
        return res.poly;
    }
    throw usage_error("unknown method '" + cfg.method + "'");
}

int cmd_compute(const JobConfig &cfg)
{
    emit(cfg, render(cfg, compute_poly(cfg)));
    return 0;
}

int cmd_numerators(const JobConfig &cfg)
{
    check_ell(cfg.ell);
    if (cfg.method != "series") {
        throw usage_error("numerators are computed by the series method only");
    }
    NumeratorPair n;
    if (cfg.p != 0) {
        if (!is_prime_u64(cfg.p) || cfg.p <= static_cast<std::uint64_t>(cfg.ell + 1) || cfg.p <= 3) {
            throw usage_error("--p must be a prime above ell + 1 and 3");
        }
        const PrimeField f(cfg.p);
        n = compute_numerators(cfg.ell, compute_ccr_series(Kind::U, cfg.ell, f), f);
    } else {
        const RationalField f;
        n = compute_numerators(cfg.ell, compute_ccr_series(Kind::U, cfg.ell, f), f);
    }
    std::vector<const NumeratorPoly *> sel;
    if (cfg.which != "B") {
        sel.push_back(&n.a);
    }
    if (cfg.which != "A") {
        sel.push_back(&n.b);
    }
    std::string text;
    if (cfg.format == "json") {
        nlohmann::json j = sel.size() == 1 ? to_json(*sel[0]) : nlohmann::json::array({to_json(n.a), to_json(n.b)});
        text = j.dump(2) + "\n";
    } else {
        for (const auto *p : sel) {
            text += to_text(*p);
        }
    }
    emit(cfg, text);
    return 0;
}

// "i", "1.5i", "-0.2+1.1i", "0.3-2i", "0.5".
BigComplex parse_complex(const std::string &s, mpfr_prec_t bits)
{
    static const std::regex re(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])?\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*(i))?\s*$)");
    std::smatch m;
    if (s.empty() || !std::regex_match(s, m, re)) {
        throw usage_error("cannot parse complex number '" + s + "'");
    }
    BigFloat re_part(0L, bits), im_part(0L, bits);
    if (m[4].matched) {
        im_part = m[3].matched ? BigFloat(m[3].str(), bits) : BigFloat(1L, bits);
        if (m[2].matched && m[2].str() == "-") {
            im_part = -im_part;
        }
        if (m[1].matched) {
            if (!m[2].matched) {
                // "1.5i": the leading number is the imaginary coefficient.
                if (m[3].matched) {
                    throw usage_error("cannot parse complex number '" + s + "'");
                }
                im_part = BigFloat(m[1].str(), bits);
            } else {
                re_part = BigFloat(m[1].str(), bits);
            }
        }
    } else if (m[1].matched) {
        re_part = BigFloat(m[1].str(), bits);
    } else {
        throw usage_error("cannot parse complex number '" + s + "'");
    }
    return BigComplex(re_part, im_part);
}

int cmd_eval(const JobConfig &cfg)
{
    const long bits = cfg.prec > 0 ? cfg.prec : 128;
    if (bits < 16) {
        throw usage_error("--prec must be at least 16 bits");
    }
    if (cfg.tau.empty() == cfg.q.empty()) {
        throw usage_error("give exactly one of --tau and --q");
    }
    const auto b = static_cast<mpfr_prec_t>(bits);
    EisensteinValues e;
    if (!cfg.tau.empty()) {
        const BigComplex tau = parse_complex(cfg.tau, b);
        if (tau.imag().sign() <= 0) {
            throw usage_error("tau must lie in the upper half plane");
        }
        e = eisenstein_at(tau);
    } else {
        const BigComplex q = parse_complex(cfg.q, b);
        if (!(q.abs() < BigFloat(1L, b))) {
            throw usage_error("|q| must be below 1");
        }
        const long n = truncation_order(q.abs(), bits);
        e = e_values_from_T(evaluate_many_T(q, n, 3));
    }
    const int digits = std::max(10, static_cast<int>(static_cast<double>(bits) * std::log10(2.0)) - 3);
    const BigComplex j = e.j();
    if (cfg.format == "json") {
        auto cj = [digits](const BigComplex &z) {
            return nlohmann::json{{"re", z.real().to_string(digits)}, {"im", z.imag().to_string(digits)}};
        };
        nlohmann::json out{{"prec", bits}, {"E2", cj(e.e2)}, {"E4", cj(e.e4)}, {"E6", cj(e.e6)}, {"j", cj(j)}};
        emit(cfg, out.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "E2 = " << e.e2.to_string(digits) << "\n"
           << "E4 = " << e.e4.to_string(digits) << "\n"
           << "E6 = " << e.e6.to_string(digits) << "\n"
           << "j = " << j.to_string(digits) << "\n";
        emit(cfg, os.str());
    }
    return 0;
}

PolyFile load_poly(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    try {
        return read_poly(in);
    } catch (const parse_error &e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

int cmd_stats(const JobConfig &cfg)
{
    const PolyFile f = load_poly(cfg.files.at(0));
    const HeightStats s = height_stats(f.poly(), f.ell());
    std::ostringstream os;
    if (cfg.format == "json") {
        nlohmann::json j{{"poly", f.label()}, {"H", s.height}, {"Hhat", s.relative_height}, {"S", s.bit_size}};
        os << j.dump(2) << "\n";
    } else {
        os << f.label() << ": H = " << std::fixed << std::setprecision(4) << s.height
           << ", Hhat = " << std::setprecision(4) << s.relative_height << ", S = " << s.bit_size << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

std::string monomial_text(const Monomial &m)
{
    return "(" + std::to_string(m[0]) + ", " + std::to_string(m[1]) + ", " + std::to_string(m[2]) + ")";
}

int cmd_compare(const JobConfig &cfg)
{
    const PolyFile a = load_poly(cfg.files.at(0));
    const PolyFile b = load_poly(cfg.files.at(1));
    if (a.label() != b.label()) {
        std::cout << "differ: " << a.label() << " vs " << b.label() << "\n";
        return kDiffers;
    }
    // A residue file is compared against the reduction of the other.
    MPoly<BigRat> pa = a.poly(), pb = b.poly();
    std::uint64_t mod = a.modulus();
    if (a.modulus() != b.modulus()) {
        if (a.modulus() != 0 && b.modulus() != 0) {
            std::cout << "differ: moduli " << a.modulus() << " and " << b.modulus() << "\n";
            return kDiffers;
        }
        mod = std::max(a.modulus(), b.modulus());
        pa = a.modulus() == 0 ? reduce_mod(pa, mod) : pa;
        pb = b.modulus() == 0 ? reduce_mod(pb, mod) : pb;
    }
    const auto diff = first_difference(pa, pb);
    if (!diff) {
        std::cout << "identical: " << a.label() << (mod != 0 ? " mod " + std::to_string(mod) : "") << "\n";
        return 0;
    }
    const BigRat *ca = pa.find((*diff)[0], (*diff)[1], (*diff)[2]);
    const BigRat *cb = pb.find((*diff)[0], (*diff)[1], (*diff)[2]);
    std::cout << "differ at monomial " << monomial_text(*diff) << ": " << (ca ? ca->get_str() : "0") << " vs "
              << (cb ? cb->get_str() : "0") << "\n";
    return kDiffers;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Charlap-Coley-Robbins modular polynomials"};
    app.require_subcommand(1);
    JobConfig cfg;

    auto add_common = [&cfg](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("-o,--output", cfg.output, "Output path (default: stdout)");
    };
    auto add_compute_opts = [&cfg](CLI::App *sub) {
        sub->add_option("--ell", cfg.ell, "Odd prime level")->required();
        sub->add_option("--method", cfg.method, "series | float | crt | volcano")
            ->check(CLI::IsMember({"series", "float", "crt", "volcano"}));
        sub->add_option("--p", cfg.p, "Prime modulus (series: reduce; volcano: volcano prime)");
        sub->add_option("--D", cfg.D, "Negative discriminant for the volcano method");
        sub->add_option("--classpoly", cfg.classpoly, "Class polynomial file (default: $CCR_DATA_DIR)");
        sub->add_option("--prec", cfg.prec, "Float method working precision in bits");
        sub->add_option("--prec-cap", cfg.prec_cap, "Escalation cap as a multiple of the initial precision")
            ->check(CLI::PositiveNumber);
        sub->add_option("--guard", cfg.guard, "Float method guard bits")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Random seed");
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App *compute = app.add_subcommand("compute", "Compute U, V or W");
    compute->add_option("--kind", cfg.kind, "U | V | W")->check(CLI::IsMember({"U", "V", "W"}));
    add_compute_opts(compute);
    add_common(compute);

    CLI::App *numerators = app.add_subcommand("numerators", "Compute N_A and N_B");
    add_compute_opts(numerators);
    numerators->add_option("--which", cfg.which, "A | B | both")->check(CLI::IsMember({"A", "B", "both"}));
    add_common(numerators);

    CLI::App *eval = app.add_subcommand("eval", "Evaluate E2, E4, E6 and j");
    eval->add_option("--tau", cfg.tau, "Point of the upper half plane, e.g. i or 0.1+1.2i");
    eval->add_option("--q", cfg.q, "Nome with |q| < 1");
    eval->add_option("--prec", cfg.prec, "Precision in bits (default 128)");
    add_common(eval);

    CLI::App *stats = app.add_subcommand("stats", "Height statistics of a polynomial file");
    stats->add_option("file", cfg.files, "Polynomial file")->required()->expected(1);
    add_common(stats);

    CLI::App *compare = app.add_subcommand("compare", "Compare two polynomial files");
    compare->add_option("files", cfg.files, "Two polynomial files")->required()->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(cfg);
        }
        if (numerators->parsed()) {
            return cmd_numerators(cfg);
        }
        if (eval->parsed()) {
            return cmd_eval(cfg);
        }
        if (stats->parsed()) {
            return cmd_stats(cfg);
        }
        if (compare->parsed()) {
            return cmd_compare(cfg);
        }
    } catch (const usage_error &e) {
        std::cerr << "ccr: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "ccr: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
