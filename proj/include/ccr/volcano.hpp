#ifndef CCR_VOLCANO_HPP
#define CCR_VOLCANO_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <ccr/ccr_series.hpp>
#include <ccr/elkies.hpp>
#include <ccr/errors.hpp>
#include <ccr/fp.hpp>
#include <ccr/linalg.hpp>
#include <ccr/upoly.hpp>

namespace ccr
{

struct CurveFp
{
    FpElem a, b;

    std::uint64_t p() const
    {
        return a.modulus();
    }
    FpElem discriminant() const
    {
        return 4LL * a * a * a + 27LL * b * b;
    }
    FpElem j() const
    {
        const FpElem a3 = 4LL * a * a * a;
        return 1728LL * a3 / discriminant();
    }
    friend bool operator==(const CurveFp &x, const CurveFp &y)
    {
        return x.a == y.a && x.b == y.b;
    }
};

inline CurveFp make_curve(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    CurveFp e{FpElem(a, p), FpElem(b, p)};
    if (e.discriminant().value() == 0) {
        throw std::invalid_argument("singular curve");
    }
    return e;
}

struct PointFp
{
    FpElem x, y;
    bool infinity = true;

    friend bool operator==(const PointFp &p, const PointFp &q)
    {
        if (p.infinity || q.infinity) {
            return p.infinity == q.infinity;
        }
        return p.x == q.x && p.y == q.y;
    }
};

inline bool on_curve(const CurveFp &e, const PointFp &p)
{
    return p.infinity || p.y * p.y == p.x * p.x * p.x + e.a * p.x + e.b;
}

inline PointFp ec_neg(const PointFp &p)
{
    return p.infinity ? p : PointFp{p.x, -p.y, false};
}

inline PointFp ec_add(const CurveFp &e, const PointFp &p, const PointFp &q)
{
    if (p.infinity) {
        return q;
    }
    if (q.infinity) {
        return p;
    }
    FpElem lam;
    if (p.x == q.x) {
        if (p.y != q.y || p.y.value() == 0) {
            return PointFp{};
        }
        lam = (3LL * p.x * p.x + e.a) / (2LL * p.y);
    } else {
        lam = (q.y - p.y) / (q.x - p.x);
    }
    const FpElem x = lam * lam - p.x - q.x;
    return PointFp{x, lam * (p.x - x) - p.y, false};
}

inline PointFp ec_mul(const CurveFp &e, PointFp p, std::uint64_t k)
{
    PointFp r;
    while (k > 0) {
        if (k & 1u) {
            r = ec_add(e, r, p);
        }
        k >>= 1;
        if (k > 0) {
            p = ec_add(e, p, p);
        }
    }
    return r;
}

template <class Rng>
PointFp random_point(const CurveFp &e, Rng &rng)
{
    const std::uint64_t p = e.p();
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::bernoulli_distribution sign;
    for (int i = 0; i < 10000; ++i) {
        const FpElem x(dist(rng), p);
        const FpElem rhs = x * x * x + e.a * x + e.b;
        if (rhs.value() == 0 || !rhs.is_square()) {
            continue;
        }
        const FpElem y = sqrt_mod(rhs);
        return PointFp{x, sign(rng) ? y : -y, false};
    }
    throw not_found_error("no random point found");
}

// Prime p = 1 mod ell with 4p = t^2 - ell^2 v^2 D and v prime to ell; the
// sign of t is chosen so that ell divides m = p + 1 - t.
struct VolcanoPrime
{
    std::uint64_t p = 0;
    long ell = 0;
    long D = 0;
    long long t = 0;
    long long v = 0;
    std::uint64_t m = 0;
};

inline bool is_volcano_prime(std::uint64_t p, long ell, long D, VolcanoPrime *out = nullptr)
{
    if (D >= 0 || !is_prime_u64(p) || p % static_cast<std::uint64_t>(ell) != 1) {
        return false;
    }
    const long long l2 = static_cast<long long>(ell) * ell;
    for (long long v = 1; l2 * v * v * (-D) <= 4 * static_cast<long long>(p); ++v) {
        if (v % ell == 0) {
            continue;
        }
        const long long s = 4 * static_cast<long long>(p) + l2 * v * v * D;
        auto t = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(s))));
        while (t * t > s) {
            --t;
        }
        while ((t + 1) * (t + 1) <= s) {
            ++t;
        }
        if (t * t != s || t == 0) {
            continue;
        }
        if (static_cast<long long>(p + 1 - static_cast<std::uint64_t>(t)) % ell != 0) {
            t = -t;
        }
        if (out != nullptr) {
            *out = VolcanoPrime{p, ell, D, t, v, static_cast<std::uint64_t>(static_cast<long long>(p) + 1 - t)};
        }
        return true;
    }
    return false;
}

// Smallest volcano prime in [lo, hi).
inline VolcanoPrime find_volcano_prime(long ell, long D, std::uint64_t lo, std::uint64_t hi)
{
    require_odd_prime(ell);
    if (D >= 0) {
        throw std::invalid_argument("discriminant must be negative");
    }
    VolcanoPrime vp;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 5); p < hi; ++p) {
        if (is_volcano_prime(p, ell, D, &vp)) {
            return vp;
        }
    }
    throw not_found_error("no volcano prime for ell = " + std::to_string(ell) + ", D = " + std::to_string(D) +
                          " in [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
}

struct ClassPolynomial
{
    long D = 0;
    long h = 0;
    std::vector<BigInt> coeffs; // constant first, monic
};

inline ClassPolynomial read_class_poly(std::istream &is)
{
    ClassPolynomial out;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        if (!header) {
            std::istringstream hs(line);
            std::string dpart, hpart;
            hs >> dpart >> hpart;
            if (dpart.rfind("D=", 0) != 0 || hpart.rfind("h=", 0) != 0) {
                throw parse_error(lineno, "expected header 'D=<d> h=<h>'");
            }
            try {
                out.D = std::stol(dpart.substr(2));
                out.h = std::stol(hpart.substr(2));
            } catch (const std::exception &) {
                throw parse_error(lineno, "malformed header");
            }
            header = true;
            continue;
        }
        BigInt c;
        if (c.set_str(line, 10) != 0) {
            throw parse_error(lineno, "malformed coefficient");
        }
        out.coeffs.push_back(c);
    }
    if (!header) {
        throw parse_error(lineno, "empty class polynomial file");
    }
    if (static_cast<long>(out.coeffs.size()) != out.h + 1 || out.coeffs.back() != 1) {
        throw parse_error(lineno, "expected " + std::to_string(out.h + 1) + " coefficients of a monic polynomial");
    }
    return out;
}

inline std::filesystem::path default_data_dir()
{
    if (const char *env = std::getenv("CCR_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
#ifdef CCR_DEFAULT_DATA_DIR
    return CCR_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

inline std::filesystem::path class_poly_path(long D, const std::filesystem::path &dir = default_data_dir())
{
    return dir / "classpoly" / ("H" + std::to_string(-D) + ".txt");
}

inline ClassPolynomial load_class_poly(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open class polynomial file " + path.string());
    }
    return read_class_poly(in);
}

// Roots of H_D modulo p, sorted; H_D must split into distinct linear factors.
inline std::vector<FpElem> class_poly_roots(const ClassPolynomial &h, std::uint64_t p, std::uint64_t seed = 1)
{
    const PrimeField f(p);
    UPoly<PrimeField> a;
    for (const auto &c : h.coeffs) {
        a.push_back(f.from_integer(c));
    }
    upoly_trim(f, a);
    std::mt19937_64 rng(seed);
    std::vector<FpElem> roots;
    try {
        roots = upoly_roots_split(f, a, rng);
    } catch (const std::domain_error &) {
        throw std::invalid_argument("H_" + std::to_string(h.D) + " does not split modulo " + std::to_string(p));
    }
    std::sort(roots.begin(), roots.end(), [](const FpElem &x, const FpElem &y) { return x.value() < y.value(); });
    return roots;
}

// True when m P = O for `trials` random points.
template <class Rng>
bool has_cardinality(const CurveFp &e, std::uint64_t m, Rng &rng, int trials = 20)
{
    for (int i = 0; i < trials; ++i) {
        if (!ec_mul(e, random_point(e, rng), m).infinity) {
            return false;
        }
    }
    return true;
}

// Curve [3k, 2k] with k = j/(1728 - j), or its twist by the least
// non-residue, whichever has m points.
template <class Rng>
CurveFp curve_from_j(const FpElem &j, std::uint64_t m, Rng &rng)
{
    const std::uint64_t p = j.modulus();
    if (j.value() == 0 || j.value() == 1728 % p) {
        throw std::invalid_argument("j = 0 and j = 1728 are not supported");
    }
    const FpElem k = j / (FpElem(1728, p) - j);
    const CurveFp e{3LL * k, 2LL * k};
    const FpElem c(smallest_nonresidue(p), p);
    const CurveFp twist{e.a * c * c, e.b * c * c * c};
    const bool ok = has_cardinality(e, m, rng), ok_twist = has_cardinality(twist, m, rng);
    if (ok == ok_twist) {
        throw consistency_error("cannot decide the twist of j = " + std::to_string(j.value()) + " with " +
                                std::to_string(m) + " points");
    }
    return ok ? e : twist;
}

// A point of exact order ell from the ell-primary part of a group of order m.
template <class Rng>
PointFp point_of_order_ell(const CurveFp &e, long ell, std::uint64_t m, Rng &rng, int budget = 1000)
{
    const auto l = static_cast<std::uint64_t>(ell);
    if (m % l != 0) {
        throw std::invalid_argument("ell does not divide the group order");
    }
    std::uint64_t cof = m;
    while (cof % l == 0) {
        cof /= l;
    }
    for (int i = 0; i < budget; ++i) {
        PointFp q = ec_mul(e, random_point(e, rng), cof);
        if (q.infinity) {
            continue;
        }
        for (;;) {
            const PointFp next = ec_mul(e, q, l);
            if (next.infinity) {
                return q;
            }
            q = next;
        }
    }
    throw not_found_error("no point of order " + std::to_string(ell) + " within the retry budget");
}

// Image curve and kernel data of the isogeny with kernel <P>.
struct IsogenyTriple
{
    FpElem sigma1, a_star, b_star;
    std::vector<FpElem> xs; // abscissas of P, 2P, ..., ((ell-1)/2) P
    bool crater = false;

    CurveFp codomain() const
    {
        return CurveFp{a_star, b_star};
    }
};

inline IsogenyTriple velu(const CurveFp &e, const PointFp &p, long ell)
{
    if (p.infinity || !on_curve(e, p)) {
        throw std::invalid_argument("kernel generator must be an affine point of the curve");
    }
    IsogenyTriple out;
    PointFp q = p;
    const long d = (ell - 1) / 2;
    for (long i = 1; i <= d; ++i) {
        if (q.infinity) {
            throw std::invalid_argument("kernel generator has order below " + std::to_string(ell));
        }
        out.xs.push_back(q.x);
        q = ec_add(e, q, p);
    }
    for (long i = d + 1; i < ell; ++i) {
        if (q.infinity) {
            throw std::invalid_argument("kernel generator has order below " + std::to_string(ell));
        }
        q = ec_add(e, q, p);
    }
    if (!q.infinity) {
        throw std::invalid_argument("kernel generator does not have order " + std::to_string(ell));
    }
    const PrimeField f(e.p());
    out.sigma1 = f.zero();
    for (const auto &x : out.xs) {
        out.sigma1 += x;
    }
    std::tie(out.a_star, out.b_star) = velu_codomain(f, out.xs, e.a, e.b);
    return out;
}

// Power sums s_0..s_3 of the kernel abscissas.
inline std::array<FpElem, 4> kernel_powersums(const IsogenyTriple &t, std::uint64_t p)
{
    std::array<FpElem, 4> s{FpElem(0, p), FpElem(0, p), FpElem(0, p), FpElem(0, p)};
    for (const auto &x : t.xs) {
        FpElem pw(1, p);
        for (auto &v : s) {
            v += pw;
            pw *= x;
        }
    }
    return s;
}

inline bool elkies_holds(const CurveFp &e, const IsogenyTriple &t)
{
    const PrimeField f(e.p());
    return verify_elkies(f, kernel_powersums(t, e.p()), e.a, e.b, t.a_star, t.b_star);
}

// All ell + 1 isogenies of degree ell from e, crater ones flagged by
// j(E*) in the root set.
template <class Rng>
std::vector<IsogenyTriple> neighbors(const CurveFp &e, long ell, const std::vector<FpElem> &roots, std::uint64_t m,
                                     Rng &rng, int budget = 0)
{
    if (budget <= 0) {
        budget = static_cast<int>(50 * (ell + 1) * ell);
    }
    std::set<std::uint64_t> rootset;
    for (const auto &r : roots) {
        rootset.insert(r.value());
    }
    std::vector<IsogenyTriple> out;
    std::set<std::vector<std::uint64_t>> kernels;
    for (int i = 0; i < budget && static_cast<long>(out.size()) < ell + 1; ++i) {
        const PointFp p = point_of_order_ell(e, ell, m, rng);
        IsogenyTriple t = velu(e, p, ell);
        std::vector<std::uint64_t> key;
        for (const auto &x : t.xs) {
            key.push_back(x.value());
        }
        std::sort(key.begin(), key.end());
        if (!kernels.insert(key).second) {
            continue;
        }
        t.crater = rootset.count(t.codomain().j().value()) != 0;
        out.push_back(std::move(t));
    }
    if (static_cast<long>(out.size()) != ell + 1) {
        throw not_found_error("found " + std::to_string(out.size()) + " of " + std::to_string(ell + 1) +
                              " kernels within the retry budget");
    }
    return out;
}

struct CurveRow
{
    FpElem j;
    CurveFp curve;
    std::vector<IsogenyTriple> isogenies;
    std::vector<FpElem> powersums; // r = 1..ell+1
};

struct VolcanoResult
{
    VolcanoPrime prime;
    std::vector<FpElem> roots;
    std::vector<CurveRow> rows;
    std::vector<MPoly<FpElem>> powersums; // P_1..P_(ell+1) in (Y, Z)
    WeightedPoly poly;
};

struct VolcanoOptions
{
    std::uint64_t seed = 1;
};

inline FpElem root_for(Kind kind, const IsogenyTriple &t)
{
    switch (kind) {
    case Kind::U:
        return t.sigma1;
    case Kind::V:
        return t.a_star;
    case Kind::W:
        return t.b_star;
    }
    return t.sigma1;
}

// Interpolates P_r(Y, Z) of weight k r from per-curve values.
inline std::vector<MPoly<FpElem>> interpolate_powersums(Kind kind, long ell, const std::vector<CurveRow> &rows,
                                                        std::uint64_t p)
{
    const PrimeField f(p);
    std::vector<MPoly<FpElem>> out;
    for (long r = 1; r <= ell + 1; ++r) {
        const auto monos = weighted_monomials(1, kind_weight(kind) * r, 0);
        MPoly<FpElem> poly;
        if (monos.empty()) {
            for (const auto &row : rows) {
                if (row.powersums[static_cast<std::size_t>(r - 1)].value() != 0) {
                    throw consistency_error("power sum of weight 1 is not zero");
                }
            }
            out.push_back(poly);
            continue;
        }
        if (rows.size() < monos.size()) {
            throw std::invalid_argument("need " + std::to_string(monos.size()) + " curves for weight " +
                                        std::to_string(kind_weight(kind) * r) + ", class number is " +
                                        std::to_string(rows.size()));
        }
        Matrix<FpElem> a;
        std::vector<FpElem> b;
        for (const auto &row : rows) {
            std::vector<FpElem> line;
            for (const auto &mo : monos) {
                line.push_back(row.curve.a.pow(static_cast<std::uint64_t>(mo[1])) *
                               row.curve.b.pow(static_cast<std::uint64_t>(mo[2])));
            }
            a.push_back(std::move(line));
            b.push_back(row.powersums[static_cast<std::size_t>(r - 1)]);
        }
        const auto sol = solve_overdetermined(f, a, b);
        for (std::size_t i = 0; i < monos.size(); ++i) {
            poly.add_term(monos[i], sol[i]);
        }
        out.push_back(std::move(poly));
    }
    return out;
}

// CCR polynomial of the given kind modulo a volcano prime.
inline VolcanoResult compute_u_mod_p(Kind kind, long ell, const ClassPolynomial &h, std::uint64_t p,
                                     const VolcanoOptions &opt = {})
{
    require_odd_prime(ell);
    VolcanoResult res;
    if (!is_volcano_prime(p, ell, h.D, &res.prime)) {
        throw std::invalid_argument(std::to_string(p) + " is not a volcano prime for ell = " + std::to_string(ell) +
                                    ", D = " + std::to_string(h.D));
    }
    if (h.h < ell + 2) {
        throw std::invalid_argument("class number " + std::to_string(h.h) + " is below ell + 2");
    }
    std::mt19937_64 rng(opt.seed);
    res.roots = class_poly_roots(h, p, opt.seed);
    if (static_cast<long>(res.roots.size()) != h.h) {
        throw std::invalid_argument("H_D has repeated roots modulo " + std::to_string(p));
    }
    for (const auto &j : res.roots) {
        CurveRow row;
        row.j = j;
        row.curve = curve_from_j(j, res.prime.m, rng);
        row.isogenies = neighbors(row.curve, ell, res.roots, res.prime.m, rng);
        for (const auto &t : row.isogenies) {
            if (!elkies_holds(row.curve, t)) {
                throw consistency_error("Velu output violates the Elkies identities");
            }
        }
        FpElem zero(0, p);
        std::vector<FpElem> pw(row.isogenies.size(), FpElem(1, p));
        for (long r = 1; r <= ell + 1; ++r) {
            FpElem s = zero;
            for (std::size_t i = 0; i < pw.size(); ++i) {
                pw[i] *= root_for(kind, row.isogenies[i]);
                s += pw[i];
            }
            row.powersums.push_back(s);
        }
        res.rows.push_back(std::move(row));
    }
    res.powersums = interpolate_powersums(kind, ell, res.rows, p);
    res.poly = assemble_from_powersums(kind, ell, PrimeField(p), res.powersums);
    return res;
}

} // namespace ccr

#endif
