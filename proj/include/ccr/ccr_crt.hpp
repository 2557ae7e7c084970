#ifndef CCR_CCR_CRT_HPP
#define CCR_CCR_CRT_HPP

#include <cmath>
#include <cstdint>
#include <future>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <ccr/ccr_series.hpp>
#include <ccr/crt.hpp>

namespace ccr
{

struct CrtOptions
{
    // Explicit primes; when empty, random primes in [2^(prime_bits-1), 2^prime_bits).
    std::vector<std::uint64_t> primes;
    int prime_bits = 30;
    double margin = 0.25;
    // Primes beyond the bound whose residues must agree with the result.
    int verify_primes = 1;
    // Upper limit on the number of primes drawn.
    std::size_t budget = 4096;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct CrtReport
{
    long bound_bits = 0;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> verification;
};

// Bits of the symmetric modulus needed for every coefficient: the height
// is about 2k(ell+1) log ell, inflated by the margin, plus a sign bit.
inline long crt_bound_bits(Kind kind, long ell, double margin)
{
    const double h = 2.0 * kind_weight(kind) * static_cast<double>(ell + 1) * std::log(static_cast<double>(ell));
    return static_cast<long>(std::ceil((1.0 + margin) * h / std::log(2.0))) + 2;
}

// Coefficientwise symmetric reconstruction of residue polynomials.
inline MPoly<BigRat> crt_combine_polys(const std::vector<WeightedPoly> &residues)
{
    std::set<Monomial> monos;
    for (const auto &r : residues) {
        for (const auto &[m, c] : r.poly.terms()) {
            (void)c;
            monos.insert(m);
        }
    }
    MPoly<BigRat>::Terms terms;
    for (const auto &m : monos) {
        CrtAccumulator acc;
        for (const auto &r : residues) {
            const BigRat *c = r.poly.find(m[0], m[1], m[2]);
            acc.add(c == nullptr ? 0 : c->get_num().get_ui(), r.modulus);
        }
        BigInt v = acc.symmetric();
        if (v != 0) {
            terms.emplace(m, BigRat(v));
        }
    }
    return MPoly<BigRat>(std::move(terms));
}

namespace detail
{

inline std::vector<WeightedPoly> residues_for(Kind kind, long ell, const std::vector<std::uint64_t> &primes,
                                              int threads)
{
    auto one = [kind, ell](std::uint64_t p) { return compute_ccr_series(kind, ell, PrimeField(p)); };
    std::vector<WeightedPoly> out;
    if (threads <= 1) {
        for (auto p : primes) {
            out.push_back(one(p));
        }
        return out;
    }
    for (std::size_t i = 0; i < primes.size(); i += static_cast<std::size_t>(threads)) {
        std::vector<std::future<WeightedPoly>> jobs;
        for (std::size_t j = i; j < std::min(primes.size(), i + static_cast<std::size_t>(threads)); ++j) {
            jobs.push_back(std::async(std::launch::async, one, primes[j]));
        }
        for (auto &f : jobs) {
            out.push_back(f.get());
        }
    }
    return out;
}

} // namespace detail

// Integer CCR polynomial from its reductions modulo many primes.
inline WeightedPoly compute_ccr_crt(Kind kind, long ell, const CrtOptions &opt = {}, CrtReport *report = nullptr)
{
    require_odd_prime(ell);
    if (ell == 3) {
        throw std::invalid_argument("ell = 3 has non-integral coefficients; use the series method");
    }
    const long bits = crt_bound_bits(kind, ell, opt.margin);
    std::vector<std::uint64_t> primes, check;
    double have = 0;
    if (!opt.primes.empty()) {
        std::set<std::uint64_t> seen;
        for (auto p : opt.primes) {
            if (!is_prime_u64(p) || p <= static_cast<std::uint64_t>(ell + 1) || p <= 3) {
                throw std::invalid_argument("unusable CRT prime " + std::to_string(p));
            }
            if (!seen.insert(p).second) {
                throw std::invalid_argument("duplicate CRT prime " + std::to_string(p));
            }
            if (have < static_cast<double>(bits)) {
                primes.push_back(p);
                have += std::log2(static_cast<double>(p));
            } else {
                check.push_back(p);
            }
        }
        if (have < static_cast<double>(bits)) {
            throw std::invalid_argument("prime product has " + std::to_string(static_cast<long>(have)) +
                                        " bits, the height bound needs " + std::to_string(bits));
        }
    } else {
        if (opt.prime_bits < 8 || opt.prime_bits > 62) {
            throw std::invalid_argument("prime size must be between 8 and 62 bits");
        }
        const std::uint64_t hi = std::uint64_t{1} << opt.prime_bits, lo = hi / 2;
        const auto need = static_cast<std::size_t>(std::ceil(static_cast<double>(bits) / (opt.prime_bits - 1))) +
                          static_cast<std::size_t>(std::max(opt.verify_primes, 0));
        if (need > opt.budget) {
            throw std::invalid_argument("height bound needs " + std::to_string(need) + " primes, budget is " +
                                        std::to_string(opt.budget));
        }
        std::mt19937_64 rng(opt.seed);
        std::set<std::uint64_t> seen;
        while (have < static_cast<double>(bits) || static_cast<int>(check.size()) < opt.verify_primes) {
            const std::uint64_t p = random_prime(lo, hi, rng);
            if (p == static_cast<std::uint64_t>(ell) || !seen.insert(p).second) {
                continue;
            }
            if (have < static_cast<double>(bits)) {
                primes.push_back(p);
                have += std::log2(static_cast<double>(p));
            } else {
                check.push_back(p);
            }
        }
    }
    WeightedPoly out;
    out.kind = kind;
    out.ell = ell;
    out.poly = crt_combine_polys(detail::residues_for(kind, ell, primes, opt.threads));
    for (const auto &r : detail::residues_for(kind, ell, check, opt.threads)) {
        if (!(reduce_mod(out, r.modulus) == r)) {
            throw consistency_error("verification prime " + std::to_string(r.modulus) +
                                    " disagrees with the reconstruction");
        }
    }
    if (report != nullptr) {
        report->bound_bits = bits;
        report->primes = primes;
        report->verification = check;
    }
    return out;
}

} // namespace ccr

#endif
