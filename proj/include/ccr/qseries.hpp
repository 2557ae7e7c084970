#ifndef CCR_QSERIES_HPP
#define CCR_QSERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <ccr/bigint.hpp>
#include <ccr/cyclo.hpp>
#include <ccr/errors.hpp>
#include <ccr/kind.hpp>
#include <ccr/rings.hpp>
#include <ccr/series.hpp>

namespace ccr
{

inline BigInt divisor_sigma(unsigned r, long n)
{
    if (n < 1) {
        throw std::invalid_argument("divisor_sigma needs n >= 1");
    }
    BigInt s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += pow_int(BigInt(d), r);
            if (d * d != n) {
                s += pow_int(BigInt(n / d), r);
            }
        }
    }
    return s;
}

// Sum of the divisors of n that are prime to ell.
inline BigInt divisor_sigma1_prime_to(long ell, long n)
{
    while (n % ell == 0) {
        n /= ell;
    }
    return divisor_sigma(1, n);
}

// sigma_r(n) for n = 0..N-1 (entry 0 unused), by a sieve.
struct SigmaTable
{
    unsigned r = 0;
    std::vector<BigInt> values;

    SigmaTable(unsigned power, long n) : r(power), values(static_cast<std::size_t>(std::max(n, 1L)), 0)
    {
        for (long d = 1; d < n; ++d) {
            const BigInt dr = pow_int(BigInt(d), r);
            for (long m = d; m < n; m += d) {
                values[static_cast<std::size_t>(m)] += dr;
            }
        }
    }
    const BigInt &operator()(long n) const
    {
        return values.at(static_cast<std::size_t>(n));
    }
};

// E_k for k in {2, 4, 6}, to order N.
template <class Ring>
TruncatedSeries<Ring> eisenstein_qexp(int k, long n, const Ring &ring)
{
    long factor = 0;
    unsigned r = 0;
    switch (k) {
    case 2:
        factor = -24;
        r = 1;
        break;
    case 4:
        factor = 240;
        r = 3;
        break;
    case 6:
        factor = -504;
        r = 5;
        break;
    default:
        throw std::invalid_argument("unsupported Eisenstein weight " + std::to_string(k));
    }
    if (n < 1) {
        throw std::invalid_argument("series order must be positive");
    }
    const SigmaTable sig(r, n);
    TruncatedSeries<Ring> e(ring, n);
    e.set_coeff(0, ring.one());
    for (long m = 1; m < n; ++m) {
        e.set_coeff(m, ring.from_integer(BigInt(factor * sig(m))));
    }
    return e;
}

// prod_{n >= 1} (1 - q^n) via Euler's pentagonal number theorem.
template <class Ring>
TruncatedSeries<Ring> euler_product_qexp(long n, const Ring &ring)
{
    TruncatedSeries<Ring> s(ring, n);
    s.set_coeff(0, ring.one());
    for (long k = 1;; ++k) {
        const long e1 = k * (3 * k - 1) / 2;
        const long e2 = k * (3 * k + 1) / 2;
        if (e1 >= n) {
            break;
        }
        const auto c = ring.from_integer(BigInt(k % 2 == 0 ? 1 : -1));
        s.set_coeff(e1, c);
        if (e2 < n) {
            s.set_coeff(e2, c);
        }
    }
    return s;
}

// Delta = q prod (1 - q^n)^24, to order N.
template <class Ring>
TruncatedSeries<Ring> delta_qexp(long n, const Ring &ring)
{
    if (n < 1) {
        throw std::invalid_argument("series order must be positive");
    }
    const auto p = euler_product_qexp(n - 1 > 0 ? n - 1 : 1, ring).pow(24);
    TruncatedSeries<Ring> d(ring, n, 1);
    for (long m = 1; m < n; ++m) {
        d.set_coeff(m, p.coeff(m - 1));
    }
    return d;
}

// j = E4^3 / Delta = 1/q + 744 + ..., coefficients of q^-1 .. q^(N-1).
template <class Ring>
TruncatedSeries<Ring> j_qexp(long n, const Ring &ring)
{
    const auto e4 = eisenstein_qexp(4, n + 1, ring);
    const auto delta = delta_qexp(n + 2, ring);
    return (e4 * e4 * e4) * delta.inverse();
}

// F_ell(q) = E2(q) - ell E2(q^ell).
template <class Ring>
TruncatedSeries<Ring> multiplier_qexp(long ell, long n, const Ring &ring)
{
    const auto e2 = eisenstein_qexp(2, n, ring);
    const auto e2l = eisenstein_qexp(2, (n + ell - 1) / ell, ring).substitute_power(ell).truncate(n);
    return e2 - ring.from_integer(BigInt(ell)) * e2l;
}

// Trace of the kernel: ell(ell-1)/2 + 12 ell sum sigma1'(n) q^n.
template <class Ring>
TruncatedSeries<Ring> sigma1_qexp(long ell, long n, const Ring &ring)
{
    require_odd_prime(ell);
    TruncatedSeries<Ring> s(ring, n);
    s.set_coeff(0, ring.from_integer(BigInt(ell * (ell - 1) / 2)));
    for (long m = 1; m < n; ++m) {
        s.set_coeff(m, ring.from_integer(BigInt(12 * ell) * divisor_sigma1_prime_to(ell, m)));
    }
    return s;
}

// The ell + 1 roots of a CCR polynomial as series: one principal root in q
// and a conjugate series g(w), w = q^(1/ell), whose other roots are g(w zeta^k).
template <class Ring>
struct RootSeries
{
    TruncatedSeries<Ring> principal;
    TruncatedSeries<Ring> conjugate;
};

// Principal and conjugate roots to q-order N (conjugate to w-order ell N).
template <class Ring>
RootSeries<Ring> root_series(Kind kind, long ell, long n, const Ring &ring)
{
    require_odd_prime(ell);
    const long nw = ell * n;
    const long nl = (n + ell - 1) / ell;
    switch (kind) {
    case Kind::U: {
        // g(x) = F_ell(x)/2 = (1 - ell)/2 - 12 sum sigma1'(m) x^m
        TruncatedSeries<Ring> g(ring, nw, 0, ell);
        g.set_coeff(0, ring.from_integer(BigInt((1 - ell) / 2)));
        for (long m = 1; m < nw; ++m) {
            g.set_coeff(m, ring.from_integer(BigInt(-12) * divisor_sigma1_prime_to(ell, m)));
        }
        return {sigma1_qexp(ell, n, ring), std::move(g)};
    }
    case Kind::V: {
        auto g = ring.from_integer(BigInt(-3)) * eisenstein_qexp(4, nw, ring);
        auto p = ring.from_integer(BigInt(-3) * pow_int(BigInt(ell), 4)) *
                 eisenstein_qexp(4, nl, ring).substitute_power(ell).truncate(n);
        return {std::move(p), g.with_exp_den(ell)};
    }
    case Kind::W: {
        auto g = ring.from_integer(BigInt(-2)) * eisenstein_qexp(6, nw, ring);
        auto p = ring.from_integer(BigInt(-2) * pow_int(BigInt(ell), 6)) *
                 eisenstein_qexp(6, nl, ring).substitute_power(ell).truncate(n);
        return {std::move(p), g.with_exp_den(ell)};
    }
    }
    throw std::invalid_argument("unknown kind");
}

// principal + sum_{k=0}^{ell-1} conjugate(w zeta^k) as a q-series. Each
// w-coefficient c_m contributes c_m (1 + zeta^m + ... + zeta^(m(ell-1))) in
// Z[zeta]; terms with ell not dividing m must cancel, the others give ell c_m.
template <class Ring>
TruncatedSeries<Ring> symmetrize(const TruncatedSeries<Ring> &principal, const TruncatedSeries<Ring> &conjugate,
                                 long ell)
{
    const Ring &ring = principal.ring();
    if (conjugate.exp_den() != ell || principal.exp_den() != 1) {
        throw std::invalid_argument("symmetrize expects a q-series and a w-series");
    }
    const CycloRing<Ring> cyc(ring, static_cast<int>(ell));
    const long n = std::min(principal.order(), conjugate.order() / ell);
    TruncatedSeries<Ring> out = principal.truncate(n);
    for (long m = std::max(0L, conjugate.start()); m < n * ell; ++m) {
        const auto c = conjugate.coeff(m);
        if (ring.is_zero(c)) {
            continue;
        }
        auto acc = cyc.zero();
        for (long k = 0; k < ell; ++k) {
            acc.add_term(c, k * m);
        }
        if (!acc.is_base()) {
            throw consistency_error("cyclotomic part of a conjugate sum did not cancel");
        }
        if (m % ell != 0) {
            if (!ring.is_zero(acc.base_part())) {
                throw consistency_error("fractional power of q survived in a conjugate sum");
            }
            continue;
        }
        out.add_to_coeff(m / ell, acc.base_part());
    }
    return out;
}

// Power sums P_r, r = 1..rmax, of the ell + 1 roots of the CCR polynomial of
// the given kind, as q-series to order N.
template <class Ring>
std::vector<TruncatedSeries<Ring>> powersum_series(Kind kind, long ell, int rmax, long n, const Ring &ring)
{
    const RootSeries<Ring> roots = root_series(kind, ell, n, ring);
    std::vector<TruncatedSeries<Ring>> out;
    out.reserve(static_cast<std::size_t>(std::max(rmax, 0)));
    TruncatedSeries<Ring> pp = roots.principal;
    TruncatedSeries<Ring> gp = roots.conjugate;
    for (int r = 1; r <= rmax; ++r) {
        if (r > 1) {
            pp = pp * roots.principal;
            gp = gp * roots.conjugate;
        }
        out.push_back(symmetrize(pp, gp, ell));
    }
    return out;
}

} // namespace ccr

#endif
