#ifndef CCR_FP_HPP
#define CCR_FP_HPP

#include <cassert>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include <ccr/bigint.hpp>
#include <ccr/errors.hpp>

namespace ccr
{

namespace detail
{

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1u) {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n)
{
    using detail::mul_mod;
    using detail::pow_mod;
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

// Element of GF(p). The modulus travels with the value so that generic
// code (series, matrices, polynomials) needs no separate context.
class FpElem
{
public:
    FpElem() = default;
    FpElem(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static FpElem from_signed(long long value, std::uint64_t p)
    {
        long long r = value % static_cast<long long>(p);
        if (r < 0) {
            r += static_cast<long long>(p);
        }
        return FpElem(static_cast<std::uint64_t>(r), p);
    }
    static FpElem from_integer(const BigInt &value, std::uint64_t p)
    {
        return FpElem(mod_u64(value, p), p);
    }

    std::uint64_t value() const noexcept
    {
        return v_;
    }
    std::uint64_t modulus() const noexcept
    {
        return p_;
    }
    // Representative in (-p/2, p/2].
    long long symmetric() const noexcept
    {
        return v_ > p_ / 2 ? static_cast<long long>(v_) - static_cast<long long>(p_) : static_cast<long long>(v_);
    }

    FpElem &operator+=(const FpElem &o)
    {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) {
            v_ -= p_;
        }
        return *this;
    }
    FpElem &operator-=(const FpElem &o)
    {
        check(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    FpElem &operator*=(const FpElem &o)
    {
        check(o);
        v_ = detail::mul_mod(v_, o.v_, p_);
        return *this;
    }
    FpElem &operator/=(const FpElem &o)
    {
        return *this *= o.inverse();
    }
    friend FpElem operator+(FpElem a, const FpElem &b)
    {
        return a += b;
    }
    friend FpElem operator-(FpElem a, const FpElem &b)
    {
        return a -= b;
    }
    friend FpElem operator*(FpElem a, const FpElem &b)
    {
        return a *= b;
    }
    friend FpElem operator/(FpElem a, const FpElem &b)
    {
        return a /= b;
    }
    friend FpElem operator*(long long s, const FpElem &a)
    {
        return from_signed(s, a.p_) * a;
    }
    FpElem operator-() const
    {
        return FpElem(v_ == 0 ? 0 : p_ - v_, p_);
    }
    friend bool operator==(const FpElem &a, const FpElem &b)
    {
        return a.v_ == b.v_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FpElem &a, const FpElem &b)
    {
        return !(a == b);
    }

    FpElem pow(std::uint64_t e) const
    {
        return FpElem(detail::pow_mod(v_, e, p_), p_);
    }
    FpElem inverse() const
    {
        if (v_ == 0) {
            throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
        }
        // Extended Euclid; p need not be prime for invertible elements.
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p_), new_r = static_cast<long long>(v_);
        while (new_r != 0) {
            const long long q = r / new_r;
            const long long tt = t - q * new_t;
            t = new_t;
            new_t = tt;
            const long long rr = r - q * new_r;
            r = new_r;
            new_r = rr;
        }
        if (r != 1) {
            throw std::domain_error("element not invertible");
        }
        return from_signed(t, p_);
    }
    bool is_square() const
    {
        return v_ == 0 || detail::pow_mod(v_, (p_ - 1) / 2, p_) == 1;
    }

    friend std::ostream &operator<<(std::ostream &os, const FpElem &a)
    {
        return os << a.v_;
    }

private:
    void check(const FpElem &o) const
    {
        assert(p_ == o.p_ && "mixed moduli");
        (void)o;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 1;
};

inline bool is_zero(const FpElem &a)
{
    return a.value() == 0;
}

inline std::string to_string(const FpElem &a)
{
    return std::to_string(a.value());
}

inline std::uint64_t smallest_nonresidue(std::uint64_t p)
{
    for (std::uint64_t c = 2; c < p; ++c) {
        if (!FpElem(c, p).is_square()) {
            return c;
        }
    }
    throw not_found_error("no quadratic non-residue modulo " + std::to_string(p));
}

// Tonelli-Shanks; requires a square input and odd prime p.
inline FpElem sqrt_mod(const FpElem &a)
{
    const std::uint64_t p = a.modulus();
    if (a.value() == 0) {
        return a;
    }
    if (!a.is_square()) {
        throw std::domain_error("not a square modulo " + std::to_string(p));
    }
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1u) == 0) {
        q >>= 1;
        ++s;
    }
    FpElem z(smallest_nonresidue(p), p);
    FpElem c = z.pow(q);
    FpElem x = a.pow((q + 1) / 2);
    FpElem t = a.pow(q);
    int m = s;
    const FpElem one(1, p);
    while (t != one) {
        int i = 0;
        FpElem tt = t;
        while (tt != one) {
            tt *= tt;
            ++i;
        }
        FpElem b = c;
        for (int j = 0; j < m - i - 1; ++j) {
            b *= b;
        }
        x *= b;
        c = b * b;
        t *= c;
        m = i;
    }
    return x;
}

// Uniform random prime in [lo, hi); throws when none is found after many draws.
template <class Rng>
std::uint64_t random_prime(std::uint64_t lo, std::uint64_t hi, Rng &rng)
{
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi - 1);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const std::uint64_t c = dist(rng) | 1u;
        if (c >= lo && c < hi && is_prime_u64(c)) {
            return c;
        }
    }
    throw not_found_error("no prime found in range");
}

} // namespace ccr

#endif
