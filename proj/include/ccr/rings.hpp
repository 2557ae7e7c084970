#ifndef CCR_RINGS_HPP
#define CCR_RINGS_HPP

#include <cstdint>
#include <string>

#include <ccr/bigfloat.hpp>
#include <ccr/bigint.hpp>
#include <ccr/errors.hpp>
#include <ccr/fp.hpp>

namespace ccr
{

// Ring descriptors. Each exposes an element type with value arithmetic
// (+, -, *, unary -, ==) plus the constructors generic code needs.
// Fields additionally provide inverse() and from_rational().

struct IntegerRing
{
    using element = BigInt;
    static constexpr bool is_field = false;
    static constexpr bool is_exact = true;

    element zero() const
    {
        return 0;
    }
    element one() const
    {
        return 1;
    }
    element from_integer(const BigInt &n) const
    {
        return n;
    }
    std::uint64_t characteristic() const
    {
        return 0;
    }
    bool is_zero(const element &a) const
    {
        return sgn(a) == 0;
    }
    // Exact division; the caller guarantees divisibility.
    element div_exact(const element &a, const BigInt &d) const
    {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
        return q;
    }
    friend bool operator==(const IntegerRing &, const IntegerRing &)
    {
        return true;
    }
};

struct RationalField
{
    using element = BigRat;
    static constexpr bool is_field = true;
    static constexpr bool is_exact = true;

    element zero() const
    {
        return 0;
    }
    element one() const
    {
        return 1;
    }
    element from_integer(const BigInt &n) const
    {
        return BigRat(n);
    }
    element from_rational(const BigRat &r) const
    {
        return r;
    }
    std::uint64_t characteristic() const
    {
        return 0;
    }
    bool is_zero(const element &a) const
    {
        return sgn(a) == 0;
    }
    element inverse(const element &a) const
    {
        if (sgn(a) == 0) {
            throw std::domain_error("inverse of zero rational");
        }
        return BigRat(1) / a;
    }
    element div_int(const element &a, long k) const
    {
        return a / BigRat(k);
    }
    friend bool operator==(const RationalField &, const RationalField &)
    {
        return true;
    }
};

struct PrimeField
{
    using element = FpElem;
    static constexpr bool is_field = true;
    static constexpr bool is_exact = true;

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t modulus) : p(modulus) {}

    element zero() const
    {
        return FpElem(0, p);
    }
    element one() const
    {
        return FpElem(1, p);
    }
    element from_integer(const BigInt &n) const
    {
        return FpElem::from_integer(n, p);
    }
    element from_rational(const BigRat &r) const
    {
        const FpElem den = FpElem::from_integer(r.get_den(), p);
        if (den.value() == 0) {
            throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
        }
        return FpElem::from_integer(r.get_num(), p) / den;
    }
    std::uint64_t characteristic() const
    {
        return p;
    }
    bool is_zero(const element &a) const
    {
        return a.value() == 0;
    }
    element inverse(const element &a) const
    {
        return a.inverse();
    }
    element div_int(const element &a, long k) const
    {
        return a / FpElem::from_signed(k, p);
    }
    friend bool operator==(const PrimeField &a, const PrimeField &b)
    {
        return a.p == b.p;
    }
};

struct FloatField
{
    using element = BigFloat;
    static constexpr bool is_field = true;
    static constexpr bool is_exact = false;

    mpfr_prec_t bits = 64;

    FloatField() = default;
    explicit FloatField(mpfr_prec_t b) : bits(b) {}

    element zero() const
    {
        return BigFloat(bits);
    }
    element one() const
    {
        return BigFloat(1L, bits);
    }
    element from_integer(const BigInt &n) const
    {
        return BigFloat(n, bits);
    }
    element from_rational(const BigRat &r) const
    {
        return BigFloat(r, bits);
    }
    std::uint64_t characteristic() const
    {
        return 0;
    }
    bool is_zero(const element &a) const
    {
        return a.is_zero();
    }
    element inverse(const element &a) const
    {
        return one() / a;
    }
    element div_int(const element &a, long k) const
    {
        return a / k;
    }
    friend bool operator==(const FloatField &a, const FloatField &b)
    {
        return a.bits == b.bits;
    }
};

} // namespace ccr

#endif
