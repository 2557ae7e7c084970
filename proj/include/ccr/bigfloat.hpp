#ifndef CCR_BIGFLOAT_HPP
#define CCR_BIGFLOAT_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <mpfr.h>

#include <ccr/bigint.hpp>
#include <ccr/errors.hpp>

namespace ccr
{

// Owning wrapper around an MPFR number. Binary operations produce a result
// whose precision is the larger of the operand precisions.
class BigFloat
{
public:
    explicit BigFloat(mpfr_prec_t bits = 64)
    {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(double x, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigFloat(long x, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigFloat(int x, mpfr_prec_t bits) : BigFloat(static_cast<long>(x), bits) {}
    BigFloat(const BigInt &x, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const BigRat &x, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const std::string &decimal, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(v_);
            throw std::invalid_argument("malformed decimal '" + decimal + "'");
        }
    }
    BigFloat(const BigFloat &o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat &&o) noexcept
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat &operator=(const BigFloat &o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat &operator=(BigFloat &&o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat()
    {
        mpfr_clear(v_);
    }

    mpfr_prec_t precision() const
    {
        return mpfr_get_prec(v_);
    }
    mpfr_ptr get()
    {
        return v_;
    }
    mpfr_srcptr get() const
    {
        return v_;
    }

    static BigFloat pi(mpfr_prec_t bits)
    {
        BigFloat r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^e at the given precision.
    static BigFloat pow2(long e, mpfr_prec_t bits)
    {
        BigFloat r(1L, bits);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    BigFloat &operator+=(const BigFloat &o)
    {
        widen(o);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat &operator-=(const BigFloat &o)
    {
        widen(o);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat &operator*=(const BigFloat &o)
    {
        widen(o);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat &operator/=(const BigFloat &o)
    {
        widen(o);
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat &operator*=(long s)
    {
        mpfr_mul_si(v_, v_, s, MPFR_RNDN);
        return *this;
    }
    BigFloat &operator/=(long s)
    {
        mpfr_div_si(v_, v_, s, MPFR_RNDN);
        return *this;
    }
    friend BigFloat operator+(BigFloat a, const BigFloat &b)
    {
        return a += b;
    }
    friend BigFloat operator-(BigFloat a, const BigFloat &b)
    {
        return a -= b;
    }
    friend BigFloat operator*(BigFloat a, const BigFloat &b)
    {
        return a *= b;
    }
    friend BigFloat operator/(BigFloat a, const BigFloat &b)
    {
        return a /= b;
    }
    friend BigFloat operator*(BigFloat a, long s)
    {
        return a *= s;
    }
    friend BigFloat operator*(long s, BigFloat a)
    {
        return a *= s;
    }
    friend BigFloat operator/(BigFloat a, long s)
    {
        return a /= s;
    }
    BigFloat operator-() const
    {
        BigFloat r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat &a, const BigFloat &b)
    {
        return mpfr_less_p(a.v_, b.v_) != 0;
    }
    friend bool operator>(const BigFloat &a, const BigFloat &b)
    {
        return b < a;
    }
    friend bool operator<=(const BigFloat &a, const BigFloat &b)
    {
        return mpfr_lessequal_p(a.v_, b.v_) != 0;
    }
    friend bool operator>=(const BigFloat &a, const BigFloat &b)
    {
        return b <= a;
    }
    friend bool operator==(const BigFloat &a, const BigFloat &b)
    {
        return mpfr_equal_p(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigFloat &a, const BigFloat &b)
    {
        return !(a == b);
    }

    bool is_zero() const
    {
        return mpfr_zero_p(v_) != 0;
    }
    int sign() const
    {
        return mpfr_sgn(v_);
    }
    double to_double() const
    {
        return mpfr_get_d(v_, MPFR_RNDN);
    }
    // Binary exponent e with |x| in [2^(e-1), 2^e); very negative for zero.
    long exponent() const
    {
        return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_));
    }
    BigFloat pow_ui(unsigned long e) const
    {
        BigFloat r(precision());
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    BigInt round() const
    {
        BigInt r;
        mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
        return r;
    }
    std::string to_string(int digits = 20) const
    {
        char *buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }
    // Fixed-point rendering with the given number of fractional digits.
    std::string to_fixed(int decimals) const
    {
        char *buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rf", decimals, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const BigFloat &a)
    {
        return os << a.to_string();
    }

private:
    void widen(const BigFloat &o)
    {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
            mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
        }
    }

    mpfr_t v_;
};

namespace detail
{

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
BigFloat unary(const BigFloat &x)
{
    BigFloat r(x.precision());
    F(r.get(), x.get(), MPFR_RNDN);
    return r;
}

} // namespace detail

inline BigFloat abs(const BigFloat &x)
{
    return detail::unary<mpfr_abs>(x);
}
inline BigFloat sqrt(const BigFloat &x)
{
    return detail::unary<mpfr_sqrt>(x);
}
inline BigFloat exp(const BigFloat &x)
{
    return detail::unary<mpfr_exp>(x);
}
inline BigFloat log(const BigFloat &x)
{
    return detail::unary<mpfr_log>(x);
}
inline BigFloat cos(const BigFloat &x)
{
    return detail::unary<mpfr_cos>(x);
}
inline BigFloat sin(const BigFloat &x)
{
    return detail::unary<mpfr_sin>(x);
}
inline BigFloat atan2(const BigFloat &y, const BigFloat &x)
{
    BigFloat r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

inline bool is_zero(const BigFloat &x)
{
    return x.is_zero();
}

// Nearest integer to x, provided x lies within tol of it and the working
// precision still resolves units (ulp(x) < tol). Otherwise precision_error.
inline BigInt round_to_integer(const BigFloat &x, const BigFloat &tol)
{
    const BigInt n = x.round();
    BigFloat dist = abs(x - BigFloat(n, x.precision()));
    if (!(dist < tol)) {
        throw precision_error("value " + x.to_string(30) + " is not within tolerance of an integer");
    }
    if (!x.is_zero()) {
        const long ulp_exp = x.exponent() - static_cast<long>(x.precision());
        if (!(BigFloat::pow2(ulp_exp, 64) < tol)) {
            throw precision_error("working precision too low to resolve integer " + n.get_str());
        }
    }
    return n;
}

class BigComplex
{
public:
    explicit BigComplex(mpfr_prec_t bits = 64) : re_(bits), im_(bits) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(const BigFloat &re) : re_(re), im_(re.precision()) {}

    const BigFloat &real() const
    {
        return re_;
    }
    const BigFloat &imag() const
    {
        return im_;
    }
    mpfr_prec_t precision() const
    {
        return std::max(re_.precision(), im_.precision());
    }

    // exp(i*theta).
    static BigComplex unit(const BigFloat &theta)
    {
        BigFloat s(theta.precision()), c(theta.precision());
        mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
        return BigComplex(std::move(c), std::move(s));
    }
    // exp(2*pi*i*j/n).
    static BigComplex root_of_unity(long j, long n, mpfr_prec_t bits)
    {
        BigFloat theta = BigFloat::pi(bits + 16) * (2 * j) / n;
        BigComplex z = unit(theta);
        BigFloat re(bits), im(bits);
        mpfr_set(re.get(), z.re_.get(), MPFR_RNDN);
        mpfr_set(im.get(), z.im_.get(), MPFR_RNDN);
        return BigComplex(std::move(re), std::move(im));
    }

    BigComplex &operator+=(const BigComplex &o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    BigComplex &operator-=(const BigComplex &o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    BigComplex &operator*=(const BigComplex &o)
    {
        BigFloat r = re_ * o.re_ - im_ * o.im_;
        BigFloat i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    BigComplex &operator/=(const BigComplex &o)
    {
        const BigFloat den = o.re_ * o.re_ + o.im_ * o.im_;
        BigFloat r = (re_ * o.re_ + im_ * o.im_) / den;
        BigFloat i = (im_ * o.re_ - re_ * o.im_) / den;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    BigComplex &operator*=(long s)
    {
        re_ *= s;
        im_ *= s;
        return *this;
    }
    BigComplex &operator*=(const BigFloat &s)
    {
        re_ *= s;
        im_ *= s;
        return *this;
    }
    friend BigComplex operator+(BigComplex a, const BigComplex &b)
    {
        return a += b;
    }
    friend BigComplex operator-(BigComplex a, const BigComplex &b)
    {
        return a -= b;
    }
    friend BigComplex operator*(BigComplex a, const BigComplex &b)
    {
        return a *= b;
    }
    friend BigComplex operator/(BigComplex a, const BigComplex &b)
    {
        return a /= b;
    }
    friend BigComplex operator*(BigComplex a, long s)
    {
        return a *= s;
    }
    friend BigComplex operator*(long s, BigComplex a)
    {
        return a *= s;
    }
    friend BigComplex operator*(BigComplex a, const BigFloat &s)
    {
        return a *= s;
    }
    BigComplex operator-() const
    {
        return BigComplex(-re_, -im_);
    }

    BigComplex conj() const
    {
        return BigComplex(re_, -im_);
    }
    BigFloat norm() const
    {
        return re_ * re_ + im_ * im_;
    }
    BigFloat abs() const
    {
        return ccr::sqrt(norm());
    }
    BigComplex pow(unsigned long e) const
    {
        BigComplex r(BigFloat(1L, precision()), BigFloat(precision()));
        BigComplex b(*this);
        while (e != 0) {
            if (e & 1u) {
                r *= b;
            }
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string(int digits = 20) const
    {
        std::string s = re_.to_string(digits);
        if (im_.sign() < 0) {
            s += " - " + (-im_).to_string(digits) + "i";
        } else {
            s += " + " + im_.to_string(digits) + "i";
        }
        return s;
    }

private:
    BigFloat re_;
    BigFloat im_;
};

inline BigComplex exp(const BigComplex &z)
{
    BigComplex u = BigComplex::unit(z.imag());
    return u * exp(z.real());
}

inline bool is_zero(const BigComplex &z)
{
    return z.real().is_zero() && z.imag().is_zero();
}

} // namespace ccr

#endif
