#ifndef CCR_BIGINT_HPP
#define CCR_BIGINT_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ccr
{

using BigInt = mpz_class;
using BigRat = mpq_class;

inline bool is_zero(const BigInt &a)
{
    return sgn(a) == 0;
}

inline bool is_zero(const BigRat &a)
{
    return sgn(a) == 0;
}

// Number of bits of |a|; zero has bit length 0.
inline std::size_t bit_length(const BigInt &a)
{
    if (sgn(a) == 0) {
        return 0;
    }
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline BigRat make_rat(const BigInt &num, const BigInt &den = 1)
{
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const BigRat &a)
{
    return a.get_den() == 1;
}

// "n" or "n/d".
inline std::string to_string(const BigRat &a)
{
    if (is_integer(a)) {
        return a.get_num().get_str();
    }
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline std::string to_string(const BigInt &a)
{
    return a.get_str();
}

// Parses "n" or "n/d" with optional leading sign; throws std::invalid_argument.
inline BigRat parse_rational(const std::string &text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }
    const auto slash = text.find('/');
    BigInt num, den(1);
    auto parse_int = [](const std::string &s, BigInt &out) {
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) {
            throw std::invalid_argument("malformed integer '" + s + "'");
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument("malformed integer '" + s + "'");
            }
        }
        out.set_str(s[0] == '+' ? s.substr(1) : s, 10);
    };
    if (slash == std::string::npos) {
        parse_int(text, num);
    } else {
        parse_int(text.substr(0, slash), num);
        parse_int(text.substr(slash + 1), den);
        if (sgn(den) <= 0) {
            throw std::invalid_argument("denominator must be positive in '" + text + "'");
        }
    }
    return make_rat(num, den);
}

inline BigInt pow_int(const BigInt &base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Euclidean remainder in [0, m).
inline std::uint64_t mod_u64(const BigInt &a, std::uint64_t m)
{
    BigInt r;
    BigInt mm;
    mpz_import(mm.get_mpz_t(), 1, -1, sizeof(m), 0, 0, &m);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

inline BigInt from_u64(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

} // namespace ccr

#endif
