#ifndef CCR_CRT_HPP
#define CCR_CRT_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include <ccr/bigint.hpp>

namespace ccr
{

// Incremental Chinese remaindering. Moduli must be pairwise coprime.
class CrtAccumulator
{
public:
    void add(std::uint64_t residue, std::uint64_t modulus)
    {
        if (modulus < 2) {
            throw std::invalid_argument("CRT modulus must be at least 2");
        }
        if (!seen_.insert(modulus).second) {
            throw std::invalid_argument("duplicate CRT modulus " + std::to_string(modulus));
        }
        const BigInt p = from_u64(modulus);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), m_.get_mpz_t(), p.get_mpz_t());
        if (g != 1) {
            throw std::invalid_argument("CRT moduli are not coprime");
        }
        // x' = x + m * ((r - x) * m^-1 mod p)
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), m_.get_mpz_t(), p.get_mpz_t());
        BigInt t = (from_u64(residue % modulus) - x_) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        x_ += m_ * t;
        m_ *= p;
    }

    const BigInt &modulus() const
    {
        return m_;
    }
    // Representative in [0, M).
    const BigInt &value() const
    {
        return x_;
    }
    // Representative in (-M/2, M/2].
    BigInt symmetric() const
    {
        BigInt half = m_ / 2;
        if (x_ > half) {
            return BigInt(x_ - m_);
        }
        return x_;
    }

private:
    BigInt x_ = 0;
    BigInt m_ = 1;
    std::set<std::uint64_t> seen_;
};

// Unique symmetric representative congruent to every residue.
inline BigInt crt_combine(const std::vector<std::uint64_t> &residues, const std::vector<std::uint64_t> &moduli)
{
    if (residues.size() != moduli.size()) {
        throw std::invalid_argument("residue and modulus counts differ");
    }
    CrtAccumulator acc;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        acc.add(residues[i], moduli[i]);
    }
    return acc.symmetric();
}

} // namespace ccr

#endif
