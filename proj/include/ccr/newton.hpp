#ifndef CCR_NEWTON_HPP
#define CCR_NEWTON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <ccr/bigint.hpp>

namespace ccr
{

// Given power sums p[0] = p_1, ..., p[d-1] = p_d of d roots, returns c with
// prod (X - x_i) = sum_k c[k] X^(d-k), c[0] = 1.
template <class Ring>
std::vector<typename Ring::element> newton_to_coeffs(const Ring &ring, const std::vector<typename Ring::element> &p,
                                                     int d)
{
    using E = typename Ring::element;
    if (d < 0 || static_cast<std::size_t>(d) > p.size()) {
        throw std::invalid_argument("need d power sums for degree d");
    }
    const std::uint64_t ch = ring.characteristic();
    if (ch != 0 && ch <= static_cast<std::uint64_t>(d)) {
        throw std::invalid_argument("characteristic " + std::to_string(ch) + " too small for degree " +
                                    std::to_string(d));
    }
    // e_k = (1/k) sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i
    std::vector<E> e(static_cast<std::size_t>(d) + 1, ring.zero());
    e[0] = ring.one();
    for (int k = 1; k <= d; ++k) {
        E acc = ring.zero();
        for (int i = 1; i <= k; ++i) {
            E t = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i - 1)];
            if (i % 2 == 1) {
                acc += t;
            } else {
                acc -= t;
            }
        }
        e[static_cast<std::size_t>(k)] = ring.div_int(acc, k);
    }
    for (int k = 1; k <= d; k += 2) {
        e[static_cast<std::size_t>(k)] = E(-e[static_cast<std::size_t>(k)]);
    }
    return e;
}

// Inverse direction: power sums p_1..p_m of the roots of the monic
// polynomial sum_k c[k] X^(d-k).
template <class Ring>
std::vector<typename Ring::element> coeffs_to_powersums(const Ring &ring, const std::vector<typename Ring::element> &c,
                                                        int m)
{
    using E = typename Ring::element;
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<E> p(static_cast<std::size_t>(m), ring.zero());
    for (int k = 1; k <= m; ++k) {
        // p_k = -k c_k - sum_{i=1}^{k-1} c_i p_{k-i}, with c_i = 0 for i > d
        E acc = ring.zero();
        if (k <= d) {
            acc -= ring.from_integer(BigInt(k)) * c[static_cast<std::size_t>(k)];
        }
        for (int i = 1; i < k && i <= d; ++i) {
            acc -= c[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i - 1)];
        }
        p[static_cast<std::size_t>(k - 1)] = acc;
    }
    return p;
}

} // namespace ccr

#endif
