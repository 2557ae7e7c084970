#ifndef CCR_ELKIES_HPP
#define CCR_ELKIES_HPP

#include <array>
#include <utility>
#include <vector>

#include <ccr/bigint.hpp>

namespace ccr
{

// Codomain (A*, B*) of the normalized odd-degree isogeny whose kernel has
// the given affine abscissas (one per pair +-Q).
template <class Ring>
std::pair<typename Ring::element, typename Ring::element>
velu_codomain(const Ring &ring, const std::vector<typename Ring::element> &xs, const typename Ring::element &a,
              const typename Ring::element &b)
{
    auto k = [&](long v) { return ring.from_integer(BigInt(v)); };
    auto t = ring.zero(), w = ring.zero();
    for (const auto &x : xs) {
        const auto x2 = x * x;
        t += k(6) * x2 + k(2) * a;
        w += k(10) * x2 * x + k(6) * a * x + k(4) * b;
    }
    return {a - k(5) * t, b - k(7) * w};
}

// A - A* = 5(6 s2 + 2A s0) and B - B* = 7(10 s3 + 6A s1 + 4B s0), where
// s_k are the power sums of the kernel abscissas.
template <class Ring>
bool verify_elkies(const Ring &ring, const std::array<typename Ring::element, 4> &s, const typename Ring::element &a,
                   const typename Ring::element &b, const typename Ring::element &a_star,
                   const typename Ring::element &b_star)
{
    auto k = [&](long v) { return ring.from_integer(BigInt(v)); };
    const auto da = a - a_star - k(5) * (k(6) * s[2] + k(2) * a * s[0]);
    const auto db = b - b_star - k(7) * (k(10) * s[3] + k(6) * a * s[1] + k(4) * b * s[0]);
    return ring.is_zero(da) && ring.is_zero(db);
}

} // namespace ccr

#endif
