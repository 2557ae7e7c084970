#ifndef CCR_MONOMIALS_HPP
#define CCR_MONOMIALS_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include <ccr/kind.hpp>
#include <ccr/mpoly.hpp>

namespace ccr
{

// Solutions of i1 + 2 i2 + 3 i3 = n in nonnegative integers.
inline long count_N123(long n)
{
    if (n < 0) {
        return 0;
    }
    long c = 0;
    for (long i3 = 0; 3 * i3 <= n; ++i3) {
        c += (n - 3 * i3) / 2 + 1;
    }
    return c;
}

// Solutions of 2 i2 + 3 i3 = n in nonnegative integers.
inline long count_N23(long n)
{
    if (n < 0) {
        return 0;
    }
    long c = 0;
    for (long i3 = 0; 3 * i3 <= n; ++i3) {
        if ((n - 3 * i3) % 2 == 0) {
            ++c;
        }
    }
    return c;
}

// Monomials X^i1 Y^i2 Z^i3 of weight kx*i1 + 2 i2 + 3 i3 = total with i1 <= max_x,
// in canonical (descending lexicographic) order.
inline std::vector<Monomial> weighted_monomials(int kx, long total, long max_x)
{
    std::vector<Monomial> out;
    for (long i1 = std::min(max_x, total / kx); i1 >= 0; --i1) {
        const long rest = total - kx * i1;
        for (long i2 = rest / 2; i2 >= 0; --i2) {
            const long r3 = rest - 2 * i2;
            if (r3 % 3 == 0) {
                out.push_back(Monomial{static_cast<int>(i1), static_cast<int>(i2), static_cast<int>(r3 / 3)});
            }
        }
    }
    return out;
}

// E4^e4 E6^e6 Delta^d; weight 2 e4 + 3 e6 + 6 d in units where E4 has weight 2.
struct EBasisElem
{
    int e4 = 0;
    int e6 = 0;
    int delta = 0;

    friend bool operator==(const EBasisElem &a, const EBasisElem &b)
    {
        return a.e4 == b.e4 && a.e6 == b.e6 && a.delta == b.delta;
    }
};

// Basis of modular forms of weight r whose k-th element has q-valuation k
// and leading coefficient 1. Weight 0 gives {1}; weight 1 has no forms.
inline std::vector<EBasisElem> basis_for_weight(long r)
{
    if (r == 1) {
        throw std::invalid_argument("no basis for weight 1: the corresponding coefficient is 0");
    }
    if (r < 0) {
        throw std::invalid_argument("negative weight");
    }
    std::vector<EBasisElem> out;
    if (r % 2 == 0) {
        const int m = static_cast<int>(r / 2);
        for (int k = 0; 3 * k <= m; ++k) {
            out.push_back({m - 3 * k, 0, k});
        }
    } else {
        const int m = static_cast<int>((r - 3) / 2);
        for (int k = 0; 3 * k <= m; ++k) {
            out.push_back({m - 3 * k, 1, k});
        }
    }
    return out;
}

template <class E>
struct BatchProducts
{
    std::vector<E> values;
    std::size_t multiplications = 0;
    std::size_t naive_multiplications = 0;
};

namespace detail
{

inline std::size_t binary_power_cost(long e)
{
    if (e <= 1) {
        return 0;
    }
    std::size_t bits = 0, ones = 0;
    for (long x = e; x != 0; x >>= 1) {
        ++bits;
        ones += static_cast<std::size_t>(x & 1);
    }
    return bits - 1 + ones - 1;
}

} // namespace detail

// All products prod_v bases[v]^exps[i][v]. Powers of each base are shared
// across the batch: every needed exponent is reached from already computed
// powers by one addition step when possible, else from a shared table of
// repeated squares. `one` is the multiplicative identity.
template <class E>
BatchProducts<E> batch_power_products(const std::vector<E> &bases, const std::vector<std::vector<int>> &exps,
                                      const E &one)
{
    const std::size_t nv = bases.size();
    BatchProducts<E> out;
    std::vector<std::map<int, E>> table(nv);
    std::vector<std::map<int, int>> needed(nv);
    for (const auto &ex : exps) {
        if (ex.size() != nv) {
            throw std::invalid_argument("exponent vector length differs from number of bases");
        }
        std::size_t naive = 0;
        int factors = 0;
        for (std::size_t v = 0; v < nv; ++v) {
            if (ex[v] < 0) {
                throw std::invalid_argument("negative exponent");
            }
            if (ex[v] > 0) {
                needed[v][ex[v]] = 1;
                naive += detail::binary_power_cost(ex[v]);
                ++factors;
            }
        }
        out.naive_multiplications += naive + (factors > 1 ? static_cast<std::size_t>(factors - 1) : 0);
    }
    for (std::size_t v = 0; v < nv; ++v) {
        auto &t = table[v];
        t.emplace(1, bases[v]);
        for (const auto &[e, unused] : needed[v]) {
            (void)unused;
            if (t.count(e) != 0) {
                continue;
            }
            bool done = false;
            for (auto it = t.rbegin(); it != t.rend() && !done; ++it) {
                const int a = it->first;
                if (a < e && t.count(e - a) != 0) {
                    t.emplace(e, E(it->second * t.at(e - a)));
                    ++out.multiplications;
                    done = true;
                }
            }
            if (done) {
                continue;
            }
            // Binary method on top of the largest cached power of two.
            int pw = 1;
            while (2 * pw <= e) {
                if (t.count(2 * pw) == 0) {
                    t.emplace(2 * pw, E(t.at(pw) * t.at(pw)));
                    ++out.multiplications;
                }
                pw *= 2;
            }
            int have = pw;
            E acc = t.at(pw);
            for (int bit = pw / 2; bit >= 1; bit /= 2) {
                if ((e - have) & bit) {
                    acc = E(acc * t.at(bit));
                    ++out.multiplications;
                    have += bit;
                    if (t.count(have) == 0) {
                        t.emplace(have, acc);
                    }
                }
            }
        }
    }
    out.values.reserve(exps.size());
    for (const auto &ex : exps) {
        E prod = one;
        bool first = true;
        for (std::size_t v = 0; v < nv; ++v) {
            if (ex[v] == 0) {
                continue;
            }
            if (first) {
                prod = table[v].at(ex[v]);
                first = false;
            } else {
                prod = E(prod * table[v].at(ex[v]));
                ++out.multiplications;
            }
        }
        out.values.push_back(std::move(prod));
    }
    return out;
}

} // namespace ccr

#endif
