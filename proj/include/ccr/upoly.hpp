#ifndef CCR_UPOLY_HPP
#define CCR_UPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <ccr/rings.hpp>

namespace ccr
{

// Dense univariate polynomials over a field descriptor; c[i] is the
// coefficient of x^i and the top coefficient is nonzero (empty for 0).
template <class Field>
using UPoly = std::vector<typename Field::element>;

template <class Field>
void upoly_trim(const Field &f, UPoly<Field> &a)
{
    while (!a.empty() && f.is_zero(a.back())) {
        a.pop_back();
    }
}

template <class Field>
long upoly_degree(const UPoly<Field> &a)
{
    return static_cast<long>(a.size()) - 1;
}

template <class Field>
UPoly<Field> upoly_add(const Field &f, UPoly<Field> a, const UPoly<Field> &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), f.zero());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
    }
    upoly_trim(f, a);
    return a;
}

template <class Field>
UPoly<Field> upoly_sub(const Field &f, UPoly<Field> a, const UPoly<Field> &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), f.zero());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    upoly_trim(f, a);
    return a;
}

template <class Field>
UPoly<Field> upoly_scale(const Field &f, UPoly<Field> a, const typename Field::element &s)
{
    for (auto &x : a) {
        x = s * x;
    }
    upoly_trim(f, a);
    return a;
}

template <class Field>
UPoly<Field> upoly_mul(const Field &f, const UPoly<Field> &a, const UPoly<Field> &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    UPoly<Field> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    upoly_trim(f, r);
    return r;
}

// Quotient and remainder of a by b != 0.
template <class Field>
std::pair<UPoly<Field>, UPoly<Field>> upoly_divmod(const Field &f, UPoly<Field> a, const UPoly<Field> &b)
{
    if (b.empty()) {
        throw std::domain_error("polynomial division by zero");
    }
    upoly_trim(f, a);
    if (a.size() < b.size()) {
        return {{}, a};
    }
    const auto inv = f.inverse(b.back());
    UPoly<Field> q(a.size() - b.size() + 1, f.zero());
    for (std::size_t i = a.size() - 1;; --i) {
        const auto c = a[i] * inv;
        q[i - (b.size() - 1)] = c;
        if (!f.is_zero(c)) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[i - (b.size() - 1) + j] -= c * b[j];
            }
        }
        if (i == b.size() - 1) {
            break;
        }
    }
    a.resize(b.size() - 1);
    upoly_trim(f, a);
    upoly_trim(f, q);
    return {q, a};
}

template <class Field>
UPoly<Field> upoly_mod(const Field &f, const UPoly<Field> &a, const UPoly<Field> &b)
{
    return upoly_divmod(f, a, b).second;
}

template <class Field>
UPoly<Field> upoly_monic(const Field &f, UPoly<Field> a)
{
    if (a.empty()) {
        return a;
    }
    const auto inv = f.inverse(a.back());
    return upoly_scale(f, std::move(a), inv);
}

template <class Field>
UPoly<Field> upoly_gcd(const Field &f, UPoly<Field> a, UPoly<Field> b)
{
    upoly_trim(f, a);
    upoly_trim(f, b);
    while (!b.empty()) {
        auto r = upoly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(f, std::move(a));
}

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
template <class Field>
UPoly<Field> upoly_inverse_mod(const Field &f, const UPoly<Field> &a, const UPoly<Field> &m)
{
    UPoly<Field> r0 = m, r1 = upoly_mod(f, a, m);
    UPoly<Field> s0, s1{f.one()};
    while (!r1.empty()) {
        auto [q, r] = upoly_divmod(f, r0, r1);
        auto s = upoly_sub(f, s0, upoly_mul(f, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) {
        throw std::domain_error("polynomial is not invertible modulo the given modulus");
    }
    return upoly_mod(f, upoly_scale(f, s0, f.inverse(r0[0])), m);
}

template <class Field>
UPoly<Field> upoly_mulmod(const Field &f, const UPoly<Field> &a, const UPoly<Field> &b, const UPoly<Field> &m)
{
    return upoly_mod(f, upoly_mul(f, a, b), m);
}

template <class Field, class Int>
UPoly<Field> upoly_powmod(const Field &f, UPoly<Field> base, Int e, const UPoly<Field> &m)
{
    UPoly<Field> r = upoly_mod(f, UPoly<Field>{f.one()}, m);
    base = upoly_mod(f, base, m);
    while (e > 0) {
        if (e % 2 != 0) {
            r = upoly_mulmod(f, r, base, m);
        }
        e /= 2;
        if (e > 0) {
            base = upoly_mulmod(f, base, base, m);
        }
    }
    return r;
}

template <class Field>
typename Field::element upoly_eval(const Field &f, const UPoly<Field> &a, const typename Field::element &x)
{
    auto acc = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) {
        acc = acc * x + a[i];
    }
    return acc;
}

template <class Field>
UPoly<Field> upoly_derivative(const Field &f, const UPoly<Field> &a)
{
    UPoly<Field> d;
    for (std::size_t i = 1; i < a.size(); ++i) {
        d.push_back(f.from_integer(BigInt(static_cast<unsigned long>(i))) * a[i]);
    }
    upoly_trim(f, d);
    return d;
}

// Trace of multiplication by a on F[x]/(m), m monic.
template <class Field>
typename Field::element upoly_trace_mod(const Field &f, const UPoly<Field> &a, const UPoly<Field> &m)
{
    const std::size_t d = m.size() - 1;
    auto tr = f.zero();
    UPoly<Field> xi = upoly_mod(f, a, m);
    for (std::size_t i = 0; i < d; ++i) {
        if (i < xi.size()) {
            tr += xi[i];
        }
        xi.insert(xi.begin(), f.zero());
        xi = upoly_mod(f, xi, m);
    }
    return tr;
}

// All roots in GF(p) of a, which must split into distinct linear factors
// (checked), by equal-degree splitting with random shifts.
template <class Rng>
std::vector<FpElem> upoly_roots_split(const PrimeField &f, const UPoly<PrimeField> &a, Rng &rng)
{
    const std::uint64_t p = f.p;
    const UPoly<PrimeField> x{f.zero(), f.one()};
    const auto am = upoly_monic(f, a);
    if (am.size() > 1) {
        const auto xp = upoly_powmod(f, x, p, am);
        if (!upoly_sub(f, xp, x).empty()) {
            throw std::domain_error("polynomial does not split into distinct linear factors");
        }
    }
    std::vector<FpElem> roots;
    std::vector<UPoly<PrimeField>> work{am};
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    while (!work.empty()) {
        auto g = std::move(work.back());
        work.pop_back();
        if (g.size() <= 1) {
            continue;
        }
        if (g.size() == 2) {
            roots.push_back(-g[0]);
            continue;
        }
        for (;;) {
            const UPoly<PrimeField> shift{FpElem(dist(rng), p), f.one()};
            auto h = upoly_powmod(f, shift, (p - 1) / 2, g);
            h = upoly_sub(f, h, UPoly<PrimeField>{f.one()});
            auto d = upoly_gcd(f, g, h);
            if (d.size() > 1 && d.size() < g.size()) {
                auto rest = upoly_monic(f, upoly_divmod(f, g, d).first);
                work.push_back(std::move(d));
                work.push_back(std::move(rest));
                break;
            }
        }
    }
    return roots;
}

// Roots in GF(p) of a; multiple roots are reported once.
template <class Rng>
std::vector<FpElem> upoly_roots(const PrimeField &f, const UPoly<PrimeField> &a, Rng &rng)
{
    const std::uint64_t p = f.p;
    const UPoly<PrimeField> x{f.zero(), f.one()};
    const auto m = upoly_monic(f, a);
    if (m.size() <= 1) {
        return {};
    }
    auto xp = upoly_powmod(f, x, p, m);
    const auto g = upoly_gcd(f, m, upoly_sub(f, xp, x));
    return upoly_roots_split(f, g, rng);
}

} // namespace ccr

#endif
