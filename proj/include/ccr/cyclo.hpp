#ifndef CCR_CYCLO_HPP
#define CCR_CYCLO_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <ccr/rings.hpp>

namespace ccr
{

// Element of Base[x]/(1 + x + ... + x^(l-1)), i.e. Base[zeta_l]. Stored as l
// coefficients of 1, x, ..., x^(l-1) and kept reduced so that the top
// coefficient is zero; equality is then coefficientwise.
template <class E>
class CycloElem
{
public:
    CycloElem() = default;
    CycloElem(int ell, const E &zero) : c_(static_cast<std::size_t>(ell), zero) {}

    int ell() const
    {
        return static_cast<int>(c_.size());
    }
    const E &operator[](std::size_t i) const
    {
        return c_[i];
    }
    const std::vector<E> &coeffs() const
    {
        return c_;
    }

    // Adds a * x^k (k taken mod l).
    void add_term(const E &a, long k)
    {
        const long l = ell();
        long r = k % l;
        if (r < 0) {
            r += l;
        }
        c_[static_cast<std::size_t>(r)] += a;
        reduce();
    }

    // True when the element lies in Base (no zeta component).
    bool is_base() const
    {
        for (std::size_t i = 1; i < c_.size(); ++i) {
            if (!is_zero(c_[i])) {
                return false;
            }
        }
        return true;
    }
    const E &base_part() const
    {
        return c_[0];
    }

    CycloElem &operator+=(const CycloElem &o)
    {
        assert(c_.size() == o.c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        return *this;
    }
    CycloElem &operator-=(const CycloElem &o)
    {
        assert(c_.size() == o.c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        return *this;
    }
    CycloElem &operator*=(const CycloElem &o)
    {
        *this = *this * o;
        return *this;
    }
    friend CycloElem operator+(CycloElem a, const CycloElem &b)
    {
        return a += b;
    }
    friend CycloElem operator-(CycloElem a, const CycloElem &b)
    {
        return a -= b;
    }
    friend CycloElem operator*(const CycloElem &a, const CycloElem &b)
    {
        assert(a.c_.size() == b.c_.size());
        const std::size_t l = a.c_.size();
        CycloElem r(static_cast<int>(l), a.c_[0] - a.c_[0]);
        for (std::size_t i = 0; i < l; ++i) {
            if (is_zero(a.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < l; ++j) {
                if (is_zero(b.c_[j])) {
                    continue;
                }
                std::size_t k = i + j;
                if (k >= l) {
                    k -= l;
                }
                r.c_[k] += a.c_[i] * b.c_[j];
            }
        }
        r.reduce();
        return r;
    }
    // Scalar multiplication by a Base element.
    friend CycloElem operator*(const E &s, CycloElem a)
    {
        for (auto &x : a.c_) {
            x = E(s * x);
        }
        return a;
    }
    CycloElem operator-() const
    {
        CycloElem r(*this);
        for (auto &x : r.c_) {
            x = E(-x);
        }
        return r;
    }
    friend bool operator==(const CycloElem &a, const CycloElem &b)
    {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycloElem &a, const CycloElem &b)
    {
        return !(a == b);
    }

private:
    void reduce()
    {
        const std::size_t l = c_.size();
        if (l == 0 || is_zero(c_[l - 1])) {
            return;
        }
        const E top = c_[l - 1];
        for (std::size_t i = 0; i + 1 < l; ++i) {
            c_[i] -= top;
        }
        c_[l - 1] -= top;
    }

    std::vector<E> c_;
};

template <class E>
bool is_zero(const CycloElem<E> &a)
{
    for (const auto &x : a.coeffs()) {
        if (!is_zero(x)) {
            return false;
        }
    }
    return true;
}

template <class Base>
struct CycloRing
{
    using element = CycloElem<typename Base::element>;
    static constexpr bool is_field = false;
    static constexpr bool is_exact = Base::is_exact;

    Base base;
    int ell = 3;

    CycloRing() = default;
    CycloRing(Base b, int l) : base(std::move(b)), ell(l) {}

    element zero() const
    {
        return element(ell, base.zero());
    }
    element one() const
    {
        element r = zero();
        r.add_term(base.one(), 0);
        return r;
    }
    element from_integer(const BigInt &n) const
    {
        element r = zero();
        r.add_term(base.from_integer(n), 0);
        return r;
    }
    element from_base(const typename Base::element &a) const
    {
        element r = zero();
        r.add_term(a, 0);
        return r;
    }
    // zeta^k.
    element zeta(long k) const
    {
        element r = zero();
        r.add_term(base.one(), k);
        return r;
    }
    std::uint64_t characteristic() const
    {
        return base.characteristic();
    }
    bool is_zero(const element &a) const
    {
        return ccr::is_zero(a);
    }
    friend bool operator==(const CycloRing &a, const CycloRing &b)
    {
        return a.base == b.base && a.ell == b.ell;
    }
};

} // namespace ccr

#endif
