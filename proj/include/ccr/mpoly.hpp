#ifndef CCR_MPOLY_HPP
#define CCR_MPOLY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include <ccr/rings.hpp>

namespace ccr
{

using Monomial = std::array<int, 3>;

// Sparse polynomial in three variables. Terms are kept in descending
// lexicographic order of exponents and zero coefficients are never stored.
template <class E>
class MPoly
{
public:
    using Terms = std::map<Monomial, E, std::greater<Monomial>>;

    MPoly() = default;
    explicit MPoly(Terms t) : t_(std::move(t))
    {
        prune();
    }
    static MPoly term(const E &c, int i1, int i2, int i3)
    {
        MPoly r;
        if (!ccr::is_zero(c)) {
            r.t_.emplace(Monomial{i1, i2, i3}, c);
        }
        return r;
    }

    const Terms &terms() const
    {
        return t_;
    }
    bool is_zero() const
    {
        return t_.empty();
    }
    std::size_t size() const
    {
        return t_.size();
    }
    // Coefficient of the monomial, or nullptr when absent.
    const E *find(int i1, int i2, int i3) const
    {
        auto it = t_.find(Monomial{i1, i2, i3});
        return it == t_.end() ? nullptr : &it->second;
    }
    void add_term(const Monomial &m, const E &c)
    {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (!ccr::is_zero(c)) {
                t_.emplace(m, c);
            }
            return;
        }
        it->second += c;
        if (ccr::is_zero(it->second)) {
            t_.erase(it);
        }
    }

    MPoly &operator+=(const MPoly &o)
    {
        for (const auto &[m, c] : o.t_) {
            add_term(m, c);
        }
        return *this;
    }
    MPoly &operator-=(const MPoly &o)
    {
        for (const auto &[m, c] : o.t_) {
            add_term(m, E(-c));
        }
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly &b)
    {
        return a += b;
    }
    friend MPoly operator-(MPoly a, const MPoly &b)
    {
        return a -= b;
    }
    friend MPoly operator*(const MPoly &a, const MPoly &b)
    {
        std::unordered_map<std::uint64_t, E> acc;
        acc.reserve(a.t_.size() * b.t_.size());
        for (const auto &[ma, ca] : a.t_) {
            for (const auto &[mb, cb] : b.t_) {
                const std::uint64_t key = pack(Monomial{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]});
                auto it = acc.find(key);
                if (it == acc.end()) {
                    acc.emplace(key, E(ca * cb));
                } else {
                    it->second += ca * cb;
                }
            }
        }
        Terms t;
        for (auto &[k, c] : acc) {
            if (!ccr::is_zero(c)) {
                t.emplace(unpack(k), std::move(c));
            }
        }
        MPoly r;
        r.t_ = std::move(t);
        return r;
    }
    MPoly &operator*=(const MPoly &o)
    {
        *this = *this * o;
        return *this;
    }
    friend MPoly operator*(const E &s, MPoly a)
    {
        for (auto &kv : a.t_) {
            kv.second = E(s * kv.second);
        }
        a.prune();
        return a;
    }
    MPoly operator-() const
    {
        MPoly r(*this);
        for (auto &kv : r.t_) {
            kv.second = E(-kv.second);
        }
        return r;
    }
    friend bool operator==(const MPoly &a, const MPoly &b)
    {
        return a.t_ == b.t_;
    }
    friend bool operator!=(const MPoly &a, const MPoly &b)
    {
        return !(a == b);
    }

    // Coefficientwise map; zero images are dropped.
    template <class F>
    auto map(F f) const
    {
        using E2 = decltype(f(std::declval<const E &>()));
        typename MPoly<E2>::Terms out;
        for (const auto &[m, c] : t_) {
            E2 v = f(c);
            if (!ccr::is_zero(v)) {
                out.emplace(m, std::move(v));
            }
        }
        return MPoly<E2>(std::move(out));
    }

    // Human-readable rendering with the given variable names.
    std::string to_string(const std::array<const char *, 3> &vars = {"X", "Y", "Z"}) const
    {
        if (t_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : t_) {
            os << (first ? "" : " + ") << "(" << c << ")";
            for (int v = 0; v < 3; ++v) {
                if (m[v] == 1) {
                    os << "*" << vars[v];
                } else if (m[v] > 1) {
                    os << "*" << vars[v] << "^" << m[v];
                }
            }
            first = false;
        }
        return os.str();
    }

private:
    static std::uint64_t pack(const Monomial &m)
    {
        return (static_cast<std::uint64_t>(m[0]) << 42) | (static_cast<std::uint64_t>(m[1]) << 21) |
               static_cast<std::uint64_t>(m[2]);
    }
    static Monomial unpack(std::uint64_t k)
    {
        constexpr std::uint64_t mask = (1u << 21) - 1;
        return Monomial{static_cast<int>(k >> 42), static_cast<int>((k >> 21) & mask), static_cast<int>(k & mask)};
    }

    void prune()
    {
        for (auto it = t_.begin(); it != t_.end();) {
            if (ccr::is_zero(it->second)) {
                it = t_.erase(it);
            } else {
                ++it;
            }
        }
    }

    Terms t_;
};

template <class E>
bool is_zero(const MPoly<E> &p)
{
    return p.is_zero();
}

template <class E>
std::ostream &operator<<(std::ostream &os, const MPoly<E> &p)
{
    return os << p.to_string();
}

// Polynomial ring over a field descriptor, usable by generic algorithms that
// only need ring operations and division by small integers.
template <class Field>
struct PolyRing
{
    using element = MPoly<typename Field::element>;
    static constexpr bool is_field = false;
    static constexpr bool is_exact = Field::is_exact;

    Field field;

    PolyRing() = default;
    explicit PolyRing(Field f) : field(std::move(f)) {}

    element zero() const
    {
        return element();
    }
    element one() const
    {
        return element::term(field.one(), 0, 0, 0);
    }
    element from_integer(const BigInt &n) const
    {
        return element::term(field.from_integer(n), 0, 0, 0);
    }
    element constant(const typename Field::element &c) const
    {
        return element::term(c, 0, 0, 0);
    }
    std::uint64_t characteristic() const
    {
        return field.characteristic();
    }
    bool is_zero(const element &a) const
    {
        return a.is_zero();
    }
    element div_int(const element &a, long k) const
    {
        return a.map([&](const auto &c) { return field.div_int(c, k); });
    }
};

} // namespace ccr

#endif
