#ifndef CCR_SERIES_HPP
#define CCR_SERIES_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <ccr/rings.hpp>

namespace ccr
{

namespace detail
{

// Inverse of a unit of the ring; integers accept only +1 and -1.
template <class Ring>
typename Ring::element unit_inverse(const Ring &ring, const typename Ring::element &a)
{
    if constexpr (Ring::is_field) {
        return ring.inverse(a);
    } else {
        if (a == ring.one()) {
            return ring.one();
        }
        if (a == typename Ring::element(-ring.one())) {
            return a;
        }
        throw std::domain_error("leading coefficient is not a unit");
    }
}

inline long ceil_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) {
        ++q;
    }
    return q;
}

} // namespace detail

// Truncated Laurent series sum_{n=v}^{N-1} c_n t^n in t = q^(1/e). The order
// N is exclusive: coefficients from N on are unknown.
template <class Ring>
class TruncatedSeries
{
public:
    using element = typename Ring::element;

    TruncatedSeries() = default;
    TruncatedSeries(Ring ring, long order, long start = 0, long exp_den = 1)
        : ring_(std::move(ring)), start_(std::min(start, order)), order_(order), exp_den_(exp_den),
          c_(static_cast<std::size_t>(order - std::min(start, order)), ring_.zero())
    {
    }
    TruncatedSeries(Ring ring, std::vector<element> coeffs, long start = 0, long exp_den = 1)
        : ring_(std::move(ring)), start_(start), order_(start + static_cast<long>(coeffs.size())),
          exp_den_(exp_den), c_(std::move(coeffs))
    {
    }

    static TruncatedSeries constant(const Ring &ring, const element &a, long order)
    {
        TruncatedSeries s(ring, order);
        if (order > 0) {
            s.c_[0] = a;
        }
        return s;
    }
    // The monomial t^k.
    static TruncatedSeries monomial(const Ring &ring, long k, long order, long exp_den = 1)
    {
        TruncatedSeries s(ring, order, k, exp_den);
        if (k < order) {
            s.c_[0] = ring.one();
        }
        return s;
    }

    const Ring &ring() const
    {
        return ring_;
    }
    long start() const
    {
        return start_;
    }
    long order() const
    {
        return order_;
    }
    long exp_den() const
    {
        return exp_den_;
    }

    element coeff(long n) const
    {
        if (n >= order_) {
            throw std::out_of_range("coefficient " + std::to_string(n) + " beyond truncation order " +
                                    std::to_string(order_));
        }
        if (n < start_) {
            return ring_.zero();
        }
        return c_[static_cast<std::size_t>(n - start_)];
    }
    void set_coeff(long n, const element &a)
    {
        if (n >= order_) {
            throw std::out_of_range("coefficient beyond truncation order");
        }
        if (n < start_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(start_ - n), ring_.zero());
            start_ = n;
        }
        c_[static_cast<std::size_t>(n - start_)] = a;
    }
    void add_to_coeff(long n, const element &a)
    {
        if (n >= order_) {
            return;
        }
        if (n < start_) {
            set_coeff(n, a);
            return;
        }
        c_[static_cast<std::size_t>(n - start_)] += a;
    }

    // Index of the first nonzero coefficient, or order() if none is known.
    long valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!ring_.is_zero(c_[i])) {
                return start_ + static_cast<long>(i);
            }
        }
        return order_;
    }
    bool is_zero() const
    {
        return valuation() == order_;
    }

    // Same coefficients read as a series in q^(1/e).
    TruncatedSeries with_exp_den(long e) const
    {
        TruncatedSeries r(*this);
        r.exp_den_ = e;
        return r;
    }

    TruncatedSeries truncate(long order) const
    {
        TruncatedSeries r(*this);
        if (order < r.order_) {
            r.order_ = order;
            if (r.start_ > order) {
                r.start_ = order;
            }
            r.c_.resize(static_cast<std::size_t>(order - r.start_));
        }
        return r;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        combine(o, true);
        return *this;
    }
    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        combine(o, false);
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a -= b;
    }
    TruncatedSeries operator-() const
    {
        TruncatedSeries r(*this);
        for (auto &x : r.c_) {
            x = element(-x);
        }
        return r;
    }
    friend TruncatedSeries operator*(const element &s, TruncatedSeries a)
    {
        for (auto &x : a.c_) {
            x = element(s * x);
        }
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        check_den(a, b);
        const long sa = a.start_, sb = b.start_;
        const long start = sa + sb;
        const long order = std::min(a.order_ + sb, b.order_ + sa);
        TruncatedSeries r(a.ring_, order, start, a.exp_den_);
        const long len = order - r.start_;
        for (std::size_t i = 0; i < a.c_.size() && static_cast<long>(i) < len; ++i) {
            if (a.ring_.is_zero(a.c_[i])) {
                continue;
            }
            const std::size_t jmax = std::min(b.c_.size(), static_cast<std::size_t>(len - static_cast<long>(i)));
            for (std::size_t j = 0; j < jmax; ++j) {
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    TruncatedSeries &operator*=(const TruncatedSeries &o)
    {
        *this = *this * o;
        return *this;
    }

    // Multiplicative inverse; the leading coefficient must be a unit.
    TruncatedSeries inverse() const
    {
        const long v = valuation();
        if (v == order_) {
            throw std::domain_error("inverse of a series with no known nonzero coefficient");
        }
        const long len = order_ - v;
        const element lead_inv = detail::unit_inverse(ring_, coeff(v));
        std::vector<element> a(static_cast<std::size_t>(len), ring_.zero());
        for (long i = 0; i < len; ++i) {
            a[static_cast<std::size_t>(i)] = coeff(v + i);
        }
        std::vector<element> b(static_cast<std::size_t>(len), ring_.zero());
        b[0] = lead_inv;
        for (long n = 1; n < len; ++n) {
            element acc = ring_.zero();
            for (long i = 1; i <= n; ++i) {
                acc += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(n - i)];
            }
            b[static_cast<std::size_t>(n)] = element(-(acc * lead_inv));
        }
        return TruncatedSeries(ring_, std::move(b), -v, exp_den_);
    }

    TruncatedSeries pow(unsigned long e) const
    {
        if (e == 0) {
            TruncatedSeries one = constant(ring_, ring_.one(), order_ - start_);
            one.exp_den_ = exp_den_;
            return one;
        }
        TruncatedSeries result;
        TruncatedSeries base(*this);
        bool first = true;
        while (e != 0) {
            if (e & 1u) {
                result = first ? base : result * base;
                first = false;
            }
            e >>= 1;
            if (e != 0) {
                base = base * base;
            }
        }
        return result;
    }

    // f(t) -> f(t^m).
    TruncatedSeries substitute_power(long m) const
    {
        TruncatedSeries r(ring_, order_ * m, start_ * m, exp_den_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!ring_.is_zero(c_[i])) {
                r.c_[i * static_cast<std::size_t>(m)] = c_[i];
            }
        }
        return r;
    }

    // sum_n c_{m n} t^n; a series in t^(1/e) becomes one in t^(m/e).
    TruncatedSeries extract_every(long m) const
    {
        const long start = detail::ceil_div(start_, m);
        const long order = detail::ceil_div(order_, m);
        const long den = exp_den_ % m == 0 ? exp_den_ / m : exp_den_;
        TruncatedSeries r(ring_, order, start, den);
        for (long n = start; n < order; ++n) {
            r.c_[static_cast<std::size_t>(n - start)] = coeff(n * m);
        }
        return r;
    }

    // Coefficientwise map into another ring.
    template <class Ring2, class F>
    TruncatedSeries<Ring2> map(const Ring2 &ring2, F f) const
    {
        std::vector<typename Ring2::element> out;
        out.reserve(c_.size());
        for (const auto &x : c_) {
            out.push_back(f(x));
        }
        return TruncatedSeries<Ring2>(ring2, std::move(out), start_, exp_den_);
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        if (a.order_ != b.order_ || a.exp_den_ != b.exp_den_) {
            return false;
        }
        const long lo = std::min(a.start_, b.start_);
        for (long n = lo; n < a.order_; ++n) {
            if (!(a.coeff(n) == b.coeff(n))) {
                return false;
            }
        }
        return true;
    }
    friend bool operator!=(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return !(a == b);
    }

    // "v:N: c_v c_{v+1} ... c_{N-1}"
    std::string to_string() const
    {
        std::ostringstream os;
        os << start_ << ":" << order_ << ":";
        for (const auto &x : c_) {
            os << " " << x;
        }
        return os.str();
    }

private:
    static void check_den(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        if (a.exp_den_ != b.exp_den_) {
            throw std::invalid_argument("series in different variables (exponent denominators " +
                                        std::to_string(a.exp_den_) + " and " + std::to_string(b.exp_den_) +
                                        ")");
        }
    }

    void combine(const TruncatedSeries &o, bool add)
    {
        check_den(*this, o);
        const long order = std::min(order_, o.order_);
        const long start = std::min(start_, o.start_);
        std::vector<element> out(static_cast<std::size_t>(std::max(0L, order - start)), ring_.zero());
        for (long n = start; n < order; ++n) {
            element x = n >= start_ ? c_[static_cast<std::size_t>(n - start_)] : ring_.zero();
            if (n >= o.start_) {
                if (add) {
                    x += o.c_[static_cast<std::size_t>(n - o.start_)];
                } else {
                    x -= o.c_[static_cast<std::size_t>(n - o.start_)];
                }
            }
            out[static_cast<std::size_t>(n - start)] = std::move(x);
        }
        start_ = std::min(start, order);
        order_ = order;
        c_ = std::move(out);
    }

    Ring ring_{};
    long start_ = 0;
    long order_ = 0;
    long exp_den_ = 1;
    std::vector<element> c_;
};

} // namespace ccr

#endif
