#ifndef CCR_FLOATEVAL_HPP
#define CCR_FLOATEVAL_HPP

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <ccr/bigfloat.hpp>
#include <ccr/errors.hpp>

namespace ccr
{

// Number of terms N (n = 0..N-1) of the pentagonal series for T_{2k} such
// that the alternating-series bound
//   ((6N-1)^{2k} + (6N+1)^{2k}) |q|^{N(3N-1)/2}
// drops below 2^(-bits-8).
inline long truncation_order(double log2_absq, long bits, int kmax = 3)
{
    if (!(log2_absq < 0)) {
        throw std::invalid_argument("truncation_order needs |q| < 1");
    }
    const double target = -static_cast<double>(bits) - 8;
    for (long n = 1;; ++n) {
        const double e = static_cast<double>(n) * (3.0 * n - 1) / 2;
        const double lo = 2.0 * kmax * std::log2(6.0 * n - 1), hi = 2.0 * kmax * std::log2(6.0 * n + 1);
        const double lsum = hi + std::log2(1 + std::exp2(lo - hi));
        if (lsum + e * log2_absq < target) {
            return n;
        }
    }
}

inline long truncation_order(const BigFloat &absq, long bits, int kmax = 3)
{
    if (absq.sign() < 0 || !(absq < BigFloat(1L, 64))) {
        throw std::invalid_argument("truncation_order needs 0 <= |q| < 1");
    }
    if (absq.is_zero()) {
        return 1;
    }
    const double l2 = log(absq).to_double() / std::log(2.0);
    return truncation_order(l2, bits, kmax);
}

// Error bound of the N-term truncation of T_{2k}(q), as a BigFloat.
inline BigFloat truncation_bound(const BigFloat &absq, long n, int k)
{
    const mpfr_prec_t bits = absq.precision();
    const long e = n * (3 * n - 1) / 2;
    BigFloat qe(1L, bits);
    for (long i = 0; i < e; ++i) {
        qe *= absq;
    }
    BigFloat a(1L, bits), b(1L, bits);
    for (int i = 0; i < 2 * k; ++i) {
        a *= 6 * n - 1;
        b *= 6 * n + 1;
    }
    return (a + b) * qe;
}

// Powers of a base point reached through doubling and sums of cached
// exponents, as needed by the pentagonal exponent stream.
template <class T>
class PowerTable
{
public:
    explicit PowerTable(T base)
    {
        q_.emplace(1, std::move(base));
    }

    bool contains(long c) const
    {
        return q_.count(c) != 0;
    }
    std::size_t multiplications() const
    {
        return mults_;
    }
    const std::map<long, T> &powers() const
    {
        return q_;
    }

    const T &find(long c)
    {
        if (auto it = q_.find(c); it != q_.end()) {
            return it->second;
        }
        if (c % 2 == 0) {
            if (auto it = q_.find(c / 2); it != q_.end()) {
                ++mults_;
                return q_.emplace(c, it->second * it->second).first->second;
            }
        }
        for (const auto &[a, qa] : q_) {
            if (a >= c) {
                break;
            }
            if (auto it = q_.find(c - a); it != q_.end()) {
                ++mults_;
                return q_.emplace(c, qa * it->second).first->second;
            }
        }
        for (const auto &[a, qa] : q_) {
            if (2 * a >= c) {
                break;
            }
            if (auto it = q_.find(c - 2 * a); it != q_.end()) {
                mults_ += 2;
                return q_.emplace(c, qa * qa * it->second).first->second;
            }
        }
        throw combination_miss_error("exponent " + std::to_string(c) + " is not 2a, a+b or 2a+b of cached exponents");
    }

private:
    std::map<long, T> q_;
    std::size_t mults_ = 0;
};

// T_{2k}(q) for 0 <= k <= kmax, sharing the powers of q across all k.
// The N-term truncation uses n = 1..N-1; the constant 1 is added last.
inline std::vector<BigComplex> evaluate_many_T(const BigComplex &q, long n_terms, int kmax)
{
    const mpfr_prec_t bits = q.precision();
    std::vector<BigComplex> t(static_cast<std::size_t>(kmax + 1), BigComplex(bits));
    PowerTable<BigComplex> table(q);
    long c = 0;
    for (long n = 1; n < n_terms; ++n) {
        c += 2 * n - 1;
        for (int r = 1; r <= 2; ++r) {
            if (r == 2) {
                c += n;
            }
            BigComplex qp = table.find(c);
            if (n % 2 != 0) {
                qp = -qp;
            }
            const long base = r == 1 ? 6 * n - 1 : 6 * n + 1;
            for (int k = 0; k <= kmax; ++k) {
                t[static_cast<std::size_t>(k)] += qp;
                if (k < kmax) {
                    qp *= base * base;
                }
            }
        }
    }
    const BigComplex one(BigFloat(1L, bits));
    for (auto &v : t) {
        v += one;
    }
    return t;
}

// T[k][j] = T_{2k}(w zeta^j) for 0 <= j < ell, with zeta^e read from xi.
inline std::vector<std::vector<BigComplex>> evaluate_conjugate_values(long ell, const BigComplex &w, long n_terms,
                                                                      const std::vector<BigComplex> &xi, int kmax)
{
    if (static_cast<long>(xi.size()) != ell) {
        throw std::invalid_argument("root-of-unity table has wrong length");
    }
    const mpfr_prec_t bits = w.precision();
    std::vector<std::vector<BigComplex>> t(static_cast<std::size_t>(kmax + 1),
                                           std::vector<BigComplex>(static_cast<std::size_t>(ell), BigComplex(bits)));
    PowerTable<BigComplex> table(w);
    long c = 0;
    for (long n = 1; n < n_terms; ++n) {
        c += 2 * n - 1;
        for (int r = 1; r <= 2; ++r) {
            if (r == 2) {
                c += n;
            }
            BigComplex wp = table.find(c);
            if (n % 2 != 0) {
                wp = -wp;
            }
            const long base = r == 1 ? 6 * n - 1 : 6 * n + 1;
            const long cm = c % ell;
            for (int k = 0; k <= kmax; ++k) {
                auto &row = t[static_cast<std::size_t>(k)];
                row[0] += wp;
                for (long j = 1; j < ell; ++j) {
                    if (cm == 0) {
                        row[static_cast<std::size_t>(j)] += wp;
                    } else {
                        row[static_cast<std::size_t>(j)] += xi[static_cast<std::size_t>((j * cm) % ell)] * wp;
                    }
                }
                if (k < kmax) {
                    wp *= base * base;
                }
            }
        }
    }
    const BigComplex one(BigFloat(1L, bits));
    for (auto &row : t) {
        for (auto &v : row) {
            v += one;
        }
    }
    return t;
}

struct EisensteinValues
{
    BigComplex e2;
    BigComplex e4;
    BigComplex e6;

    BigComplex delta() const
    {
        BigComplex d = e4 * e4 * e4 - e6 * e6;
        d /= BigComplex(BigFloat(1728L, d.precision()));
        return d;
    }
    BigComplex j() const
    {
        return e4 * e4 * e4 / delta();
    }
};

// E2 = T1/T0, E4 = (3 E2^2 - T2/T0)/2, E6 = (T3/T0 - 15 E2^3 + 30 E2 E4)/16.
// Entries beyond the supplied T's are left at zero.
inline EisensteinValues e_values_from_T(const std::vector<BigComplex> &t)
{
    if (t.size() < 2) {
        throw std::invalid_argument("need at least T_0 and T_2");
    }
    if (is_zero(t[0])) {
        throw std::domain_error("T_0 vanishes");
    }
    const mpfr_prec_t bits = t[0].precision();
    EisensteinValues v{BigComplex(bits), BigComplex(bits), BigComplex(bits)};
    v.e2 = t[1] / t[0];
    if (t.size() > 2) {
        v.e4 = (3L * (v.e2 * v.e2) - t[2] / t[0]);
        v.e4 *= BigFloat(0.5, bits);
    }
    if (t.size() > 3) {
        v.e6 = t[3] / t[0] - 15L * (v.e2 * v.e2 * v.e2) + 30L * (v.e2 * v.e4);
        v.e6 *= BigFloat(0.0625, bits);
    }
    return v;
}

// q = exp(2 pi i tau) at the given precision.
inline BigComplex q_from_tau(const BigComplex &tau)
{
    const mpfr_prec_t bits = tau.precision();
    const BigComplex two_pi_i(BigFloat(bits), BigFloat::pi(bits) * 2L);
    return exp(two_pi_i * tau);
}

// E2, E4, E6 at tau via the T route with an automatically chosen order.
inline EisensteinValues eisenstein_at(const BigComplex &tau)
{
    const BigComplex q = q_from_tau(tau);
    const long n = truncation_order(q.abs(), static_cast<long>(tau.precision()));
    return e_values_from_T(evaluate_many_T(q, n, 3));
}

struct ThetaValues
{
    BigComplex theta2;
    BigComplex theta3;
    BigComplex theta4;
};

// Jacobi theta constants at q1 = exp(i pi tau), by direct summation over
// |n| < n_terms; q1^(1/4) is taken as exp(i pi tau/4).
inline ThetaValues theta_eval(const BigComplex &tau, long n_terms)
{
    const mpfr_prec_t bits = tau.precision();
    const BigComplex pi_i(BigFloat(bits), BigFloat::pi(bits));
    const BigComplex q1 = exp(pi_i * tau);
    const BigComplex q1_quarter = exp(pi_i * tau * BigFloat(0.25, bits));
    const BigComplex one(BigFloat(1L, bits));
    ThetaValues th{BigComplex(bits), one, one};
    BigComplex s2 = one;
    const BigComplex q2 = q1 * q1;
    BigComplex sq = one, tri = one, odd = q1, even = q2;
    for (long n = 1; n < n_terms; ++n) {
        sq *= odd;
        tri *= even;
        th.theta3 += 2L * sq;
        th.theta4 += (n % 2 != 0 ? -2L : 2L) * sq;
        s2 += tri;
        odd *= q2;
        even *= q2;
    }
    th.theta2 = 2L * q1_quarter * s2;
    return th;
}

// E4 = (a^8+b^8+c^8)/2, E6 = (a^4+b^4)(b^4+c^4)(c^4-a^4)/2, Delta = (abc/2)^8.
struct ThetaEisenstein
{
    BigComplex e4;
    BigComplex e6;
    BigComplex delta;
};

inline ThetaEisenstein e4_e6_from_theta(const ThetaValues &th)
{
    const mpfr_prec_t bits = th.theta3.precision();
    const BigComplex a4 = th.theta2.pow(4), b4 = th.theta3.pow(4), c4 = th.theta4.pow(4);
    const BigFloat half(0.5, bits);
    BigComplex e4 = (a4 * a4 + b4 * b4 + c4 * c4) * half;
    BigComplex e6 = (a4 + b4) * (b4 + c4) * (c4 - a4) * half;
    BigComplex delta = (th.theta2 * th.theta3 * th.theta4 * half).pow(8);
    return {std::move(e4), std::move(e6), std::move(delta)};
}

// Ramanujan multiplier F_ell(tau) = E2(tau) - ell E2(ell tau).
inline BigComplex multiplier_at(long ell, const BigComplex &tau)
{
    const BigComplex e2 = eisenstein_at(tau).e2;
    const BigComplex e2l = eisenstein_at(tau * ell).e2;
    return e2 - e2l * ell;
}

} // namespace ccr

#endif
