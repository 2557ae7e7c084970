#ifndef CCR_DIVPOLY_HPP
#define CCR_DIVPOLY_HPP

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include <ccr/ccr_series.hpp>
#include <ccr/linalg.hpp>
#include <ccr/mpoly.hpp>
#include <ccr/upoly.hpp>

namespace ccr
{

// Polynomials in (X, A, B) reuse the (i1, i2, i3) monomial layout.
using XABPoly = MPoly<BigRat>;

struct DivPoly
{
    long n = 0;
    XABPoly poly;
};

// Degree in X of f_n: (n^2-1)/2 for odd n, (n^2-4)/2 for even n.
inline long divpoly_degree(long n)
{
    if (n < 0) {
        n = -n;
    }
    if (n == 0) {
        return -1;
    }
    return n % 2 != 0 ? (n * n - 1) / 2 : (n * n - 4) / 2;
}

inline XABPoly xab(long c, int x, int a, int b)
{
    return XABPoly::term(BigRat(c), x, a, b);
}

// X^3 + A X + B.
inline XABPoly curve_rhs()
{
    return xab(1, 3, 0, 0) + xab(1, 1, 1, 0) + xab(1, 0, 0, 1);
}

// f_n = psi_n for odd n and psi_n/(2Y) for even n, with Y^2 = X^3 + A X + B.
class DivisionPolynomials
{
public:
    DivisionPolynomials()
    {
        f_[0] = XABPoly();
        f_[1] = xab(1, 0, 0, 0);
        f_[2] = xab(1, 0, 0, 0);
        f_[3] = xab(3, 4, 0, 0) + xab(6, 2, 1, 0) + xab(12, 1, 0, 1) + xab(-1, 0, 2, 0);
        f_[4] = xab(2, 6, 0, 0) + xab(10, 4, 1, 0) + xab(40, 3, 0, 1) + xab(-10, 2, 2, 0) + xab(-8, 1, 1, 1) +
                xab(-16, 0, 0, 2) + xab(-2, 0, 3, 0);
        const XABPoly r = curve_rhs();
        r16_ = BigRat(16) * (r * r);
    }

    const XABPoly &f(long n)
    {
        if (n < 0) {
            auto it = neg_.find(n);
            if (it == neg_.end()) {
                it = neg_.emplace(n, -f(-n)).first;
            }
            return it->second;
        }
        if (auto it = f_.find(n); it != f_.end()) {
            return it->second;
        }
        const long m = n / 2;
        XABPoly v;
        if (n % 2 != 0) {
            const XABPoly a = f(m + 2) * cube(f(m));
            const XABPoly b = f(m - 1) * cube(f(m + 1));
            v = m % 2 == 0 ? r16_ * a - b : a - r16_ * b;
        } else {
            v = f(m) * (f(m + 2) * f(m - 1) * f(m - 1) - f(m - 2) * f(m + 1) * f(m + 1));
        }
        return f_.emplace(n, std::move(v)).first->second;
    }

    // psi_n^2 as a polynomial in X (Y^2 eliminated).
    XABPoly psi_squared(long n)
    {
        const XABPoly &fn = f(n);
        XABPoly s = fn * fn;
        if (n % 2 == 0) {
            s = BigRat(4) * (curve_rhs() * s);
        }
        return s;
    }

    // psi_{n-1} psi_{n+1} as a polynomial in X.
    XABPoly psi_neighbors(long n)
    {
        XABPoly s = f(n - 1) * f(n + 1);
        if (n % 2 != 0) {
            s = BigRat(4) * (curve_rhs() * s);
        }
        return s;
    }

    // phi_n = X psi_n^2 - psi_{n+1} psi_{n-1}.
    XABPoly phi(long n)
    {
        return xab(1, 1, 0, 0) * psi_squared(n) - psi_neighbors(n);
    }

private:
    static XABPoly cube(const XABPoly &p)
    {
        return p * p * p;
    }

    std::map<long, XABPoly> f_;
    std::map<long, XABPoly> neg_;
    XABPoly r16_;
};

inline DivPoly division_fn(long n)
{
    if (n < -1) {
        throw std::invalid_argument("division polynomial index must be >= -1");
    }
    DivisionPolynomials dp;
    return DivPoly{n, dp.f(n)};
}

inline long x_degree(const XABPoly &p)
{
    long d = -1;
    for (const auto &[m, c] : p.terms()) {
        (void)c;
        d = std::max(d, static_cast<long>(m[0]));
    }
    return d;
}

// Remainder of p modulo a polynomial monic in X with coefficients in Q[A, B].
inline XABPoly reduce_mod_monic_x(XABPoly p, const XABPoly &m)
{
    const long d = x_degree(m);
    const BigRat *lead = m.find(static_cast<int>(d), 0, 0);
    if (d < 0 || lead == nullptr || *lead != 1) {
        throw std::invalid_argument("modulus must be monic in X");
    }
    for (;;) {
        const Monomial *top = nullptr;
        for (const auto &[mono, c] : p.terms()) {
            (void)c;
            if (mono[0] >= d) {
                top = &mono;
                break;
            }
        }
        if (top == nullptr) {
            return p;
        }
        const Monomial t = *top;
        const BigRat c = *p.find(t[0], t[1], t[2]);
        p -= XABPoly::term(c, t[0] - static_cast<int>(d), t[1], t[2]) * m;
    }
}

// f_n with A, B specialized, as a univariate polynomial over the field.
template <class Field>
UPoly<Field> specialize_xab(const Field &f, const XABPoly &p, const typename Field::element &a,
                            const typename Field::element &b)
{
    UPoly<Field> out(static_cast<std::size_t>(std::max(x_degree(p), 0L) + 1), f.zero());
    for (const auto &[m, c] : p.terms()) {
        auto v = f.from_rational(c);
        for (int i = 0; i < m[1]; ++i) {
            v = v * a;
        }
        for (int i = 0; i < m[2]; ++i) {
            v = v * b;
        }
        out[static_cast<std::size_t>(m[0])] += v;
    }
    upoly_trim(f, out);
    return out;
}

// Kernel data over F[x1]/(f_ell), x1 the abscissa of a generic point P of
// order ell: modulus = monic f_ell, xs[j-1] = x([j]P) for j = 1..(ell-1)/2,
// t[k] = sum_j x([j]P)^k for 0 <= k <= kmax.
template <class Field>
struct TorsionPowerSums
{
    UPoly<Field> modulus;
    std::vector<UPoly<Field>> xs;
    std::vector<UPoly<Field>> t;
};

template <class Field>
TorsionPowerSums<Field> tk_direct(long ell, long kmax, const typename Field::element &a,
                                  const typename Field::element &b, const Field &f)
{
    require_odd_prime(ell);
    if (ell > 7) {
        throw std::invalid_argument("the division polynomial route is limited to ell <= 7");
    }
    DivisionPolynomials dp;
    TorsionPowerSums<Field> out;
    out.modulus = upoly_monic(f, specialize_xab(f, dp.f(ell), a, b));
    if (upoly_degree<Field>(out.modulus) != divpoly_degree(ell)) {
        throw std::domain_error("division polynomial degenerates at this curve");
    }
    const auto &mod = out.modulus;
    const long d = (ell - 1) / 2;
    const UPoly<Field> x{f.zero(), f.one()};
    for (long j = 1; j <= d; ++j) {
        const auto num = specialize_xab(f, dp.psi_neighbors(j), a, b);
        const auto den = specialize_xab(f, dp.psi_squared(j), a, b);
        const auto q = upoly_mulmod(f, num, upoly_inverse_mod(f, den, mod), mod);
        out.xs.push_back(upoly_sub(f, x, q));
    }
    out.t.push_back(UPoly<Field>{f.from_integer(BigInt(d))});
    std::vector<UPoly<Field>> pw(out.xs.size(), UPoly<Field>{f.one()});
    for (long k = 1; k <= kmax; ++k) {
        UPoly<Field> s;
        for (std::size_t j = 0; j < pw.size(); ++j) {
            pw[j] = upoly_mulmod(f, pw[j], out.xs[j], mod);
            s = upoly_add(f, s, pw[j]);
        }
        out.t.push_back(std::move(s));
    }
    return out;
}

// Power sums over the ell+1 kernels of sigma_1^r, 1 <= r <= rmax, for a
// specialized curve: each kernel contributes (ell-1)/2 conjugates of t_1.
template <class Field>
std::vector<typename Field::element> divpoly_powersums_at(long ell, long rmax, const typename Field::element &a,
                                                          const typename Field::element &b, const Field &f)
{
    const auto tp = tk_direct(ell, 1, a, b, f);
    const auto &mod = tp.modulus;
    const long d = (ell - 1) / 2;
    std::vector<typename Field::element> out;
    UPoly<Field> pw{f.one()};
    for (long r = 1; r <= rmax; ++r) {
        pw = upoly_mulmod(f, pw, tp.t[1], mod);
        out.push_back(f.div_int(upoly_trace_mod(f, pw, mod), d));
    }
    return out;
}

// U_ell over Q from division polynomials alone: every power sum P_r(A, B)
// is interpolated exactly from specialized curves, then Newton's identities.
inline WeightedPoly compute_ccr_divpoly(long ell, std::uint64_t seed = 1)
{
    require_odd_prime(ell);
    const RationalField qq;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-40, 40);
    long npts = 0;
    for (long r = 2; r <= ell + 1; ++r) {
        npts = std::max(npts, count_N23(r));
    }
    npts += 2;
    std::vector<std::pair<BigRat, BigRat>> pts;
    std::vector<std::vector<BigRat>> vals;
    while (static_cast<long>(pts.size()) < npts) {
        const BigRat a(dist(rng)), b(dist(rng));
        if (4 * a * a * a + 27 * b * b == 0 || b == 0 || a == 0) {
            continue;
        }
        try {
            vals.push_back(divpoly_powersums_at(ell, ell + 1, a, b, qq));
        } catch (const std::domain_error &) {
            continue;
        }
        pts.emplace_back(a, b);
    }
    std::vector<MPoly<BigRat>> psum;
    for (long r = 1; r <= ell + 1; ++r) {
        const auto monos = weighted_monomials(1, r, 0);
        if (monos.empty()) {
            for (const auto &v : vals) {
                if (v[static_cast<std::size_t>(r - 1)] != 0) {
                    throw consistency_error("weight-1 power sum is not zero");
                }
            }
            psum.emplace_back();
            continue;
        }
        Matrix<BigRat> m;
        std::vector<BigRat> rhs;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<BigRat> row;
            for (const auto &mono : monos) {
                BigRat v(1);
                for (int e = 0; e < mono[1]; ++e) {
                    v *= pts[i].first;
                }
                for (int e = 0; e < mono[2]; ++e) {
                    v *= pts[i].second;
                }
                row.push_back(v);
            }
            m.push_back(std::move(row));
            rhs.push_back(vals[i][static_cast<std::size_t>(r - 1)]);
        }
        const auto sol = solve_overdetermined(qq, m, rhs);
        MPoly<BigRat> p;
        for (std::size_t k = 0; k < monos.size(); ++k) {
            p.add_term(monos[k], sol[k]);
        }
        psum.push_back(std::move(p));
    }
    return assemble_from_powersums(Kind::U, ell, qq, psum);
}

} // namespace ccr

#endif
