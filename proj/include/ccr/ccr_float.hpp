#ifndef CCR_CCR_FLOAT_HPP
#define CCR_CCR_FLOAT_HPP

#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include <ccr/ccr_series.hpp>
#include <ccr/floateval.hpp>

namespace ccr
{

struct FloatOptions
{
    long guard_bits = 64;
    // Escalation stops once the precision exceeds this multiple of the
    // initial precision.
    long prec_cap_factor = 8;
    // 0 selects ceil(2k(ell+1) log2 ell) + guard.
    long bits_override = 0;
    int threads = 1;
};

struct FloatReport
{
    long bits = 0;
    int attempts = 0;
    long rho_count = 0;
};

// Values at tau = rho i of everything one step of the float method needs:
// E4, E6, Delta at q = exp(-2 pi rho) and the power sums of the ell+1 roots.
struct FloatSample
{
    BigRat rho;
    BigFloat e4;
    BigFloat e6;
    BigFloat delta;
    // powersums[r] for 0 <= r <= ell+1 (real parts).
    std::vector<BigFloat> powersums;
};

struct FloatRow
{
    std::vector<BigFloat> coeffs;
    BigFloat rhs;
};

inline long float_default_bits(Kind kind, long ell, long guard)
{
    const double h = 2.0 * kind_weight(kind) * static_cast<double>(ell + 1) * std::log2(static_cast<double>(ell));
    return static_cast<long>(std::ceil(h)) + guard;
}

namespace detail
{

inline BigFloat checked_real(const BigComplex &z, const char *what)
{
    const mpfr_prec_t bits = z.precision();
    BigFloat scale = abs(z.real());
    if (scale < BigFloat(1L, bits)) {
        scale = BigFloat(1L, bits);
    }
    if (abs(z.imag()) > scale * BigFloat::pow2(-static_cast<long>(bits) / 2, bits)) {
        throw precision_error(std::string(what) + " has a non-negligible imaginary part");
    }
    return z.real();
}

} // namespace detail

inline FloatSample float_sample(Kind kind, long ell, const BigRat &rho, long bits)
{
    require_odd_prime(ell);
    const auto prec = static_cast<mpfr_prec_t>(bits);
    const int kx = kind_weight(kind);
    const BigFloat two_pi = BigFloat::pi(prec) * 2L;
    const BigFloat rho_f(rho, prec);
    const BigFloat wr = exp(-(two_pi * rho_f) / ell);
    const BigFloat qr = exp(-(two_pi * rho_f));
    const BigFloat qlr = exp(-(two_pi * rho_f) * ell);
    const BigComplex w(wr), q(qr), ql(qlr);

    std::vector<BigComplex> xi;
    for (long j = 0; j < ell; ++j) {
        xi.push_back(BigComplex::root_of_unity(j, ell, prec));
    }
    const auto tc = evaluate_conjugate_values(ell, w, truncation_order(wr, bits, kx), xi, kx);
    const auto tq = evaluate_many_T(q, truncation_order(qr, bits, 3), 3);
    const auto tql = evaluate_many_T(ql, truncation_order(qlr, bits, kx), kx);
    const EisensteinValues eq = e_values_from_T(tq);
    const EisensteinValues eql = e_values_from_T(tql);

    const BigFloat lf(ell, prec);
    std::vector<BigComplex> roots;
    switch (kind) {
    case Kind::U: {
        const BigFloat half(0.5, prec);
        roots.push_back((eql.e2 * ell - eq.e2) * (lf * half));
        for (long j = 0; j < ell; ++j) {
            const BigComplex e2 = tc[1][static_cast<std::size_t>(j)] / tc[0][static_cast<std::size_t>(j)];
            roots.push_back((e2 - eq.e2 * ell) * half);
        }
        break;
    }
    case Kind::V: {
        const long s = -3 * ell * ell * ell * ell;
        roots.push_back(eql.e4 * s);
        for (long j = 0; j < ell; ++j) {
            std::vector<BigComplex> t{tc[0][static_cast<std::size_t>(j)], tc[1][static_cast<std::size_t>(j)],
                                      tc[2][static_cast<std::size_t>(j)]};
            roots.push_back(e_values_from_T(t).e4 * -3L);
        }
        break;
    }
    case Kind::W: {
        BigFloat s(-2L, prec);
        for (int i = 0; i < 6; ++i) {
            s *= ell;
        }
        roots.push_back(eql.e6 * s);
        for (long j = 0; j < ell; ++j) {
            std::vector<BigComplex> t{tc[0][static_cast<std::size_t>(j)], tc[1][static_cast<std::size_t>(j)],
                                      tc[2][static_cast<std::size_t>(j)], tc[3][static_cast<std::size_t>(j)]};
            roots.push_back(e_values_from_T(t).e6 * -2L);
        }
        break;
    }
    }

    FloatSample s{rho, detail::checked_real(eq.e4, "E4"), detail::checked_real(eq.e6, "E6"), BigFloat(prec), {}};
    // Delta = q (q;q)^24 avoids the cancellation in E4^3 - E6^2.
    s.delta = qr * detail::checked_real(tq[0], "T0").pow_ui(24);
    std::vector<BigComplex> pw(roots.size(), BigComplex(BigFloat(1L, prec)));
    s.powersums.push_back(BigFloat(static_cast<long>(roots.size()), prec));
    for (long r = 1; r <= ell + 1; ++r) {
        BigComplex acc(prec);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            pw[i] *= roots[i];
            acc += pw[i];
        }
        s.powersums.push_back(detail::checked_real(acc, "power sum"));
    }
    return s;
}

// One equation of L_r: the weight-k*r basis evaluated at q against the r-th
// power sum of the roots.
inline FloatRow instantiate_float_row(Kind kind, long r, const FloatSample &s)
{
    if (r < 1 || r >= static_cast<long>(s.powersums.size())) {
        throw std::invalid_argument("power index out of range");
    }
    const auto basis = basis_for_weight(kind_weight(kind) * r);
    const mpfr_prec_t prec = s.e4.precision();
    FloatRow row{{}, s.powersums[static_cast<std::size_t>(r)]};
    for (const auto &b : basis) {
        BigFloat v(1L, prec);
        v *= s.e4.pow_ui(static_cast<unsigned long>(b.e4));
        v *= s.e6.pow_ui(static_cast<unsigned long>(b.e6));
        v *= s.delta.pow_ui(static_cast<unsigned long>(b.delta));
        row.coeffs.push_back(std::move(v));
    }
    return row;
}

inline FloatRow instantiate_float_row(Kind kind, long ell, long r, const BigRat &rho, long bits)
{
    return instantiate_float_row(kind, r, float_sample(kind, ell, rho, bits));
}

namespace detail
{

inline WeightedPoly float_attempt(Kind kind, long ell, long bits, int threads, FloatReport &rep)
{
    const int kx = kind_weight(kind);
    long nrho = 0;
    for (long r = 1; r <= ell + 1; ++r) {
        if (kx * r != 1) {
            nrho = std::max(nrho, count_N23(kx * r));
        }
    }
    rep.rho_count = nrho;
    std::vector<FloatSample> samples(static_cast<std::size_t>(nrho));
    auto make = [&](long i) { return float_sample(kind, ell, BigRat(10 + i + 1, 10), bits); };
    if (threads <= 1) {
        for (long i = 0; i < nrho; ++i) {
            samples[static_cast<std::size_t>(i)] = make(i);
        }
    } else {
        std::vector<std::future<FloatSample>> jobs;
        for (long i = 0; i < nrho; ++i) {
            jobs.push_back(std::async(std::launch::async, make, i));
        }
        for (long i = 0; i < nrho; ++i) {
            samples[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].get();
        }
    }
    const FloatField ff(static_cast<mpfr_prec_t>(bits));
    const RationalField qq;
    const BigFloat tol = BigFloat::pow2(-16, 64);
    std::vector<MPoly<BigRat>> psum;
    for (long r = 1; r <= ell + 1; ++r) {
        const long w = kx * r;
        if (w == 1) {
            psum.emplace_back();
            continue;
        }
        const auto basis = basis_for_weight(w);
        Matrix<BigFloat> a;
        std::vector<BigFloat> b;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto row = instantiate_float_row(kind, r, samples[i]);
            a.push_back(std::move(row.coeffs));
            b.push_back(std::move(row.rhs));
        }
        const auto u = solve_linear(ff, a, b);
        std::vector<BigRat> ui;
        for (const auto &x : u) {
            ui.emplace_back(round_to_integer(x, tol));
        }
        psum.push_back(e_basis_to_YZ(qq, basis, ui));
    }
    return assemble_from_powersums(kind, ell, qq, psum);
}

} // namespace detail

// CCR polynomial by numerical evaluation at tau = rho i, rho = 1.1, 1.2, ...
// Rounding failures double the guard bits and restart, up to the cap.
inline WeightedPoly compute_ccr_float(Kind kind, long ell, const FloatOptions &opt = {}, FloatReport *report = nullptr)
{
    require_odd_prime(ell);
    long guard = opt.guard_bits;
    const long initial = opt.bits_override > 0 ? opt.bits_override : float_default_bits(kind, ell, guard);
    const long cap = initial * opt.prec_cap_factor;
    long bits = initial;
    FloatReport rep;
    for (;;) {
        ++rep.attempts;
        rep.bits = bits;
        try {
            auto out = detail::float_attempt(kind, ell, bits, opt.threads, rep);
            if (report != nullptr) {
                *report = rep;
            }
            return out;
        } catch (const precision_error &) {
            if (report != nullptr) {
                *report = rep;
            }
            guard *= 2;
            bits = (opt.bits_override > 0 ? opt.bits_override : float_default_bits(kind, ell, 0)) + guard;
            if (bits > cap) {
                throw precision_error("float method needs more than " + std::to_string(cap) + " bits");
            }
        }
    }
}

} // namespace ccr

#endif
