#ifndef CCR_CCR_SERIES_HPP
#define CCR_CCR_SERIES_HPP

#include <cstddef>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <ccr/kind.hpp>
#include <ccr/linalg.hpp>
#include <ccr/monomials.hpp>
#include <ccr/mpoly.hpp>
#include <ccr/newton.hpp>
#include <ccr/qseries.hpp>
#include <ccr/weighted_poly.hpp>

namespace ccr
{

// Ring in which the q-series of a computation over Field are formed: integer
// series for the rationals (all power sums are integral), Field otherwise.
template <class Field>
struct series_ring_of
{
    using type = Field;
    static type make(const Field &f)
    {
        return f;
    }
};

template <>
struct series_ring_of<RationalField>
{
    using type = IntegerRing;
    static type make(const RationalField &)
    {
        return IntegerRing{};
    }
};

// q-expansions of E4, E6, Delta to a common order, with cached powers.
template <class Ring>
class EBasisSeries
{
public:
    EBasisSeries(const Ring &ring, long n)
        : e4_{eisenstein_qexp(4, n, ring)}, e6_{eisenstein_qexp(6, n, ring)}, delta_{delta_qexp(n, ring)},
          one_(TruncatedSeries<Ring>::constant(ring, ring.one(), n))
    {
    }

    TruncatedSeries<Ring> element(const EBasisElem &b)
    {
        return power(e4_, b.e4) * power(e6_, b.e6) * power(delta_, b.delta);
    }
    const TruncatedSeries<Ring> &one() const
    {
        return one_;
    }

private:
    TruncatedSeries<Ring> power(std::vector<TruncatedSeries<Ring>> &cache, int e)
    {
        if (e == 0) {
            return one_;
        }
        while (static_cast<int>(cache.size()) < e) {
            cache.push_back(cache.back() * cache.front());
        }
        return cache[static_cast<std::size_t>(e - 1)];
    }

    std::vector<TruncatedSeries<Ring>> e4_, e6_, delta_;
    TruncatedSeries<Ring> one_;
};

// The square system S_r: rows are the q^0..q^(n-1) coefficients of the basis
// of weight r, right-hand side those of the target series.
template <class Ring>
struct SrSystem
{
    long r = 0;
    std::vector<EBasisElem> basis;
    Matrix<typename Ring::element> matrix;
    std::vector<typename Ring::element> rhs;
};

template <class Ring>
SrSystem<Ring> build_Sr_system(const TruncatedSeries<Ring> &target, long r, EBasisSeries<Ring> &eb)
{
    SrSystem<Ring> s;
    s.r = r;
    s.basis = basis_for_weight(r);
    const std::size_t n = s.basis.size();
    std::vector<TruncatedSeries<Ring>> bs;
    for (const auto &b : s.basis) {
        bs.push_back(eb.element(b));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<typename Ring::element> row;
        for (std::size_t k = 0; k < n; ++k) {
            row.push_back(bs[k].coeff(static_cast<long>(i)));
        }
        s.matrix.push_back(std::move(row));
        s.rhs.push_back(target.coeff(static_cast<long>(i)));
    }
    return s;
}

// Coefficients u with target = sum_k u_k B_k over the weight-r basis. The
// basis is unitriangular in q so forward substitution suffices; every
// further known coefficient of the target is checked.
template <class Ring>
std::vector<typename Ring::element> solve_Sr_series(const TruncatedSeries<Ring> &target, long r,
                                                    EBasisSeries<Ring> &eb)
{
    if (r == 1) {
        if (!target.is_zero()) {
            throw consistency_error("weight-1 power sum is not zero");
        }
        return {};
    }
    const auto basis = basis_for_weight(r);
    if (static_cast<long>(basis.size()) > target.order()) {
        throw std::invalid_argument("series order " + std::to_string(target.order()) + " too small for weight " +
                                    std::to_string(r));
    }
    TruncatedSeries<Ring> rest = target;
    std::vector<typename Ring::element> u;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto bk = eb.element(basis[k]);
        const auto c = rest.coeff(static_cast<long>(k));
        u.push_back(c);
        rest -= c * bk;
    }
    if (!rest.is_zero()) {
        throw consistency_error("weight-" + std::to_string(r) + " system has a nonzero residual at q^" +
                                std::to_string(rest.valuation()));
    }
    return u;
}

// E4 = -Y/3, E6 = -Z/2, Delta = (-Y^3/27 - Z^2/4)/1728 as polynomials in
// (Y, Z), stored with X-exponent 0.
template <class Field>
class EToYZ
{
public:
    using P = MPoly<typename Field::element>;

    explicit EToYZ(const Field &f) : f_(f)
    {
        const auto c = [&](long num, long den) { return f.from_rational(BigRat(num, den)); };
        e4_.push_back(P::term(c(-1, 3), 0, 1, 0));
        e6_.push_back(P::term(c(-1, 2), 0, 0, 1));
        delta_.push_back(P::term(c(-1, 27 * 1728), 0, 3, 0) + P::term(c(-1, 4 * 1728), 0, 0, 2));
    }

    P element(const EBasisElem &b)
    {
        return power(e4_, b.e4) * power(e6_, b.e6) * power(delta_, b.delta);
    }

    template <class Coeffs>
    P convert(const std::vector<EBasisElem> &basis, const Coeffs &u)
    {
        P out;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            out += u[k] * element(basis[k]);
        }
        return out;
    }

private:
    P power(std::vector<P> &cache, int e)
    {
        if (e == 0) {
            return P::term(f_.one(), 0, 0, 0);
        }
        while (static_cast<int>(cache.size()) < e) {
            cache.push_back(cache.back() * cache.front());
        }
        return cache[static_cast<std::size_t>(e - 1)];
    }

    Field f_;
    std::vector<P> e4_, e6_, delta_;
};

template <class Field>
MPoly<typename Field::element> e_basis_to_YZ(const Field &f, const std::vector<EBasisElem> &basis,
                                             const std::vector<typename Field::element> &u)
{
    EToYZ<Field> conv(f);
    return conv.convert(basis, u);
}

struct SeriesOptions
{
    // Coefficients beyond the square systems used to verify each solution.
    long verify_margin = 4;
    // Worker threads for the independent weight systems.
    int threads = 1;
};

// Series order needed for all weight systems of a kind.
inline long series_order_for(Kind kind, long ell, long margin)
{
    long n = 1;
    for (long r = 1; r <= ell + 1; ++r) {
        n = std::max(n, count_N23(kind_weight(kind) * r));
    }
    return n + margin;
}

namespace detail
{

template <class Field>
BigRat to_rational(const typename Field::element &x)
{
    if constexpr (std::is_same_v<Field, RationalField>) {
        return x;
    } else {
        static_assert(std::is_same_v<Field, PrimeField>);
        return BigRat(from_u64(x.value()));
    }
}

template <class Field>
std::uint64_t modulus_of(const Field &f)
{
    if constexpr (std::is_same_v<Field, PrimeField>) {
        return f.p;
    } else {
        (void)f;
        return 0;
    }
}

template <class Field>
void check_field_for(const Field &f, long ell)
{
    const std::uint64_t ch = f.characteristic();
    if (ch != 0 && (ch <= static_cast<std::uint64_t>(ell + 1) || ch <= 3)) {
        throw std::invalid_argument("prime " + std::to_string(ch) + " must exceed ell + 1 and 3");
    }
}

// Power sums in (Y, Z) from series, solved weight by weight.
template <class Field>
std::vector<MPoly<typename Field::element>> powersums_YZ(const std::vector<TruncatedSeries<typename series_ring_of<Field>::type>> &ps,
                                                         int kx, const Field &f, long order, int threads)
{
    using SR = typename series_ring_of<Field>::type;
    using P = MPoly<typename Field::element>;
    const SR sring = series_ring_of<Field>::make(f);
    auto solve_one = [&](std::size_t idx) -> P {
        const long w = kx * static_cast<long>(idx + 1);
        EBasisSeries<SR> eb(sring, order);
        const auto u = solve_Sr_series(ps[idx], w, eb);
        if (w == 1) {
            return P();
        }
        std::vector<typename Field::element> uf;
        for (const auto &x : u) {
            if constexpr (std::is_same_v<SR, IntegerRing>) {
                uf.push_back(f.from_integer(x));
            } else {
                uf.push_back(x);
            }
        }
        return e_basis_to_YZ(f, basis_for_weight(w), uf);
    };
    std::vector<P> out(ps.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            out[i] = solve_one(i);
        }
        return out;
    }
    std::vector<std::future<P>> jobs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        jobs.push_back(std::async(std::launch::async, solve_one, i));
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out[i] = jobs[i].get();
    }
    return out;
}

} // namespace detail

// Assembles X^d + c_1 X^(d-1) + ... from power sums given as (Y, Z) polynomials.
template <class Field>
WeightedPoly assemble_from_powersums(Kind kind, long ell, const Field &f,
                                     const std::vector<MPoly<typename Field::element>> &psum)
{
    const int d = static_cast<int>(ell + 1);
    const PolyRing<Field> pr(f);
    const auto c = newton_to_coeffs(pr, psum, d);
    WeightedPoly out;
    out.kind = kind;
    out.ell = ell;
    out.modulus = detail::modulus_of(f);
    MPoly<BigRat>::Terms terms;
    for (int j = 0; j <= d; ++j) {
        for (const auto &[m, coeff] : c[static_cast<std::size_t>(j)].terms()) {
            terms.emplace(Monomial{d - j, m[1], m[2]}, detail::to_rational<Field>(coeff));
        }
    }
    out.poly = MPoly<BigRat>(std::move(terms));
    if (!is_weighted_homogeneous(out.poly, kind_weight(kind), expected_weight(out))) {
        throw consistency_error("assembled polynomial is not weighted homogeneous");
    }
    return out;
}

// CCR polynomial of the given kind by the exact series method, over the
// rationals or a prime field.
template <class Field>
WeightedPoly compute_ccr_series(Kind kind, long ell, const Field &f, const SeriesOptions &opt = {})
{
    require_odd_prime(ell);
    detail::check_field_for(f, ell);
    using SR = typename series_ring_of<Field>::type;
    const SR sring = series_ring_of<Field>::make(f);
    const long order = series_order_for(kind, ell, opt.verify_margin);
    const auto ps = powersum_series(kind, ell, static_cast<int>(ell + 1), order, sring);
    const auto yz = detail::powersums_YZ(ps, kind_weight(kind), f, order, opt.threads);
    return assemble_from_powersums(kind, ell, f, yz);
}

// Power sums P_1..P_(ell+1) as (Y, Z) polynomials, by the series method.
template <class Field>
std::vector<MPoly<typename Field::element>> powersums_series_YZ(Kind kind, long ell, const Field &f,
                                                                const SeriesOptions &opt = {})
{
    require_odd_prime(ell);
    detail::check_field_for(f, ell);
    using SR = typename series_ring_of<Field>::type;
    const SR sring = series_ring_of<Field>::make(f);
    const long order = series_order_for(kind, ell, opt.verify_margin);
    const auto ps = powersum_series(kind, ell, static_cast<int>(ell + 1), order, sring);
    return detail::powersums_YZ(ps, kind_weight(kind), f, order, opt.threads);
}

struct NumeratorPair
{
    NumeratorPoly a;
    NumeratorPoly b;
};

// N_A, N_B with U'(x_i) A*_i = N_A(x_i) at every root x_i of U:
// N(X) = sum_i A*_i U(X)/(X - x_i) = sum_m X^m sum_{k>m} a_k M_{k-m-1},
// where U = sum a_k X^k and M_e = sum_i A*_i x_i^e.
template <class Field>
NumeratorPair compute_numerators(long ell, const WeightedPoly &u, const Field &f, const SeriesOptions &opt = {})
{
    require_odd_prime(ell);
    detail::check_field_for(f, ell);
    if (u.kind != Kind::U || u.ell != ell) {
        throw std::invalid_argument("compute_numerators needs U for the same ell");
    }
    using SR = typename series_ring_of<Field>::type;
    using P = MPoly<typename Field::element>;
    const SR sring = series_ring_of<Field>::make(f);
    long order = 1;
    for (long e = 0; e <= ell; ++e) {
        order = std::max(order, count_N23(3 + e));
    }
    order += opt.verify_margin;
    const auto sig = root_series(Kind::U, ell, order, sring);
    std::vector<P> a_coeffs(static_cast<std::size_t>(ell + 2));
    for (const auto &[m, c] : u.poly.terms()) {
        a_coeffs[static_cast<std::size_t>(m[0])] += P::term(f.from_rational(c), 0, m[1], m[2]);
    }
    NumeratorPair out;
    for (Kind which : {Kind::V, Kind::W}) {
        const auto star = root_series(which, ell, order, sring);
        const int base_weight = kind_weight(which);
        std::vector<P> mixed;
        auto pp = star.principal;
        auto gp = star.conjugate;
        for (long e = 0; e <= ell; ++e) {
            if (e > 0) {
                pp = pp * sig.principal;
                gp = gp * sig.conjugate;
            }
            const auto s = symmetrize(pp, gp, ell);
            EBasisSeries<SR> eb(sring, order);
            const long w = base_weight + e;
            const auto uvec = solve_Sr_series(s, w, eb);
            std::vector<typename Field::element> uf;
            for (const auto &x : uvec) {
                if constexpr (std::is_same_v<SR, IntegerRing>) {
                    uf.push_back(f.from_integer(x));
                } else {
                    uf.push_back(x);
                }
            }
            mixed.push_back(e_basis_to_YZ(f, basis_for_weight(w), uf));
        }
        MPoly<BigRat>::Terms terms;
        for (long mexp = 0; mexp <= ell; ++mexp) {
            P coeff;
            for (long k = mexp + 1; k <= ell + 1; ++k) {
                coeff += a_coeffs[static_cast<std::size_t>(k)] * mixed[static_cast<std::size_t>(k - mexp - 1)];
            }
            for (const auto &[m, c] : coeff.terms()) {
                terms.emplace(Monomial{static_cast<int>(mexp), m[1], m[2]}, detail::to_rational<Field>(c));
            }
        }
        NumeratorPoly np{which == Kind::V ? 'A' : 'B', ell, detail::modulus_of(f), MPoly<BigRat>(std::move(terms))};
        if (!is_weighted_homogeneous(np.poly, 1, expected_weight(np))) {
            throw consistency_error("numerator is not weighted homogeneous");
        }
        (which == Kind::V ? out.a : out.b) = std::move(np);
    }
    return out;
}

// Independent route for small ell: the unknown coefficients of all
// admissible monomials are fixed by requiring that the principal root
// annihilate the polynomial as a q-series, one equation per coefficient.
inline WeightedPoly compute_ccr_linear_system(Kind kind, long ell)
{
    require_odd_prime(ell);
    if (ell > 7) {
        throw std::invalid_argument("the single linear system route is limited to ell <= 7");
    }
    const int kx = kind_weight(kind);
    const long d = ell + 1;
    const auto monos = weighted_monomials(kx, kx * d, d);
    const long unknowns = static_cast<long>(monos.size()) - 1;
    const long n = 2 * unknowns + 10;
    const IntegerRing zz;
    const auto x = root_series(kind, ell, n, zz).principal;
    const auto y = BigInt(-3) * eisenstein_qexp(4, n, zz);
    const auto z = BigInt(-2) * eisenstein_qexp(6, n, zz);
    auto powers = [&](const TruncatedSeries<IntegerRing> &s, long emax) {
        std::vector<TruncatedSeries<IntegerRing>> v{TruncatedSeries<IntegerRing>::constant(zz, 1, n)};
        for (long e = 1; e <= emax; ++e) {
            v.push_back(v.back() * s);
        }
        return v;
    };
    const auto xp = powers(x, d);
    const auto yp = powers(y, kx * d / 2);
    const auto zp = powers(z, kx * d / 3);
    std::vector<TruncatedSeries<IntegerRing>> cols;
    for (const auto &m : monos) {
        cols.push_back(xp[static_cast<std::size_t>(m[0])] * yp[static_cast<std::size_t>(m[1])] *
                       zp[static_cast<std::size_t>(m[2])]);
    }
    Matrix<BigRat> a;
    std::vector<BigRat> b;
    for (long i = 0; i < n; ++i) {
        std::vector<BigRat> row;
        for (std::size_t j = 1; j < cols.size(); ++j) {
            row.emplace_back(cols[j].coeff(i));
        }
        a.push_back(std::move(row));
        b.emplace_back(-cols[0].coeff(i));
    }
    const auto sol = solve_overdetermined(RationalField{}, a, b);
    MPoly<BigRat>::Terms terms;
    terms.emplace(monos[0], BigRat(1));
    for (std::size_t j = 1; j < monos.size(); ++j) {
        if (sgn(sol[j - 1]) != 0) {
            terms.emplace(monos[j], sol[j - 1]);
        }
    }
    return WeightedPoly{kind, ell, 0, MPoly<BigRat>(std::move(terms))};
}

} // namespace ccr

#endif
