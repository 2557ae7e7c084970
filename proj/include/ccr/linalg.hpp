#ifndef CCR_LINALG_HPP
#define CCR_LINALG_HPP

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include <ccr/errors.hpp>
#include <ccr/rings.hpp>

namespace ccr
{

template <class E>
using Matrix = std::vector<std::vector<E>>;

template <class Field>
std::vector<typename Field::element> mat_vec(const Field &f, const Matrix<typename Field::element> &a,
                                             const std::vector<typename Field::element> &x)
{
    std::vector<typename Field::element> out;
    out.reserve(a.size());
    for (const auto &row : a) {
        typename Field::element acc = f.zero();
        for (std::size_t j = 0; j < row.size(); ++j) {
            acc += row[j] * x[j];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

// Solves L x = b for lower triangular L with invertible diagonal.
template <class Field>
std::vector<typename Field::element> solve_lower_triangular(const Field &f, const Matrix<typename Field::element> &l,
                                                            const std::vector<typename Field::element> &b)
{
    using E = typename Field::element;
    const std::size_t n = l.size();
    std::vector<E> x(n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
        E acc = b[i];
        for (std::size_t j = 0; j < i; ++j) {
            acc -= l[i][j] * x[j];
        }
        if (f.is_zero(l[i][i])) {
            throw singular_matrix_error(i, "triangular system");
        }
        x[i] = E(acc * f.inverse(l[i][i]));
    }
    return x;
}

namespace detail
{

inline bool lower_triangular(const Matrix<BigRat> &a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a[i].size(); ++j) {
            if (sgn(a[i][j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

// Fraction-free elimination on an integer-scaled copy, then exact back
// substitution.
inline std::vector<BigRat> bareiss_solve(const Matrix<BigRat> &a, const std::vector<BigRat> &b)
{
    const std::size_t n = a.size();
    Matrix<BigInt> m(n, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        BigInt den = b[i].get_den();
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[i][j].get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = a[i][j].get_num() * (den / a[i][j].get_den());
        }
        m[i][n] = b[i].get_num() * (den / b[i].get_den());
    }
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(m[piv][k]) == 0) {
            ++piv;
        }
        if (piv == n) {
            throw singular_matrix_error(k, "rational system");
        }
        std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    std::vector<BigRat> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        BigRat acc(m[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) {
            acc -= BigRat(m[ii][j]) * x[j];
        }
        x[ii] = acc / BigRat(m[ii][ii]);
        x[ii].canonicalize();
    }
    return x;
}

template <class Field>
bool better_pivot(const Field &, const typename Field::element &cand, const typename Field::element &best)
{
    if constexpr (std::is_same_v<Field, FloatField>) {
        return abs(best) < abs(cand);
    } else {
        (void)cand;
        (void)best;
        return false;
    }
}

// Row echelon elimination of an m x n system (m >= n). Extra rows must be
// consistent with the solution.
template <class Field>
std::vector<typename Field::element> gauss_solve(const Field &f, Matrix<typename Field::element> a,
                                                 std::vector<typename Field::element> b)
{
    using E = typename Field::element;
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (m < n) {
        throw std::invalid_argument("underdetermined linear system");
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = m;
        for (std::size_t i = k; i < m; ++i) {
            if (f.is_zero(a[i][k])) {
                continue;
            }
            if (piv == m || better_pivot(f, a[i][k], a[piv][k])) {
                piv = i;
            }
            if constexpr (Field::is_exact) {
                break;
            }
        }
        if (piv == m) {
            throw singular_matrix_error(k, "linear system");
        }
        std::swap(a[piv], a[k]);
        std::swap(b[piv], b[k]);
        const E inv = f.inverse(a[k][k]);
        for (std::size_t i = k + 1; i < m; ++i) {
            if (f.is_zero(a[i][k])) {
                continue;
            }
            const E factor = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
            b[i] -= factor * b[k];
        }
    }
    if constexpr (Field::is_exact) {
        for (std::size_t i = n; i < m; ++i) {
            if (!f.is_zero(b[i])) {
                throw consistency_error("overdetermined linear system is inconsistent (row " + std::to_string(i) +
                                        ")");
            }
        }
    }
    std::vector<E> x(n, f.zero());
    for (std::size_t ii = n; ii-- > 0;) {
        E acc = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) {
            acc -= a[ii][j] * x[j];
        }
        x[ii] = acc / a[ii][ii];
    }
    return x;
}

} // namespace detail

// Solves the square system A x = b. Rationals use fraction-free elimination,
// floats use partial pivoting, prime fields plain Gaussian elimination.
// Lower triangular rational systems take a substitution fast path.
template <class Field>
std::vector<typename Field::element> solve_linear(const Field &f, const Matrix<typename Field::element> &a,
                                                  const std::vector<typename Field::element> &b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("matrix and right-hand side sizes differ");
    }
    for (const auto &row : a) {
        if (row.size() != a.size()) {
            throw std::invalid_argument("matrix is not square");
        }
    }
    if constexpr (std::is_same_v<Field, RationalField>) {
        if (detail::lower_triangular(a)) {
            return solve_lower_triangular(f, a, b);
        }
        return detail::bareiss_solve(a, b);
    } else {
        return detail::gauss_solve(f, a, b);
    }
}

// Solves an exact m x n system with m >= n and full column rank, verifying
// that every equation holds.
template <class Field>
std::vector<typename Field::element> solve_overdetermined(const Field &f, const Matrix<typename Field::element> &a,
                                                          const std::vector<typename Field::element> &b)
{
    static_assert(Field::is_exact, "overdetermined solving requires an exact field");
    if (a.size() != b.size()) {
        throw std::invalid_argument("matrix and right-hand side sizes differ");
    }
    return detail::gauss_solve(f, a, b);
}

} // namespace ccr

#endif
