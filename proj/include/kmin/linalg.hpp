#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over a Bezout domain and its fraction field.
 *
 * The central routine is triang(): a stair (row echelon) form T of a matrix M
 * together with a unimodular G such that G*M = [T; 0]. It is built only from
 * 2x2 Gauss steps
 *
 *     G = [ alpha   beta ]      G * (a, b)^t = (d, 0)^t,  alpha*a + beta*b = d,
 *         [ -b/d    a/d  ]      det G = 1,
 *
 * so it works in any Bezout domain, not only Euclidean ones. Entries above
 * the pivots are left as they are (no Hermite reduction).
 */

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "fraction.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace kmin {

// ---------------------------------------------------------------------------
// fraction-field elimination

/// Brings m to reduced row echelon form in place; returns the pivot columns.
/// F must be a field.
template <BezoutDomain F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        m.scale_row(r, F::one() / m(r, c));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <BezoutDomain R>
Matrix<fraction_field_t<R>> to_fraction(const Matrix<R>& m) {
    return m.map([](const R& x) { return to_fraction(x); });
}

/// Rank of m with its entries read in the fraction field.
template <BezoutDomain R>
std::size_t rank_over_fractions(const Matrix<R>& m) {
    auto f = to_fraction(m);
    return row_reduce(f).size();
}

/// A solution x of a*x = b over the field F (free variables set to zero), or
/// nullopt when the system is inconsistent.
template <BezoutDomain F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& a, std::span<const F> b) {
    if (b.size() != a.rows())
        throw ShapeMismatch("right-hand side has length " + std::to_string(b.size()) + ", expected " +
                            std::to_string(a.rows()));
    Matrix<F> aug = hstack(a, Matrix<F>::column_vector({b.begin(), b.end()}));
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    std::vector<F> x(a.cols(), F::zero());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(i, a.cols());
    return x;
}

template <BezoutDomain F>
F determinant_over_field(Matrix<F> m) {
    if (m.rows() != m.cols())
        throw ShapeMismatch("determinant of non-square " + m.shape());
    F det = F::one();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = c;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            return F::zero();
        if (p != c) {
            m.swap_rows(c, p);
            det = -det;
        }
        det = det * m(c, c);
        F inv = F::one() / m(c, c);
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero())
                continue;
            F f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

template <BezoutDomain R>
R determinant(const Matrix<R>& m) {
    return from_fraction<R>(determinant_over_field(to_fraction(m)));
}

/// Inverse over a field; nullopt when singular.
template <BezoutDomain F>
std::optional<Matrix<F>> inverse_over_field(const Matrix<F>& m) {
    if (m.rows() != m.cols())
        throw ShapeMismatch("inverse of non-square " + m.shape());
    const std::size_t n = m.rows();
    Matrix<F> aug = hstack(m, Matrix<F>::identity(n));
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Bezout-domain elimination

/// The 2x2 unimodular step [[alpha, beta], [gamma, delta]] sending (a, b) to
/// (d, 0).
template <BezoutDomain R>
struct GaussStep {
    R alpha, beta, gamma, delta;
    R d;

    Matrix<R> matrix() const { return Matrix<R>{{alpha, beta}, {gamma, delta}}; }
    R det() const { return alpha * delta - beta * gamma; }
};

template <BezoutDomain R>
GaussStep<R> gauss2(const R& a, const R& b) {
    if (a.is_zero() && b.is_zero())
        throw BothZero();
    if (a.is_zero())
        return {R::zero(), R::one(), R::one(), R::zero(), b};
    if (b.is_zero()) {
        R u = canonical_unit(a);
        return {u, R::zero(), R::zero(), R::one(), a * u};
    }
    auto [d, alpha, beta] = extended_gcd(a, b);
    return {alpha, beta, -exact_divide(b, d), exact_divide(a, d), d};
}

template <BezoutDomain R>
struct TriangResult {
    Matrix<R> transform;   ///< G, square, rows(M) x rows(M)
    Matrix<R> stair;       ///< T, rank x cols(M)
    std::size_t zero_rows; ///< rows(M) - rank
};

/// Column index of the first nonzero entry of row i, or cols() if none.
template <class T>
std::size_t leading_column(const Matrix<T>& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero())
            return j;
    return m.cols();
}

/// Every row nonzero and leading columns strictly increasing.
template <class T>
bool is_stair(const Matrix<T>& m) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t c = leading_column(m, i);
        if (c == m.cols() || (i > 0 && c <= prev))
            return false;
        prev = c;
    }
    return true;
}

template <BezoutDomain R>
TriangResult<R> triang(const Matrix<R>& m) {
    Matrix<R> a = m;
    Matrix<R> g = Matrix<R>::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c).is_zero())
                continue;
            auto step = gauss2(a(r, c), a(i, c));
            a.combine_rows(r, i, step.alpha, step.beta, step.gamma, step.delta);
            g.combine_rows(r, i, step.alpha, step.beta, step.gamma, step.delta);
        }
        if (a(r, c).is_zero())
            continue;
        R u = canonical_unit(a(r, c));
        if (!(u == R::one())) {
            a.scale_row(r, u);
            g.scale_row(r, u);
        }
        ++r;
    }
    return {std::move(g), a.top_rows(r), m.rows() - r};
}

/// Inverse of a matrix with unit determinant, exactly over R.
template <BezoutDomain R>
Matrix<R> invert_unimodular(const Matrix<R>& g) {
    auto f = to_fraction(g);
    if (!is_unit(from_fraction<R>(determinant_over_field(f))))
        throw NotUnimodular();
    auto inv = inverse_over_field(f);
    return inv->map([](const auto& x) { return from_fraction<R>(x); });
}

// ---------------------------------------------------------------------------
// module membership

struct Independent {
    friend bool operator==(const Independent&, const Independent&) = default;
};

template <BezoutDomain R>
struct Member {
    std::vector<R> coefficients;
    friend bool operator==(const Member&, const Member&) = default;
};

template <BezoutDomain R>
struct FractionalMember {
    R alpha;
    std::vector<R> coefficients;
    friend bool operator==(const FractionalMember&, const FractionalMember&) = default;
};

/// Outcome of testing v against the rows b_i of a basis:
///   Independent                      v is not in the F-span
///   Member(c)                        v = sum c_i b_i with c_i in R
///   FractionalMember(alpha, c)       alpha v = sum c_i b_i, alpha not a unit,
///                                    alpha does not divide every c_i
template <BezoutDomain R>
using MembershipOutcome = std::variant<Independent, Member<R>, FractionalMember<R>>;

/// The basis rows must be linearly independent over F; stair form is the
/// usual case but not required.
template <BezoutDomain R>
MembershipOutcome<R> membership(const Matrix<R>& basis, std::span<const R> v) {
    using F = fraction_field_t<R>;
    if (basis.rows() > 0 && v.size() != basis.cols())
        throw ShapeMismatch("vector of length " + std::to_string(v.size()) + " against basis " + basis.shape());
    if (basis.rows() == 0) {
        for (const auto& x : v)
            if (!x.is_zero())
                return Independent{};
        return Member<R>{};
    }
    std::vector<F> rhs;
    rhs.reserve(v.size());
    for (const auto& x : v)
        rhs.push_back(to_fraction(x));
    auto sol = solve_linear(to_fraction(basis).transpose(), std::span<const F>(rhs));
    if (!sol)
        return Independent{};

    R alpha = R::one();
    if constexpr (!is_fraction<R>::value)
        for (const auto& c : *sol)
            alpha = lcm(alpha, c.denominator());

    std::vector<R> coefficients;
    coefficients.reserve(sol->size());
    F scale = to_fraction(alpha);
    for (const auto& c : *sol)
        coefficients.push_back(from_fraction<R>(c * scale));
    if (is_unit(alpha))
        return Member<R>{std::move(coefficients)};
    return FractionalMember<R>{std::move(alpha), std::move(coefficients)};
}

template <BezoutDomain R>
MembershipOutcome<R> membership(const Matrix<R>& basis, const std::vector<R>& v) {
    return membership(basis, std::span<const R>(v));
}

/// Coefficients c with w = c * t for a stair matrix t, by forward
/// substitution with exact division at each pivot.
template <BezoutDomain R>
std::vector<R> solve_stair(const Matrix<R>& t, std::span<const R> w) {
    if (w.size() != t.cols() && t.rows() > 0)
        throw ShapeMismatch("vector of length " + std::to_string(w.size()) + " against stair matrix " +
                            t.shape());
    std::vector<R> residue(w.begin(), w.end());
    std::vector<R> c;
    c.reserve(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) {
        std::size_t p = leading_column(t, i);
        if (p == t.cols())
            throw ShapeMismatch("stair matrix has a zero row");
        R q;
        try {
            q = exact_divide(residue[p], t(i, p));
        } catch (const InexactDivision&) {
            throw NotInModule("pivot " + to_string(t(i, p)) + " does not divide " + to_string(residue[p]));
        }
        if (!q.is_zero())
            for (std::size_t j = p; j < t.cols(); ++j)
                residue[j] = residue[j] - q * t(i, j);
        c.push_back(std::move(q));
    }
    for (const auto& x : residue)
        if (!x.is_zero())
            throw NotInModule("vector is not in the row module");
    return c;
}

template <BezoutDomain R>
std::vector<R> solve_stair(const Matrix<R>& t, const std::vector<R>& w) {
    return solve_stair(t, std::span<const R>(w));
}

} // namespace kmin
