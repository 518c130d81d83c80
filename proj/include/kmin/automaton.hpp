#pragma once

/**
 * @file automaton.hpp
 * @brief K-automata given by linear representations (lambda, mu, gamma).
 *
 * lambda is 1 x n, gamma is n x 1 and mu(s) is n x n for every symbol s; mu
 * extends to words multiplicatively and the behavior of the automaton is the
 * series w -> lambda mu(w) gamma. Dimension 0 is allowed and denotes the zero
 * series.
 */

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fraction.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "ring.hpp"
#include "word.hpp"

namespace kmin {

template <BezoutDomain R>
class LinearRepresentation {
public:
    using scalar_type = R;

    LinearRepresentation(Alphabet alphabet, Matrix<R> lambda, std::vector<Matrix<R>> mu, Matrix<R> gamma)
        : alphabet_(std::move(alphabet)), lambda_(std::move(lambda)), mu_(std::move(mu)), gamma_(std::move(gamma)) {
        const std::size_t n = lambda_.cols();
        if (lambda_.rows() != 1)
            throw ShapeMismatch("lambda must be a row vector, got " + lambda_.shape());
        if (gamma_.cols() != 1 || gamma_.rows() != n)
            throw ShapeMismatch("gamma must be " + std::to_string(n) + "x1, got " + gamma_.shape());
        if (mu_.size() != alphabet_.size())
            throw ShapeMismatch("expected " + std::to_string(alphabet_.size()) + " transition matrices, got " +
                                std::to_string(mu_.size()));
        for (const auto& m : mu_)
            if (m.rows() != n || m.cols() != n)
                throw ShapeMismatch("transition matrix must be " + std::to_string(n) + "x" + std::to_string(n) +
                                    ", got " + m.shape());
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t dim() const { return lambda_.cols(); }
    const Matrix<R>& lambda() const { return lambda_; }
    const Matrix<R>& gamma() const { return gamma_; }
    const std::vector<Matrix<R>>& mu() const { return mu_; }
    const Matrix<R>& mu(std::size_t symbol) const {
        if (symbol >= mu_.size())
            throw UnknownSymbol("symbol index " + std::to_string(symbol) + " out of range");
        return mu_[symbol];
    }

    friend bool operator==(const LinearRepresentation&, const LinearRepresentation&) = default;

private:
    Alphabet alphabet_;
    Matrix<R> lambda_;
    std::vector<Matrix<R>> mu_;
    Matrix<R> gamma_;
};

/// lambda mu(w) as a row.
template <BezoutDomain R>
std::vector<R> lambda_mu(const LinearRepresentation<R>& rep, const Word& w) {
    std::vector<R> v = rep.lambda().row_copy(0);
    for (std::size_t s : w)
        v = v * rep.mu(s);
    return v;
}

/// mu(w) gamma as a column, returned as a plain vector.
template <BezoutDomain R>
std::vector<R> mu_gamma(const LinearRepresentation<R>& rep, const Word& w) {
    Matrix<R> v = rep.gamma();
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        v = rep.mu(*it) * v;
    return v.column_copy(0);
}

template <BezoutDomain R>
R dot(std::span<const R> a, std::span<const R> b) {
    if (a.size() != b.size())
        throw ShapeMismatch("dot product of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    R s = R::zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

template <BezoutDomain R>
R behavior(const LinearRepresentation<R>& rep, const Word& w) {
    auto v = lambda_mu(rep, w);
    return dot<R>(v, rep.gamma().column_copy(0));
}

template <BezoutDomain R>
R behavior(const LinearRepresentation<R>& rep, std::string_view word) {
    return behavior(rep, rep.alphabet().parse_word(word));
}

/// Pointwise product of the two series via Kronecker products; state (i, j)
/// is index i*n2 + j.
template <BezoutDomain R>
LinearRepresentation<R> hadamard(const LinearRepresentation<R>& a, const LinearRepresentation<R>& b) {
    if (!(a.alphabet() == b.alphabet()))
        throw AlphabetMismatch();
    std::vector<Matrix<R>> mu;
    for (std::size_t s = 0; s < a.alphabet().size(); ++s)
        mu.push_back(kronecker(a.mu(s), b.mu(s)));
    return {a.alphabet(), kronecker(a.lambda(), b.lambda()), std::move(mu), kronecker(a.gamma(), b.gamma())};
}

/// (gamma^t, mu^t, lambda^t); realizes the mirror series w -> s(reverse(w)).
template <BezoutDomain R>
LinearRepresentation<R> transpose(const LinearRepresentation<R>& rep) {
    std::vector<Matrix<R>> mu;
    for (const auto& m : rep.mu())
        mu.push_back(m.transpose());
    return {rep.alphabet(), rep.gamma().transpose(), std::move(mu), rep.lambda().transpose()};
}

/// Block-diagonal sum; realizes the sum of the two series.
template <BezoutDomain R>
LinearRepresentation<R> direct_sum(const LinearRepresentation<R>& a, const LinearRepresentation<R>& b) {
    if (!(a.alphabet() == b.alphabet()))
        throw AlphabetMismatch();
    std::vector<Matrix<R>> mu;
    for (std::size_t s = 0; s < a.alphabet().size(); ++s)
        mu.push_back(block_diagonal(a.mu(s), b.mu(s)));
    return {a.alphabet(), hstack(a.lambda(), b.lambda()), std::move(mu), vstack(a.gamma(), b.gamma())};
}

/// Realizes the series -s.
template <BezoutDomain R>
LinearRepresentation<R> negate(const LinearRepresentation<R>& rep) {
    return {rep.alphabet(), -rep.lambda(), rep.mu(), rep.gamma()};
}

/// Change of basis: (lambda p, p^-1 mu p, p^-1 gamma) given p and its inverse.
template <BezoutDomain R>
LinearRepresentation<R> conjugate(const LinearRepresentation<R>& rep, const Matrix<R>& p, const Matrix<R>& p_inv) {
    std::vector<Matrix<R>> mu;
    for (const auto& m : rep.mu())
        mu.push_back(p_inv * m * p);
    return {rep.alphabet(), rep.lambda() * p, std::move(mu), p_inv * rep.gamma()};
}

/// Same automaton with scalars sent through f.
template <class F, BezoutDomain R>
auto map_scalars(const LinearRepresentation<R>& rep, F&& f) {
    using U = decltype(f(std::declval<const R&>()));
    std::vector<Matrix<U>> mu;
    for (const auto& m : rep.mu())
        mu.push_back(m.map(f));
    return LinearRepresentation<U>(rep.alphabet(), rep.lambda().map(f), std::move(mu), rep.gamma().map(f));
}

template <BezoutDomain R>
LinearRepresentation<fraction_field_t<R>> to_fraction(const LinearRepresentation<R>& rep) {
    return map_scalars(rep, [](const R& x) { return to_fraction(x); });
}

/// Rank over F of the Hankel block H(u, v) = s(uv), u and v ranging over the
/// words of length <= max_length.
template <BezoutDomain R>
std::size_t hankel_rank(const LinearRepresentation<R>& rep, std::size_t max_length) {
    using F = fraction_field_t<R>;
    auto words = words_up_to(rep.alphabet().size(), max_length);
    std::vector<std::vector<R>> left, right;
    for (const auto& w : words) {
        left.push_back(lambda_mu(rep, w));
        right.push_back(mu_gamma(rep, w));
    }
    Matrix<F> h(words.size(), words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            h(i, j) = to_fraction(dot<R>(left[i], right[j]));
    return row_reduce(h).size();
}

} // namespace kmin
