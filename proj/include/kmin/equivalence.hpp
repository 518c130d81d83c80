#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "automaton.hpp"
#include "errors.hpp"
#include "fraction.hpp"
#include "linalg.hpp"
#include "minimize.hpp"
#include "word.hpp"

namespace kmin {

/// A word of minimal length on which the two series differ, or nullopt when
/// they are equal.
///
/// Works over F on the difference automaton r1 - r2: the words kept by
/// prefix() span every lambda mu(w), and the words of length <= k among them
/// span every lambda mu(w) with |w| <= k, so the first kept word with a
/// nonzero coefficient has minimal length.
template <BezoutDomain R>
std::optional<Word> distinguishing_word(const LinearRepresentation<R>& r1, const LinearRepresentation<R>& r2) {
    if (!(r1.alphabet() == r2.alphabet()))
        throw AlphabetMismatch();
    auto diff = to_fraction(direct_sum(r1, negate(r2)));
    StepBudget unlimited{static_cast<std::size_t>(-1)};
    auto pr = prefix(diff, unlimited);
    auto gamma = diff.gamma().column_copy(0);
    for (const auto& x : pr.X)
        if (!dot<fraction_field_t<R>>(pr.vectors.at(x), gamma).is_zero())
            return x;
    return std::nullopt;
}

template <BezoutDomain R>
bool equivalent(const LinearRepresentation<R>& r1, const LinearRepresentation<R>& r2) {
    return !distinguishing_word(r1, r2).has_value();
}

/// Minimal over the fraction field: dimension equals the Hankel rank.
template <BezoutDomain R>
bool is_minimal_over_fractions(const LinearRepresentation<R>& rep) {
    return hankel_rank(rep, rep.dim()) == rep.dim();
}

/// The invertible S over F with
///     lambda2 = lambda1 S,   S mu2(s) = mu1(s) S,   S gamma2 = gamma1,
/// i.e. r1 conjugated by S is r2. For equivalent representations that are
/// minimal over F it exists and is unique; nullopt otherwise.
template <BezoutDomain R>
std::optional<Matrix<fraction_field_t<R>>> conjugator(const LinearRepresentation<R>& r1,
                                                      const LinearRepresentation<R>& r2) {
    using F = fraction_field_t<R>;
    if (!(r1.alphabet() == r2.alphabet()))
        throw AlphabetMismatch();
    if (r1.dim() != r2.dim())
        throw DimensionMismatch();
    const std::size_t n = r1.dim();
    const std::size_t unknowns = n * n;
    auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };

    auto a = to_fraction(r1);
    auto b = to_fraction(r2);
    std::vector<std::vector<F>> rows;
    std::vector<F> rhs;
    auto equation = [&] {
        rows.emplace_back(unknowns, F::zero());
        rhs.push_back(F::zero());
        return rows.size() - 1;
    };

    // lambda1 S = lambda2
    for (std::size_t j = 0; j < n; ++j) {
        auto e = equation();
        for (std::size_t i = 0; i < n; ++i)
            rows[e][var(i, j)] += a.lambda()(0, i);
        rhs[e] = b.lambda()(0, j);
    }
    // S mu2 - mu1 S = 0
    for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
        const auto& m1 = a.mu(s);
        const auto& m2 = b.mu(s);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto e = equation();
                for (std::size_t k = 0; k < n; ++k) {
                    rows[e][var(i, k)] += m2(k, j);
                    rows[e][var(k, j)] -= m1(i, k);
                }
            }
    }
    // S gamma2 = gamma1
    for (std::size_t i = 0; i < n; ++i) {
        auto e = equation();
        for (std::size_t k = 0; k < n; ++k)
            rows[e][var(i, k)] += b.gamma()(k, 0);
        rhs[e] = a.gamma()(i, 0);
    }

    std::vector<F> flat;
    for (auto& r : rows)
        flat.insert(flat.end(), r.begin(), r.end());
    Matrix<F> system(rows.size(), unknowns, std::move(flat));
    auto sol = solve_linear(system, std::span<const F>(rhs));
    if (!sol)
        return std::nullopt;
    Matrix<F> s(n, n, std::move(*sol));
    if (determinant_over_field(s).is_zero())
        return std::nullopt;
    return s;
}

/// True when some S invertible over K conjugates r1 into r2. Both inputs must
/// be minimal over F, which makes the conjugator over F unique; the answer
/// is then whether that matrix has entries in K and a unit determinant.
template <BezoutDomain R>
bool k_isomorphic(const LinearRepresentation<R>& r1, const LinearRepresentation<R>& r2) {
    auto s = conjugator(r1, r2);
    if (!s)
        return false;
    for (const auto& x : s->data())
        if (!in_ring<R>(x))
            return false;
    auto det = determinant_over_field(*s);
    return in_ring<R>(det) && is_unit(from_fraction<R>(det));
}

} // namespace kmin
