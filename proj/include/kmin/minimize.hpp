#pragma once

/**
 * @file minimize.hpp
 * @brief Minimization of K-automata over an integral Bezout domain K.
 *
 * prefix() explores words in short-lex order and keeps a word x when its
 * vector lambda mu(x) is not already a K-combination of the vectors kept so
 * far. A kept word goes to Z when the vector is F-dependent on the others but
 * only up to a non-unit scalar (alpha lambda mu(x) = sum alpha_i lambda mu(x_i)
 * with alpha not dividing every alpha_i): it enlarges the module without
 * raising the rank. The result X is prefix-closed, lambda mu(X) generates the
 * reachable module and lambda mu(X \ Z) is free over F.
 *
 * left_reduction() then turns the kept vectors into a stair basis T of the
 * reachable module, one word at a time, maintaining lambda = I T. Since the
 * module is stable under every mu(s), the reduced transitions are the unique
 * solutions of T mu(s) = mu_r(s) T, and (I, mu_r, T gamma) realizes the same
 * series. right_reduction() is the same process on the transpose and
 * minimize() runs one of each.
 */

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "automaton.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "ring.hpp"
#include "word.hpp"

namespace kmin {

/// Bounds the number of candidate words prefix() may examine. Termination is
/// guaranteed over Noetherian rings such as Z and Q[X]; for other Bezout
/// domains the budget keeps the process total.
struct StepBudget {
    std::size_t max_words_processed = 10000;
};

/// Working triple (X, Y, Z) of the exploration plus the stair basis of the
/// module generated by lambda mu(X).
template <BezoutDomain R>
struct PrefixState {
    std::vector<Word> X;
    WordSet Y;
    WordSet Z;
    Matrix<R> basis;
    std::map<Word, std::vector<R>, ShortLex> vectors;

    static PrefixState initial(std::size_t dim) {
        PrefixState s;
        s.Y.insert(Word{});
        s.basis = Matrix<R>(0, dim);
        return s;
    }
};

template <BezoutDomain R>
struct PrefixResult {
    std::vector<Word> X; ///< short-lex order, prefix-closed
    WordSet Z;
    Matrix<R> stair_basis;
    std::map<Word, std::vector<R>, ShortLex> vectors; ///< lambda mu(x) for x in X

    bool in_Z(const Word& w) const { return Z.contains(w); }

    std::vector<Word> independent_words() const {
        std::vector<Word> out;
        for (const auto& x : X)
            if (!in_Z(x))
                out.push_back(x);
        return out;
    }

    /// The prefix code C = (X A + epsilon) \ X, so that A* = C* X.
    std::vector<Word> induced_code(std::size_t alphabet_size) const {
        WordSet xs(X.begin(), X.end());
        WordSet c;
        if (!xs.contains(Word{}))
            c.insert(Word{});
        for (const auto& x : X)
            for (std::size_t s = 0; s < alphabet_size; ++s)
                if (auto w = append(x, s); !xs.contains(w))
                    c.insert(std::move(w));
        return {c.begin(), c.end()};
    }
};

/// One step of the exploration for the candidate y taken from Y.
template <BezoutDomain R>
PrefixState<R> process_candidate(const LinearRepresentation<R>& rep, const Word& y, PrefixState<R> state) {
    auto pos = state.Y.find(y);
    if (pos == state.Y.end())
        throw PreconditionViolation("candidate word is not in Y");
    state.Y.erase(pos);

    std::vector<R> v;
    if (!y.empty()) {
        Word parent(y.begin(), y.end() - 1);
        if (auto it = state.vectors.find(parent); it != state.vectors.end())
            v = it->second * rep.mu(y.back());
    }
    if (v.empty() && rep.dim() > 0)
        v = lambda_mu(rep, y);

    auto outcome = membership(state.basis, v);
    if (std::holds_alternative<Member<R>>(outcome))
        return state;

    state.X.push_back(y);
    if (std::holds_alternative<FractionalMember<R>>(outcome))
        state.Z.insert(y);
    for (std::size_t s = 0; s < rep.alphabet().size(); ++s)
        state.Y.insert(append(y, s));
    state.basis = triang(vstack(state.basis, Matrix<R>::row_vector(v))).stair;
    state.vectors.emplace(y, std::move(v));
    return state;
}

template <BezoutDomain R>
PrefixResult<R> prefix(const LinearRepresentation<R>& rep, StepBudget budget = {}) {
    auto state = PrefixState<R>::initial(rep.dim());
    std::size_t processed = 0;
    while (!state.Y.empty()) {
        if (++processed > budget.max_words_processed)
            throw BudgetExceeded(budget.max_words_processed);
        Word y = *state.Y.begin();
        state = process_candidate(rep, y, std::move(state));
    }
    return {std::move(state.X), std::move(state.Z), std::move(state.basis), std::move(state.vectors)};
}

/// Everything left_reduction() computes, for inspection.
template <BezoutDomain R>
struct LeftReduction {
    LinearRepresentation<R> result;
    PrefixResult<R> prefix;
    Matrix<R> stair;   ///< T, rows form a basis of the reachable module
    Matrix<R> weights; ///< I, with lambda = I T
};

namespace detail {

// Replaces T by the stair form of `stacked` (T with rows appended) and keeps
// lambda = I T: with G stacked = [T'; 0], lambda = (I | 0) G^-1 [T'; 0], and
// the columns of (I | 0) G^-1 that face the zero rows are dropped.
template <BezoutDomain R>
void restack(Matrix<R>& weights, Matrix<R>& stair, const Matrix<R>& stacked) {
    auto tr = triang(stacked);
    Matrix<R> padded = hstack(weights, Matrix<R>(1, stacked.rows() - weights.cols()));
    weights = (padded * invert_unimodular(tr.transform)).left_columns(tr.stair.rows());
    stair = std::move(tr.stair);
}

template <BezoutDomain R>
void check_weights(const LinearRepresentation<R>& rep, const Matrix<R>& weights, const Matrix<R>& stair) {
#ifndef NDEBUG
    if (!(weights * stair == rep.lambda()))
        throw InternalError("lambda = I T violated during left reduction");
#else
    (void)rep, (void)weights, (void)stair;
#endif
}

} // namespace detail

template <BezoutDomain R>
LeftReduction<R> left_reduction_trace(const LinearRepresentation<R>& rep, StepBudget budget = {}) {
    auto pr = prefix(rep, budget);

    Matrix<R> weights = Matrix<R>::identity(1);
    Matrix<R> stair;
    detail::restack(weights, stair, rep.lambda());
    detail::check_weights(rep, weights, stair);

    for (const auto& x : pr.X) {
        // lambda mu(epsilon) = lambda is already in T
        if (x.empty())
            continue;
        const std::size_t before = stair.rows();
        detail::restack(weights, stair, vstack(stair, Matrix<R>::row_vector(pr.vectors.at(x))));
        detail::check_weights(rep, weights, stair);
        // words of Z enlarge the module without raising the rank
        const std::size_t expected = before + (pr.in_Z(x) ? 0 : 1);
        if (stair.rows() != expected)
            throw InternalError("rank of the stair basis disagrees with the prefix set");
    }
    if (stair.rows() != pr.independent_words().size())
        throw InternalError("stair basis size differs from |X \\ Z|");

    if (stair.rows() > 0 && solve_stair(stair, rep.lambda().row_copy(0)) != weights.row_copy(0))
        throw InternalError("final weights disagree with solve_stair(T, lambda)");

    const std::size_t r = stair.rows();
    std::vector<Matrix<R>> mu;
    for (std::size_t s = 0; s < rep.alphabet().size(); ++s) {
        Matrix<R> image = stair * rep.mu(s);
        Matrix<R> reduced(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            auto c = solve_stair(stair, image.row(i));
            for (std::size_t j = 0; j < r; ++j)
                reduced(i, j) = std::move(c[j]);
        }
        mu.push_back(std::move(reduced));
    }
    Matrix<R> gamma = stair * rep.gamma();
    return {LinearRepresentation<R>(rep.alphabet(), weights, std::move(mu), std::move(gamma)),
            std::move(pr), std::move(stair), std::move(weights)};
}

template <BezoutDomain R>
LinearRepresentation<R> left_reduction(const LinearRepresentation<R>& rep, StepBudget budget = {}) {
    return left_reduction_trace(rep, budget).result;
}

template <BezoutDomain R>
LinearRepresentation<R> right_reduction(const LinearRepresentation<R>& rep, StepBudget budget = {}) {
    return transpose(left_reduction(transpose(rep), budget));
}

template <BezoutDomain R>
LinearRepresentation<R> minimize(const LinearRepresentation<R>& rep, StepBudget budget = {}) {
    return right_reduction(left_reduction(rep, budget), budget);
}

} // namespace kmin
