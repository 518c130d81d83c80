#pragma once

// The two minimal automata over a single letter a that realize x*a without
// being isomorphic over K when x is not a unit, plus a few derived fixtures.

#include <kmin/kmin.hpp>

namespace kmin::testing {

/// ((1 0), mu(a) = [[0 x] [0 0]], (0 1)^t)
template <class R>
LinearRepresentation<R> a1(const R& x) {
    const R o = R::zero(), i = R::one();
    return {Alphabet({"a"}), Matrix<R>{{i, o}}, {Matrix<R>{{o, x}, {o, o}}}, Matrix<R>{{o}, {i}}};
}

/// ((x 0), mu(a) = [[0 1] [0 0]], (0 1)^t)
template <class R>
LinearRepresentation<R> a2(const R& x) {
    const R o = R::zero(), i = R::one();
    return {Alphabet({"a"}), Matrix<R>{{x, o}}, {Matrix<R>{{o, i}, {o, o}}}, Matrix<R>{{o}, {i}}};
}

/// lambda = (1 1), mu(a) = [[2 0] [0 0]], mu(b) = [[1 0] [0 0]], gamma = (1 1)^t.
/// lambda mu(b) = (1 0) is half of lambda mu(a) = (2 0): b lands in Z.
inline LinearRepresentation<Integer> two_letter() {
    using M = Matrix<Integer>;
    return {Alphabet({"a", "b"}), M{{1, 1}}, {M{{2, 0}, {0, 0}}, M{{1, 0}, {0, 0}}}, M{{1}, {1}}};
}

/// A1(2) plus a third state that carries weight but is never reached.
inline LinearRepresentation<Integer> a1_unreachable_padding() {
    using M = Matrix<Integer>;
    return {Alphabet({"a"}), M{{1, 0, 0}}, {M{{0, 2, 0}, {0, 0, 0}, {0, 1, 3}}}, M{{0}, {1}, {5}}};
}

/// A1(2) plus a third state that is reached but never reaches gamma.
inline LinearRepresentation<Integer> a1_coreachable_padding() {
    using M = Matrix<Integer>;
    return {Alphabet({"a"}), M{{1, 0, 4}}, {M{{0, 2, 1}, {0, 0, 0}, {0, 0, 3}}}, M{{0}, {1}, {0}}};
}

/// One state, every coefficient 1: the constant series 1 on the free monoid.
template <class R>
LinearRepresentation<R> constant_one(const Alphabet& sigma) {
    std::vector<Matrix<R>> mu(sigma.size(), Matrix<R>{{R::one()}});
    return {sigma, Matrix<R>{{R::one()}}, std::move(mu), Matrix<R>{{R::one()}}};
}

template <class R>
LinearRepresentation<R> empty_automaton(const Alphabet& sigma) {
    std::vector<Matrix<R>> mu(sigma.size(), Matrix<R>(0, 0));
    return {sigma, Matrix<R>(1, 0), std::move(mu), Matrix<R>(0, 1)};
}

} // namespace kmin::testing
