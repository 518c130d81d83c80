#pragma once

/**
 * @file ring.hpp
 * @brief Coefficient-ring contract.
 *
 * Every scalar type used by the library models an integral Bezout domain
 * with an effective extended gcd. The operations are free functions found
 * by ADL so that the concrete rings stay plain value types:
 *
 *   is_unit(a)          a has an inverse in the ring
 *   canonical_unit(a)   a unit u such that u*a is the canonical associate
 *                       (non-negative integer, monic polynomial, 1 in a field);
 *                       canonical_unit(0) == 1
 *   exact_divide(a, b)  q with q*b == a, or InexactDivision / DivisionByZero
 *   extended_gcd(a, b)  (d, alpha, beta) with alpha*a + beta*b == d, d canonical,
 *                       gcd(0, 0) == (0, 0, 0)
 *   to_string(a)        textual form accepted by R::parse
 */

#include <concepts>
#include <string>
#include <string_view>

namespace kmin {

template <class R>
struct GcdResult {
    R d;
    R alpha;
    R beta;
};

template <class R>
concept BezoutDomain = std::regular<R> && requires(const R& a, const R& b, std::string_view text) {
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { a.is_zero() } -> std::same_as<bool>;
    { is_unit(a) } -> std::same_as<bool>;
    { canonical_unit(a) } -> std::same_as<R>;
    { exact_divide(a, b) } -> std::same_as<R>;
    { extended_gcd(a, b) } -> std::same_as<GcdResult<R>>;
    { to_string(a) } -> std::same_as<std::string>;
    { R::parse(text) } -> std::same_as<R>;
};

/// Short name used by the document format ("int", "rat", "poly", "fracpoly").
template <class R>
inline constexpr std::string_view ring_tag = "?";

template <BezoutDomain R>
R canonical(const R& a) {
    return a * canonical_unit(a);
}

template <BezoutDomain R>
R gcd(const R& a, const R& b) {
    return extended_gcd(a, b).d;
}

/// Canonical least common multiple; lcm(0, x) == 0.
template <BezoutDomain R>
R lcm(const R& a, const R& b) {
    if (a.is_zero() || b.is_zero())
        return R::zero();
    return canonical(exact_divide(a * b, gcd(a, b)));
}

/// True when b | a. Zero divides only zero.
template <BezoutDomain R>
bool divides(const R& b, const R& a) {
    if (b.is_zero())
        return a.is_zero();
    return gcd(a, b) == canonical(b);
}

} // namespace kmin
