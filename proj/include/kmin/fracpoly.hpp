#pragma once

/**
 * @file fracpoly.hpp
 * @brief Polynomials with non-negative rational exponents.
 *
 * F[X^q : q in Q, q >= 0] with F = Q. It is a Bezout domain that is not
 * Noetherian: the ideal generated by all X^q with q > 0 is not finitely
 * generated. Any finite set of elements lives inside Q[Y] with Y = X^(1/L),
 * L a common multiple of the exponent denominators, and gcd, division and
 * Bezout coefficients are computed there and mapped back. The result does not
 * depend on which common multiple is used.
 */

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "fraction.hpp"
#include "polynomial.hpp"
#include "polynomial_text.hpp"
#include "ring.hpp"

namespace kmin {

class FracPowerPolynomial {
public:
    /// exponent -> coefficient, exponents >= 0, no zero coefficients
    using Terms = std::map<Rational, Rational>;

    FracPowerPolynomial() = default;
    FracPowerPolynomial(long long c) : FracPowerPolynomial(Rational(c)) {}
    FracPowerPolynomial(const Rational& c) {
        if (!c.is_zero())
            terms_.emplace(Rational(0), c);
    }
    explicit FracPowerPolynomial(Terms terms) : terms_(std::move(terms)) {
        std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
        for (const auto& kv : terms_)
            if (kv.first < Rational(0))
                throw ParseError("negative exponent " + to_string(kv.first));
    }

    static FracPowerPolynomial zero() { return {}; }
    static FracPowerPolynomial one() { return FracPowerPolynomial(1); }
    static FracPowerPolynomial monomial(const Rational& c, const Rational& exponent) {
        return FracPowerPolynomial(Terms{{exponent, c}});
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational leading() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }
    Rational degree() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->first; }

    /// Least common multiple of the exponent denominators (1 for constants).
    Integer exponent_denominator_lcm() const {
        Integer l = 1;
        for (const auto& kv : terms_)
            l = lcm(l, kv.first.denominator());
        return l;
    }

    /// Image in Q[Y], Y = X^(1/L). L must clear every exponent denominator.
    Polynomial embed(const Integer& L) const {
        Polynomial::Terms out;
        for (const auto& [e, c] : terms_) {
            Rational scaled = e * Rational(L);
            if (!scaled.is_integral())
                throw InexactDivision("embedding multiple " + to_string(L) + " does not clear exponent " +
                                      to_string(e));
            out.emplace(static_cast<std::size_t>(scaled.numerator().value()), c);
        }
        return Polynomial(std::move(out));
    }

    static FracPowerPolynomial from_embedded(const Polynomial& p, const Integer& L) {
        Terms out;
        for (const auto& [e, c] : p.terms())
            out.emplace(Rational(Integer(static_cast<long long>(e)), L), c);
        return FracPowerPolynomial(std::move(out));
    }

    friend FracPowerPolynomial operator+(const FracPowerPolynomial& a, const FracPowerPolynomial& b) {
        Terms t = a.terms_;
        for (const auto& [e, c] : b.terms_)
            t[e] += c;
        return FracPowerPolynomial(std::move(t));
    }
    FracPowerPolynomial operator-() const {
        FracPowerPolynomial r = *this;
        for (auto& kv : r.terms_)
            kv.second = -kv.second;
        return r;
    }
    friend FracPowerPolynomial operator-(const FracPowerPolynomial& a, const FracPowerPolynomial& b) {
        return a + (-b);
    }
    friend FracPowerPolynomial operator*(const FracPowerPolynomial& a, const FracPowerPolynomial& b) {
        Terms t;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                t[ea + eb] += ca * cb;
        return FracPowerPolynomial(std::move(t));
    }
    FracPowerPolynomial& operator+=(const FracPowerPolynomial& o) { return *this = *this + o; }
    FracPowerPolynomial& operator*=(const FracPowerPolynomial& o) { return *this = *this * o; }
    friend bool operator==(const FracPowerPolynomial&, const FracPowerPolynomial&) = default;

    static FracPowerPolynomial parse(std::string_view text) {
        auto terms = detail::TermParser(text).parse();
        for (const auto& kv : terms)
            if (kv.first < Rational(0))
                throw ParseError("negative exponent in '" + std::string(text) + "'");
        return FracPowerPolynomial(std::move(terms));
    }

private:
    Terms terms_;
};

using FracPoly = FracPowerPolynomial;

template <>
inline constexpr std::string_view ring_tag<FracPowerPolynomial> = "fracpoly";

inline std::string to_string(const FracPowerPolynomial& p) {
    return detail::format_terms(p.terms(), [](const Rational& e) { return e; });
}

inline bool is_unit(const FracPowerPolynomial& p) {
    return p.terms().size() == 1 && p.terms().begin()->first.is_zero();
}

inline FracPowerPolynomial canonical_unit(const FracPowerPolynomial& p) {
    return p.is_zero() ? FracPowerPolynomial::one() : FracPowerPolynomial(Rational(1) / p.leading());
}

inline Integer common_exponent_denominator(const FracPowerPolynomial& a, const FracPowerPolynomial& b) {
    return lcm(a.exponent_denominator_lcm(), b.exponent_denominator_lcm());
}

inline FracPowerPolynomial exact_divide(const FracPowerPolynomial& a, const FracPowerPolynomial& b) {
    if (b.is_zero())
        throw DivisionByZero();
    Integer L = common_exponent_denominator(a, b);
    try {
        return FracPowerPolynomial::from_embedded(exact_divide(a.embed(L), b.embed(L)), L);
    } catch (const InexactDivision&) {
        throw InexactDivision(to_string(b) + " does not divide " + to_string(a));
    }
}

/// Extended gcd computed in Q[X^(1/L)] for a caller-chosen common multiple L
/// of the exponent denominators of a and b.
inline GcdResult<FracPowerPolynomial> extended_gcd_embedded(const FracPowerPolynomial& a,
                                                            const FracPowerPolynomial& b, const Integer& L) {
    auto g = extended_gcd(a.embed(L), b.embed(L));
    return {FracPowerPolynomial::from_embedded(g.d, L), FracPowerPolynomial::from_embedded(g.alpha, L),
            FracPowerPolynomial::from_embedded(g.beta, L)};
}

inline GcdResult<FracPowerPolynomial> extended_gcd(const FracPowerPolynomial& a, const FracPowerPolynomial& b) {
    return extended_gcd_embedded(a, b, common_exponent_denominator(a, b));
}

} // namespace kmin
