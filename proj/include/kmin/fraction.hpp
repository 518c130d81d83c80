#pragma once

/**
 * @file fraction.hpp
 * @brief Field of fractions of a Bezout domain.
 *
 * A Fraction is always normalized: the numerator and denominator are coprime
 * (their gcd is 1) and the denominator is a canonical associate. Zero is 0/1.
 *
 * A field is itself a (trivial) Bezout domain, so Fraction<R> models the ring
 * contract as well: every nonzero element is a unit and gcd(a, b) == 1 unless
 * both are zero. This lets the minimization pipeline run unchanged over the
 * rationals, where it reduces to classical minimization over a field.
 */

#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "errors.hpp"
#include "integer.hpp"
#include "ring.hpp"

namespace kmin {

template <class R>
class Fraction {
public:
    using ring_type = R;

    Fraction() : num_(R::zero()), den_(R::one()) {}
    Fraction(R num) : num_(std::move(num)), den_(R::one()) {}
    Fraction(long long v) requires std::is_constructible_v<R, long long> : num_(R(v)), den_(R::one()) {}
    Fraction(R num, R den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static Fraction zero() { return Fraction(); }
    static Fraction one() { return Fraction(R::one()); }

    const R& numerator() const { return num_; }
    const R& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the value lies in the underlying ring.
    bool is_integral() const { return is_unit(den_); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        if (a.den_ == b.den_)
            return Fraction(a.num_ + b.num_, a.den_);
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.is_zero())
            throw DivisionByZero();
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    Fraction operator-() const {
        Fraction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }

    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    // Canonical denominators are positive for Integer, so cross-multiplying
    // preserves order.
    friend bool operator<(const Fraction& a, const Fraction& b) requires std::is_same_v<R, Integer> {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    /// "n", "n/d", or "(n)/(d)" where n and d use R's syntax.
    static Fraction parse(std::string_view text) {
        text = trim(text);
        try {
            return Fraction(R::parse(text));
        } catch (const ParseError&) {
        }
        int depth = 0;
        std::size_t split = std::string_view::npos;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '(')
                ++depth;
            else if (text[i] == ')')
                --depth;
            else if (text[i] == '/' && depth == 0)
                split = i;
        }
        if (split == std::string_view::npos)
            throw ParseError("cannot parse fraction '" + std::string(text) + "'");
        R num = R::parse(strip_parens(text.substr(0, split)));
        R den = R::parse(strip_parens(text.substr(split + 1)));
        if (den.is_zero())
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Fraction(std::move(num), std::move(den));
    }

private:
    void normalize() {
        if (den_.is_zero())
            throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = R::one();
            return;
        }
        R g = gcd(num_, den_);
        if (!is_unit(g)) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        R u = canonical_unit(den_);
        num_ = num_ * u;
        den_ = den_ * u;
    }

    static std::string_view trim(std::string_view s) {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return s;
    }
    static std::string_view strip_parens(std::string_view s) {
        s = trim(s);
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
            return s.substr(1, s.size() - 2);
        return s;
    }

    R num_;
    R den_;
};

template <class R>
std::string to_string(const Fraction<R>& a) {
    if (is_unit(a.denominator()))
        return to_string(a.numerator());
    auto wrap = [](std::string s) {
        bool compound = s.find_first_of("+*X", 1) != std::string::npos ||
                        s.find('-', 1) != std::string::npos || s.find('/') != std::string::npos;
        return compound ? "(" + s + ")" : s;
    };
    return wrap(to_string(a.numerator())) + "/" + wrap(to_string(a.denominator()));
}

template <class R>
bool is_unit(const Fraction<R>& a) {
    return !a.is_zero();
}

template <class R>
Fraction<R> canonical_unit(const Fraction<R>& a) {
    return a.is_zero() ? Fraction<R>::one() : Fraction<R>::one() / a;
}

template <class R>
Fraction<R> exact_divide(const Fraction<R>& a, const Fraction<R>& b) {
    return a / b;
}

template <class R>
GcdResult<Fraction<R>> extended_gcd(const Fraction<R>& a, const Fraction<R>& b) {
    using F = Fraction<R>;
    if (!a.is_zero())
        return {F::one(), F::one() / a, F::zero()};
    if (!b.is_zero())
        return {F::one(), F::zero(), F::one() / b};
    return {F::zero(), F::zero(), F::zero()};
}

using Rational = Fraction<Integer>;

template <>
inline constexpr std::string_view ring_tag<Rational> = "rat";

template <class T>
struct is_fraction : std::false_type {};
template <class R>
struct is_fraction<Fraction<R>> : std::true_type {};

namespace detail {
template <class R>
struct fraction_field {
    using type = Fraction<R>;
};
template <class R>
struct fraction_field<Fraction<R>> {
    using type = Fraction<R>;
};
} // namespace detail

/// Fraction field of R; a field is its own fraction field.
template <class R>
using fraction_field_t = typename detail::fraction_field<R>::type;

template <BezoutDomain R>
fraction_field_t<R> to_fraction(const R& a) {
    return fraction_field_t<R>(a);
}

/// Inverse of to_fraction. Throws InexactDivision when the value is not in R.
template <BezoutDomain R>
R from_fraction(const fraction_field_t<R>& a) {
    if constexpr (is_fraction<R>::value) {
        return a;
    } else {
        return exact_divide(a.numerator(), a.denominator());
    }
}

/// Embedding of an element of F that is known to lie in R; false otherwise.
template <BezoutDomain R>
bool in_ring(const fraction_field_t<R>& a) {
    if constexpr (is_fraction<R>::value)
        return true;
    else
        return a.is_integral();
}

} // namespace kmin
