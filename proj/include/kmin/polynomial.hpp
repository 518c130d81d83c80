#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "fraction.hpp"
#include "polynomial_text.hpp"
#include "ring.hpp"

namespace kmin {

/// Univariate polynomial over the rationals, a Euclidean domain.
/// Canonical associates are monic.
class Polynomial {
public:
    using Terms = std::map<std::size_t, Rational>;

    Polynomial() = default;
    Polynomial(long long c) : Polynomial(Rational(c)) {}
    Polynomial(const Rational& c) {
        if (!c.is_zero())
            terms_.emplace(0, c);
    }
    explicit Polynomial(Terms terms) : terms_(std::move(terms)) {
        std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    }

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(1); }
    /// c * X^degree
    static Polynomial monomial(const Rational& c, std::size_t degree) { return Polynomial(Terms{{degree, c}}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    Rational leading() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }
    Rational coefficient(std::size_t degree) const {
        auto it = terms_.find(degree);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& kv : r.terms_)
            kv.second = -kv.second;
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero())
            throw DivisionByZero();
        Polynomial q, r = a;
        const std::size_t db = b.degree();
        const Rational lb = b.leading();
        while (!r.is_zero() && r.degree() >= db) {
            Polynomial t = monomial(r.leading() / lb, r.degree() - db);
            q += t;
            r -= t * b;
        }
        return {std::move(q), std::move(r)};
    }

    static Polynomial parse(std::string_view text) {
        Terms terms;
        for (const auto& [e, c] : detail::TermParser(text).parse()) {
            if (!e.is_integral())
                throw ParseError("fractional exponent in polynomial '" + std::string(text) + "'");
            terms.emplace(static_cast<std::size_t>(e.numerator().value()), c);
        }
        return Polynomial(std::move(terms));
    }

private:
    void add_term(std::size_t e, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        } else if (c.is_zero()) {
            terms_.erase(it);
        }
    }

    Terms terms_;
};

template <>
inline constexpr std::string_view ring_tag<Polynomial> = "poly";

inline std::string to_string(const Polynomial& p) {
    return detail::format_terms(p.terms(), [](std::size_t e) { return Rational(static_cast<long long>(e)); });
}

inline bool is_unit(const Polynomial& p) { return !p.is_zero() && p.degree() == 0; }

inline Polynomial canonical_unit(const Polynomial& p) {
    return p.is_zero() ? Polynomial::one() : Polynomial(Rational(1) / p.leading());
}

inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw InexactDivision(to_string(b) + " does not divide " + to_string(a));
    return q;
}

inline GcdResult<Polynomial> extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero())
        return {Polynomial(), Polynomial(), Polynomial()};
    Polynomial u = canonical_unit(r0);
    return {r0 * u, s0 * u, t0 * u};
}

} // namespace kmin
