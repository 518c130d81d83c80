#pragma once

// Shared text syntax of the two polynomial rings:
//   poly  := term (('+' | '-') term)*
//   term  := coef ['*' mono] | mono
//   coef  := digits ['/' digits]
//   mono  := 'X' ['^' exp]
//   exp   := digits | '(' digits ['/' digits] ')'
// Whitespace is ignored. Terms with equal exponents are summed.

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "fraction.hpp"

namespace kmin::detail {

class TermParser {
public:
    explicit TermParser(std::string_view text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s_.push_back(c);
    }

    /// exponent -> coefficient, zero coefficients removed.
    std::map<Rational, Rational> parse() {
        if (s_.empty())
            fail("empty polynomial");
        std::map<Rational, Rational> terms;
        bool first = true;
        while (pos_ < s_.size() || first) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = s_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [exp, coef] = term();
            terms[exp] += negative ? -coef : coef;
        }
        std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
        return terms;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " in polynomial '" + s_ + "'");
    }

    Integer digits() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return Integer::parse(std::string_view(s_).substr(start, pos_ - start));
    }

    Rational ratio() {
        Integer num = digits();
        if (peek() == '/') {
            ++pos_;
            Integer den = digits();
            if (den.is_zero())
                fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Rational exponent() {
        if (peek() != '^')
            return Rational(1);
        ++pos_;
        if (peek() == '(') {
            ++pos_;
            Rational e = ratio();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return e;
        }
        return Rational(digits());
    }

    std::pair<Rational, Rational> term() {
        Rational coef(1);
        bool has_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = ratio();
            has_coef = true;
            if (peek() == '*')
                ++pos_;
            else if (peek() != 'X')
                return {Rational(0), coef};
        }
        if (peek() != 'X')
            fail(has_coef ? "expected 'X'" : "expected a term");
        ++pos_;
        return {exponent(), coef};
    }

    std::string s_;
    std::size_t pos_ = 0;
};

inline std::string format_exponent(const Rational& e) {
    if (e == Rational(1))
        return "X";
    if (e.is_integral())
        return "X^" + to_string(e);
    return "X^(" + to_string(e) + ")";
}

/// Terms in descending exponent order; "0" for the empty map.
template <class Exp>
std::string format_terms(const std::map<Exp, Rational>& terms, auto&& exponent_of) {
    if (terms.empty())
        return "0";
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Rational e = exponent_of(it->first);
        Rational c = it->second;
        bool negative = c.numerator().sign() < 0;
        if (negative)
            c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        if (e.is_zero()) {
            out += to_string(c);
        } else {
            if (!(c == Rational(1)))
                out += to_string(c) + "*";
            out += format_exponent(e);
        }
    }
    return out;
}

} // namespace kmin::detail
