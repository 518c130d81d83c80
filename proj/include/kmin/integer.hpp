#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "ring.hpp"

namespace kmin {

/// Arbitrary-precision signed integer. The canonical associate is the
/// non-negative one.
class Integer {
public:
    using value_type = boost::multiprecision::cpp_int;

    Integer() = default;
    Integer(long long v) : v_(v) {}
    explicit Integer(value_type v) : v_(std::move(v)) {}

    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }

    const value_type& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(value_type(a.v_ + b.v_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(value_type(a.v_ - b.v_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(value_type(a.v_ * b.v_)); }
    Integer operator-() const { return Integer(value_type(-v_)); }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend bool operator<(const Integer& a, const Integer& b) { return a.v_ < b.v_; }
    friend bool operator>(const Integer& a, const Integer& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Integer& a, const Integer& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Integer& a, const Integer& b) { return a.v_ >= b.v_; }

    /// Optional sign followed by decimal digits.
    static Integer parse(std::string_view text) {
        std::size_t i = 0;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = text.size();
        while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1])))
            --j;
        text = text.substr(i, j - i);
        std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
        if (start == text.size())
            throw ParseError("expected an integer, got '" + std::string(text) + "'");
        for (std::size_t k = start; k < text.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(text[k])))
                throw ParseError("expected an integer, got '" + std::string(text) + "'");
        value_type v(std::string(text.substr(start)));
        return Integer(text[0] == '-' ? value_type(-v) : v);
    }

private:
    value_type v_;
};

template <>
inline constexpr std::string_view ring_tag<Integer> = "int";

inline std::string to_string(const Integer& a) { return a.value().str(); }

inline bool is_unit(const Integer& a) { return a == 1 || a == -1; }

inline Integer canonical_unit(const Integer& a) { return a.sign() < 0 ? Integer(-1) : Integer(1); }

inline Integer exact_divide(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw DivisionByZero();
    Integer::value_type q, r;
    boost::multiprecision::divide_qr(a.value(), b.value(), q, r);
    if (!r.is_zero())
        throw InexactDivision(to_string(b) + " does not divide " + to_string(a));
    return Integer(std::move(q));
}

inline GcdResult<Integer> extended_gcd(const Integer& a, const Integer& b) {
    using V = Integer::value_type;
    V r0 = a.value(), r1 = b.value();
    V s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        V q = r0 / r1;
        V tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0.is_zero())
        return {Integer(0), Integer(0), Integer(0)};
    if (r0.sign() < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    return {Integer(r0), Integer(s0), Integer(t0)};
}

} // namespace kmin
