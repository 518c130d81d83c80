#include <catch_amalgamated.hpp>

#include <kmin/kmin.hpp>

#include "generators.hpp"

using namespace kmin;
using kmin::testing::Rng;

namespace {

// Schoolbook extended Euclid on machine integers, independent of Integer.
struct SmallGcd {
    long long d, x, y;
};
SmallGcd schoolbook_xgcd(long long a, long long b) {
    if (b == 0)
        return {a, 1, 0};
    auto [d, x, y] = schoolbook_xgcd(b, a % b);
    return {d, y, x - (a / b) * y};
}

template <class R>
void check_bezout(const R& a, const R& b) {
    auto [d, alpha, beta] = extended_gcd(a, b);
    CHECK(alpha * a + beta * b == d);
    if (a.is_zero() && b.is_zero()) {
        CHECK(d.is_zero());
        return;
    }
    CHECK(canonical(d) == d);
    CHECK(exact_divide(a, d) * d == a);
    CHECK(exact_divide(b, d) * d == b);
}

template <class R>
void ring_axioms(Rng& rng, int trials) {
    using testing::random_scalar;
    for (int t = 0; t < trials; ++t) {
        R a = random_scalar<R>(rng), b = random_scalar<R>(rng), c = random_scalar<R>(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == R::zero());
        CHECK(a * R::one() == a);
        if (!a.is_zero() && !b.is_zero())
            CHECK(!(a * b).is_zero());
        check_bezout(a, b);
        if (!b.is_zero())
            CHECK(exact_divide(a * b, b) == a);
        CHECK(R::parse(to_string(a)) == a);
        CHECK(is_unit(canonical_unit(a)));
    }
}

} // namespace

TEST_CASE("extended gcd on integers", "[scalars]") {
    auto g = extended_gcd(Integer(0), Integer(5));
    CHECK(g.d == 5);
    CHECK(g.alpha == 0);
    CHECK(g.beta == 1);

    g = extended_gcd(Integer(-7), Integer(0));
    CHECK(g.d == 7);
    CHECK(g.alpha * Integer(-7) == 7);
    CHECK(g.beta == 0);

    auto oracle = schoolbook_xgcd(12, 8);
    REQUIRE(oracle.d == 4);
    REQUIRE(12 * oracle.x + 8 * oracle.y == 4);
    g = extended_gcd(Integer(12), Integer(8));
    CHECK(g.d == 4);
    CHECK(g.alpha * 12 + g.beta * 8 == 4);

    g = extended_gcd(Integer(0), Integer(0));
    CHECK(g.d == 0);
    CHECK(g.alpha == 0);
    CHECK(g.beta == 0);
}

TEST_CASE("gcd matches schoolbook Euclid", "[scalars]") {
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        long long a = testing::uniform(rng, -1000, 1000), b = testing::uniform(rng, -1000, 1000);
        auto oracle = schoolbook_xgcd(a, b);
        long long d = oracle.d < 0 ? -oracle.d : oracle.d;
        CHECK(extended_gcd(Integer(a), Integer(b)).d == d);
    }
}

TEST_CASE("integers have no overflow", "[scalars]") {
    Integer big = Integer::parse("123456789012345678901234567890");
    Integer sq = big * big;
    CHECK(to_string(sq) == "15241578753238836750495351562536198787501905199875019052100");
    CHECK(exact_divide(sq, big) == big);
    CHECK(extended_gcd(sq, big).d == big);
}

TEST_CASE("exact division", "[scalars]") {
    CHECK(exact_divide(Integer(12), Integer(4)) == 3);
    CHECK_THROWS_AS(exact_divide(Integer(12), Integer(8)), InexactDivision);
    CHECK_THROWS_AS(exact_divide(Integer(12), Integer(0)), DivisionByZero);
    CHECK_THROWS_AS(exact_divide(Rational(1), Rational(0)), DivisionByZero);
    CHECK_THROWS_AS(exact_divide(Polynomial::parse("X^2+1"), Polynomial::parse("X")), InexactDivision);

    // With Y = X^(1/2): (Y^2 + Y) / Y = Y + 1.
    auto q = exact_divide(FracPoly::parse("X + X^(1/2)"), FracPoly::parse("X^(1/2)"));
    CHECK(q == FracPoly::parse("X^(1/2) + 1"));
    CHECK(to_string(q) == "X^(1/2)+1");
    CHECK_THROWS_AS(exact_divide(FracPoly::parse("X^(1/3)"), FracPoly::parse("X^(1/2)")), InexactDivision);
}

TEST_CASE("units", "[scalars]") {
    CHECK(is_unit(Integer(-1)));
    CHECK(is_unit(Integer(1)));
    CHECK_FALSE(is_unit(Integer(2)));
    CHECK_FALSE(is_unit(Integer(0)));
    CHECK(is_unit(Rational(Integer(-3), Integer(7))));
    CHECK_FALSE(is_unit(Rational(0)));
    CHECK(is_unit(FracPoly(3)));
    CHECK_FALSE(is_unit(FracPoly::parse("X^(1/2)")));
    CHECK(is_unit(Polynomial::parse("-1/2")));
    CHECK_FALSE(is_unit(Polynomial::parse("X")));
}

TEST_CASE("canonical associates", "[scalars]") {
    CHECK(canonical(Integer(-6)) == 6);
    CHECK(canonical(Polynomial::parse("2*X^2 - 4")) == Polynomial::parse("X^2 - 2"));
    CHECK(canonical(FracPoly::parse("3*X^(2/3) + 1")) == FracPoly::parse("X^(2/3) + 1/3"));
    CHECK(canonical(Rational(Integer(-5), Integer(3))) == Rational(1));
    CHECK(canonical_unit(Integer(0)) == 1);
}

TEST_CASE("rational normalization and gcd", "[scalars]") {
    Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(to_string(r) == "-3/2");
    CHECK(Rational::parse("-3/2") == r);
    CHECK(Rational::parse("4") == Rational(4));
    CHECK(extended_gcd(Rational(0), Rational(5)).d == Rational(1));
    CHECK(extended_gcd(Rational(0), Rational(0)).d == Rational(0));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
}

TEST_CASE("polynomial Euclid", "[scalars]") {
    auto a = Polynomial::parse("X^3 - 1");
    auto b = Polynomial::parse("X^2 - 1");
    auto g = extended_gcd(a, b);
    CHECK(g.d == Polynomial::parse("X - 1"));
    CHECK(g.alpha * a + g.beta * b == g.d);
    CHECK(to_string(Polynomial::parse("-X^2 + 1/2*X - 3")) == "-X^2+1/2*X-3");
    CHECK_THROWS_AS(Polynomial::parse("X^(1/2)"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("X +"), ParseError);
}

TEST_CASE("ring axioms on random elements", "[scalars][property]") {
    Rng rng(2024);
    SECTION("integers") { ring_axioms<Integer>(rng, 200); }
    SECTION("rationals") { ring_axioms<Rational>(rng, 200); }
    SECTION("polynomials") { ring_axioms<Polynomial>(rng, 150); }
    SECTION("fractional-power polynomials") { ring_axioms<FracPoly>(rng, 150); }
}

TEST_CASE("fractions agree with ring arithmetic under embedding", "[scalars][property]") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        Integer a = testing::random_integer(rng, -50, 50), b = testing::random_integer(rng, -50, 50);
        CHECK(Rational(a) + Rational(b) == Rational(a + b));
        CHECK(Rational(a) * Rational(b) == Rational(a * b));
        CHECK(-Rational(a) == Rational(-a));
        if (!b.is_zero())
            CHECK(Rational(a, b) * Rational(b) == Rational(a));
    }
    Polynomial p = Polynomial::parse("X+1"), q = Polynomial::parse("X-1");
    Fraction<Polynomial> f(p * q, q * q);
    CHECK(f.numerator() == p);
    CHECK(f.denominator() == q);
    CHECK(Fraction<Polynomial>::parse(to_string(f)) == f);
}

TEST_CASE("fractional-power gcd does not depend on the embedding multiple", "[scalars][property]") {
    Rng rng(99);
    for (int t = 0; t < 150; ++t) {
        FracPoly a = testing::random_fracpoly(rng), b = testing::random_fracpoly(rng);
        Integer l = common_exponent_denominator(a, b);
        auto g1 = extended_gcd_embedded(a, b, l);
        auto g2 = extended_gcd_embedded(a, b, l * 2);
        auto g3 = extended_gcd_embedded(a, b, l * 3);
        CHECK(g1.d == g2.d);
        CHECK(g1.d == g3.d);
        CHECK(g2.alpha * a + g2.beta * b == g2.d);
    }
    CHECK_THROWS_AS(extended_gcd_embedded(FracPoly::parse("X^(1/2)"), FracPoly(1), Integer(3)), InexactDivision);
}

TEST_CASE("fractional-power parsing", "[scalars]") {
    auto p = FracPoly::parse("2*X^(1/2)+1");
    CHECK(p.terms().size() == 2);
    CHECK(to_string(p) == "2*X^(1/2)+1");
    CHECK(to_string(FracPoly::parse("X^(4/2)")) == "X^2");
    CHECK(to_string(FracPoly::parse("X^(1/2) - X^(1/2)")) == "0");
    CHECK(FracPoly::parse("X^(2/3)").exponent_denominator_lcm() == 3);
}
