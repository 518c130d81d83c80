#include <catch_amalgamated.hpp>

#include <kmin/kmin.hpp>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace kmin;
using namespace kmin::testing;

namespace {

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

} // namespace

TEST_CASE("words", "[automaton]") {
    Alphabet ab({"a", "b"});
    CHECK(ab.parse_word("") == Word{});
    CHECK(ab.parse_word("abba") == Word{0, 1, 1, 0});
    CHECK_THROWS_AS(ab.parse_word("c"), UnknownSymbol);
    CHECK(ab.format_word(Word{1, 0}) == "ba");

    Alphabet named({"up", "down"});
    CHECK(named.parse_word("up,down,up") == Word{0, 1, 0});
    CHECK(named.format_word(Word{1, 1}) == "down,down");
    CHECK_THROWS_AS(named.parse_word("up,,down"), UnknownSymbol);

    CHECK_THROWS_AS(Alphabet({"a", "a"}), ShapeMismatch);
    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), ShapeMismatch);

    auto words = words_up_to(2, 2);
    REQUIRE(words.size() == 7);
    CHECK(words[0] == Word{});
    CHECK(words[1] == Word{0});
    CHECK(words[3] == Word{0, 0});
    CHECK(words[6] == Word{1, 1});
    CHECK(std::is_sorted(words.begin(), words.end(), ShortLex{}));
}

TEST_CASE("representation shapes are validated", "[automaton]") {
    using M = Matrix<Integer>;
    CHECK_THROWS_AS(LinearRepresentation<Integer>(Alphabet({"a"}), M{{1, 0}}, {M{{1}}}, M{{1}, {0}}), ShapeMismatch);
    CHECK_THROWS_AS(LinearRepresentation<Integer>(Alphabet({"a"}), M{{1}}, {}, M{{1}}), ShapeMismatch);
    CHECK_THROWS_AS(LinearRepresentation<Integer>(Alphabet({"a"}), M{{1}}, {M{{1}}}, M{{1, 1}}), ShapeMismatch);
}

TEST_CASE("behavior", "[automaton]") {
    auto r = a1(Integer(2));
    CHECK(behavior(r, Word{}) == 0);
    CHECK(behavior(r, Word{0}) == 2);
    CHECK(behavior(r, Word{0, 0}) == 0);
    CHECK(behavior(r, "a") == 2);
    CHECK_THROWS_AS(behavior(r, Word{1}), UnknownSymbol);
    CHECK_THROWS_AS(behavior(r, "b"), UnknownSymbol);
    CHECK(behavior(empty_automaton<Integer>(Alphabet({"a"})), "aaa") == 0);
}

TEST_CASE("behavior splits at any point", "[automaton][property]") {
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        auto r = random_automaton(rng);
        for (const auto& w : words_up_to(r.alphabet().size(), 4))
            for (std::size_t k = 0; k <= w.size(); ++k) {
                Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
                Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
                CHECK(dot<Integer>(lambda_mu(r, u), mu_gamma(r, v)) == behavior(r, w));
            }
    }
}

TEST_CASE("hadamard product", "[automaton]") {
    auto r = two_letter();
    auto id = hadamard(r, constant_one<Integer>(r.alphabet()));
    for (const auto& w : words_up_to(2, 4))
        CHECK(behavior(id, w) == behavior(r, w));

    auto p = hadamard(a1(Integer(2)), a1(Integer(3)));
    CHECK(p.dim() == 4);
    CHECK(behavior(p, "a") == 6);
    CHECK(behavior(p, "") == 0);

    auto zero_gamma = LinearRepresentation<Integer>(r.alphabet(), r.lambda(), r.mu(), Matrix<Integer>(2, 1));
    for (const auto& w : words_up_to(2, 3))
        CHECK(behavior(hadamard(r, zero_gamma), w) == 0);

    CHECK_THROWS_AS(hadamard(r, a1(Integer(2))), AlphabetMismatch);

    // state (i, j) sits at i * n2 + j: the 0 -> 1 transitions meet at (0, 0) -> (1, 1)
    CHECK(p.mu(0)(0, 3) == 6);
    CHECK(p.lambda() == Matrix<Integer>{{1, 0, 0, 0}});
}

TEST_CASE("hadamard, direct sum and transpose on random automata", "[automaton][property]") {
    Rng rng(21);
    for (int t = 0; t < 60; ++t) {
        auto r1 = random_automaton(rng, 3);
        auto r2 = random_automaton(rng, 3);
        if (!(r1.alphabet() == r2.alphabet()))
            continue;
        auto h = hadamard(r1, r2);
        auto s = direct_sum(r1, r2);
        auto tr = transpose(r1);
        CHECK(transpose(tr) == r1);
        for (const auto& w : words_up_to(r1.alphabet().size(), 4)) {
            CHECK(behavior(h, w) == behavior(r1, w) * behavior(r2, w));
            CHECK(behavior(s, w) == behavior(r1, w) + behavior(r2, w));
            CHECK(behavior(tr, w) == behavior(r1, reversed(w)));
        }
    }
}

TEST_CASE("transpose and direct sum examples", "[automaton]") {
    auto r = a1(Integer(2));
    CHECK(transpose(transpose(r)) == r);
    CHECK(behavior(transpose(r), "a") == 2);
    auto one = constant_one<Integer>(Alphabet({"a"}));
    CHECK(transpose(one) == one);

    auto e = empty_automaton<Integer>(Alphabet({"a"}));
    auto s = direct_sum(r, e);
    CHECK(s.dim() == 2);
    for (const auto& w : words_up_to(1, 3))
        CHECK(behavior(s, w) == behavior(r, w));
    CHECK(behavior(direct_sum(a1(Integer(2)), a1(Integer(3))), "a") == 5);
    auto ee = direct_sum(e, e);
    CHECK(ee.dim() == 0);
    CHECK(behavior(ee, "aa") == 0);
}

TEST_CASE("hankel rank", "[automaton]") {
    auto r = a1(Integer(2));
    CHECK(hankel_rank(r, 2) == 2);
    CHECK(hankel_rank(constant_one<Integer>(Alphabet({"a"})), 2) == 1);
    auto zero = LinearRepresentation<Integer>(r.alphabet(), r.lambda(), r.mu(), Matrix<Integer>(2, 1));
    CHECK(hankel_rank(zero, 3) == 0);
    CHECK(hankel_rank(direct_sum(r, r), 4) == 2);

    Rng rng(4);
    for (int t = 0; t < 40; ++t) {
        auto a = random_automaton(rng, 3);
        std::size_t prev = 0;
        for (std::size_t len = 0; len <= a.dim() + 1; ++len) {
            std::size_t h = hankel_rank(a, len);
            CHECK(h >= prev);
            CHECK(h <= a.dim());
            prev = h;
        }
        CHECK(hankel_rank(a, a.dim()) == hankel_rank(a, a.dim() + 1));
    }
}
