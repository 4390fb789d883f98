#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "freeharm/cayley_ball.hpp"
#include "freeharm/errors.hpp"
#include "freeharm/word.hpp"
#include "helpers.hpp"

using namespace freeharm;
using freeharm::testing::all_reduced_words;
using freeharm::testing::random_word;

namespace {
const Word x1 = Word::generator(1);
const Word x2 = Word::generator(2);
const Word x3 = Word::generator(3);
} // namespace

TEST_CASE("multiply cancels inverses") {
    CHECK((x1 * x1.inverse()).is_identity());
    CHECK((x1 * x2) * (x2.inverse() * x3) == x1 * x3);
    CHECK((x1 * x2.inverse() * x3).length() == 3);
}

TEST_CASE("identity is neutral") {
    const Word w = parse_word("x1*x2^-2*x3");
    CHECK(Word::identity() * w == w);
    CHECK(w * Word::identity() == w);
}

TEST_CASE("inverse reverses letters and flips signs") {
    CHECK(Word::identity().inverse().is_identity());
    CHECK((x1 * x2.inverse()).inverse() == x2 * x1.inverse());
}

TEST_CASE("inverse is an involution on random words") {
    GaussianSource rng(7);
    for (int t = 0; t < 200; ++t) {
        const Word w = random_word(rng, rng.uniform_int(0, 12), 3);
        CHECK(w.inverse().inverse() == w);
        CHECK((w * w.inverse()).is_identity());
    }
}

TEST_CASE("multiplication is associative") {
    GaussianSource rng(8);
    for (int t = 0; t < 300; ++t) {
        const Word a = random_word(rng, rng.uniform_int(0, 8), 3);
        const Word b = random_word(rng, rng.uniform_int(0, 8), 3);
        const Word c = random_word(rng, rng.uniform_int(0, 8), 3);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("length is subadditive with even defect") {
    GaussianSource rng(9);
    for (int t = 0; t < 300; ++t) {
        const Word a = random_word(rng, rng.uniform_int(0, 10), 2);
        const Word b = random_word(rng, rng.uniform_int(0, 10), 2);
        const std::size_t product_length = (a * b).length();
        CHECK(product_length <= a.length() + b.length());
        CHECK((a.length() + b.length() - product_length) % 2 == 0);
    }
}

TEST_CASE("parse handles the documented grammar") {
    CHECK(parse_word("x1*x2^-1") == x1 * x2.inverse());
    CHECK(parse_word("e").is_identity());
    CHECK(parse_word("x1*x1") == Word::from_letters({1, 1}));
    CHECK(format_word(parse_word("x1*x1")) == "x1^2");
    CHECK(parse_word(" x2 ^ 3 * x1 ") == Word::from_letters({2, 2, 2, 1}));
    CHECK(parse_word("x1^0").is_identity());
    CHECK(parse_word("x1^-2*x1^2").is_identity());
}

TEST_CASE("parse reports positions on malformed input") {
    CHECK_THROWS_AS(parse_word(""), ParseError);
    CHECK_THROWS_AS(parse_word("y1"), ParseError);
    CHECK_THROWS_AS(parse_word("x0"), ParseError);
    CHECK_THROWS_AS(parse_word("x1**x2"), ParseError);
    CHECK_THROWS_AS(parse_word("x1*"), ParseError);
    CHECK_THROWS_AS(parse_word("e*x1"), ParseError);
    try {
        parse_word("x1*y2");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("format round-trips through parse") {
    CHECK(format_word(Word::identity()) == "e");
    CHECK(format_word(x1 * x1 * x2.inverse()) == "x1^2*x2^-1");
    GaussianSource rng(10);
    for (int t = 0; t < 300; ++t) {
        const Word w = random_word(rng, rng.uniform_int(0, 14), 4);
        CHECK(parse_word(format_word(w)) == w);
    }
}

TEST_CASE("ball sizes match direct enumeration") {
    CHECK(enumerate_ball(2, 0).size() == 1);
    // Frozen from the enumeration oracle below: {e, x1^{±1}, x2^{±1}} and the
    // 12 length-2 words on top.
    CHECK(enumerate_ball(2, 1).size() == 5);
    CHECK(enumerate_ball(2, 2).size() == 17);

    for (int n = 1; n <= 3; ++n) {
        for (int r = 0; r <= 4; ++r) {
            const auto oracle = all_reduced_words(n, r);
            const CayleyBall ball = enumerate_ball(n, r);
            REQUIRE(ball.size() == oracle.size());
            std::set<std::vector<std::int32_t>> seen;
            for (const auto& w : ball.elements()) seen.insert(w.letters());
            CHECK(seen == oracle);
        }
    }
}

TEST_CASE("ball agrees with the closed formula") {
    CHECK(CayleyBall::size_formula(1, 6) == 13); // 2r+1
    CHECK(CayleyBall::size_formula(2, 3) == 53);
    CHECK(CayleyBall::size_formula(3, 2) == 37);
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= 3; ++r)
            CHECK(enumerate_ball(n, r).size() == CayleyBall::size_formula(n, r));
}

TEST_CASE("ball index is a bijection and inverse-closed") {
    const CayleyBall ball = enumerate_ball(2, 3);
    std::set<std::uint32_t> indices;
    for (const auto& w : ball.elements()) {
        auto idx = ball.index_of(w);
        REQUIRE(idx.has_value());
        indices.insert(*idx);
        CHECK(ball.index_of(w.inverse()).has_value());
    }
    CHECK(indices.size() == ball.size());
    GaussianSource rng(1);
    CHECK(!ball.index_of(random_word(rng, 4, 2)).has_value());
    CHECK(!ball.index_of(x3).has_value()); // generator outside F_2
}

TEST_CASE("ball respects the resource cap") {
    CHECK_THROWS_AS(enumerate_ball(2, 12, 1000), ResourceError);
    CHECK_THROWS_AS(CayleyBall::size_formula(26, 40), ResourceError);
}
