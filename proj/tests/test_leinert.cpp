#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "freeharm/cayley_ball.hpp"
#include "freeharm/coefficients.hpp"
#include "freeharm/element_set.hpp"
#include "freeharm/errors.hpp"
#include "freeharm/leinert.hpp"
#include "helpers.hpp"

using namespace freeharm;
using freeharm::testing::random_word;

namespace {
const Word x1 = Word::generator(1);
const Word x2 = Word::generator(2);
const Word x3 = Word::generator(3);
} // namespace

TEST_CASE("generator pairs never violate at small depth") {
    const GroupElementSet set({x1, x2});
    const auto verdict = check_leinert_condition(set, 3);
    CHECK(!verdict.violation);
    CHECK(verdict.depth == 3);
}

TEST_CASE("the cancelling quadruple is found at depth 2") {
    const GroupElementSet set({x1, x2, x1 * x3, x2 * x3});
    const auto verdict = check_leinert_condition(set, 2);
    REQUIRE(verdict.violation);
    CHECK(verdict.depth == 2);
    CHECK(verdict.witness.size() == 4);
    CHECK(verify_witness(verdict.witness, set));
    // Independent re-check of the emitted product.
    CHECK(alternating_product(verdict.witness).is_identity());
}

TEST_CASE("weak upper-triangular family violates through the identity") {
    const auto weak = generate_family({SetFamily::UpperTriangularWeak, 3, 0});
    const auto weak_verdict = check_leinert_condition(weak, 2);
    REQUIRE(weak_verdict.violation);
    CHECK(weak_verdict.depth == 2);
    CHECK(verify_witness(weak_verdict.witness, weak));

    // One valid witness by hand: (x1x2^-1, e, x2x3^-1, x1x3^-1).
    const std::vector<Word> documented = {x1 * x2.inverse(), Word::identity(),
                                          x2 * x3.inverse(), x1 * x3.inverse()};
    CHECK(verify_witness(documented, weak));
}

TEST_CASE("strict upper-triangular families: clean at k = 3, violating at k = 4") {
    const auto strict3 = generate_family({SetFamily::UpperTriangularStrict, 3, 0});
    const auto verdict3 = check_leinert_condition(strict3, 3);
    CHECK(!verdict3.violation);
    CHECK(verdict3.depth == 3);

    // Four distinct indices admit the cancelling quadruple
    // (x1x3^-1, x2x3^-1, x2x4^-1, x1x4^-1): its alternating product
    // telescopes to e, so strict(k >= 4) violates at depth 2.
    const auto strict4 = generate_family({SetFamily::UpperTriangularStrict, 4, 0});
    const Word x4 = Word::generator(4);
    const std::vector<Word> hand = {x1 * x3.inverse(), x2 * x3.inverse(),
                                    x2 * x4.inverse(), x1 * x4.inverse()};
    CHECK(alternating_product(hand).is_identity());
    CHECK(verify_witness(hand, strict4));

    const auto verdict4 = check_leinert_condition(strict4, 3);
    REQUIRE(verdict4.violation);
    CHECK(verdict4.depth == 2);
    CHECK(verify_witness(verdict4.witness, strict4));
}

TEST_CASE("generator families stay violation-free up to depth 4") {
    for (int k = 1; k <= 6; ++k) {
        const auto gens = generate_family({SetFamily::Generators, k, 0});
        CHECK(!check_leinert_condition(gens, 4).violation);
        const auto both = generate_family({SetFamily::GeneratorsAndInverses, k, 0});
        CHECK(!check_leinert_condition(both, 4).violation);
    }
}

TEST_CASE("violations persist at larger depth") {
    const auto weak = generate_family({SetFamily::UpperTriangularWeak, 3, 0});
    for (int depth = 2; depth <= 4; ++depth) {
        const auto verdict = check_leinert_condition(weak, depth);
        CHECK(verdict.violation);
        CHECK(verify_witness(verdict.witness, weak));
    }
}

TEST_CASE("the verdict is invariant under left translation") {
    GaussianSource rng(21);
    const std::vector<GroupElementSet> sets = {
        GroupElementSet({x1, x2}),
        generate_family({SetFamily::UpperTriangularWeak, 3, 0}),
        generate_family({SetFamily::UpperTriangularStrict, 3, 0}),
        GroupElementSet({x1, x2, x1 * x3, x2 * x3}),
    };
    for (const auto& set : sets) {
        const auto base = check_leinert_condition(set, 2);
        for (int t = 0; t < 5; ++t) {
            const Word g = random_word(rng, rng.uniform_int(1, 4), 3);
            const auto translated = check_leinert_condition(set.translated(g), 2);
            CHECK(base.violation == translated.violation);
            if (translated.violation)
                CHECK(verify_witness(translated.witness, set.translated(g)));
        }
    }
}

TEST_CASE("search rejects bad arguments and honors the state cap") {
    CHECK_THROWS_AS(check_leinert_condition(GroupElementSet{}, 2), std::invalid_argument);
    const auto weak = generate_family({SetFamily::UpperTriangularWeak, 6, 0});
    CHECK_THROWS_AS(check_leinert_condition(weak, 4, 50), ResourceError);
}

TEST_CASE("family generation matches the definitions") {
    const auto gens = generate_family({SetFamily::Generators, 3, 0});
    CHECK(gens.elements() == std::vector<Word>{x1, x2, x3});

    const auto weak2 = generate_family({SetFamily::UpperTriangularWeak, 2, 0});
    CHECK(weak2.size() == 2); // e kept once, plus x1*x2^-1
    CHECK(weak2.contains_identity());
    CHECK(weak2.contains(x1 * x2.inverse()));

    const auto strict4 = generate_family({SetFamily::UpperTriangularStrict, 4, 0});
    CHECK(strict4.size() == 6);
    CHECK(!strict4.contains_identity());

    const auto words22 = generate_family({SetFamily::WordsOfLengthN, 2, 2});
    CHECK(words22.size() == 12); // 2N(2N-1) with N = 2
    for (const auto& w : words22.elements()) CHECK(w.length() == 2);

    CHECK_THROWS_AS(parse_family_name("no-such-family"), std::invalid_argument);
}

TEST_CASE("indicator restricts to the ball") {
    const CayleyBall ball1 = enumerate_ball(2, 1);
    const auto only_x1 = indicator(GroupElementSet({x1}), ball1);
    CHECK(only_x1.support_size() == 1);
    CHECK(only_x1.scalar_at(x1) == Complex{1.0});

    CHECK(indicator(GroupElementSet{}, ball1).empty());

    const CayleyBall ball2 = enumerate_ball(2, 2);
    const auto weak2 = generate_family({SetFamily::UpperTriangularWeak, 2, 0});
    const auto ind = indicator(weak2, ball2);
    CHECK(ind.support_size() == 2);
    CHECK(ind.scalar_at(Word::identity()) == Complex{1.0});
    CHECK(ind.scalar_at(x1 * x2.inverse()) == Complex{1.0});
    CHECK(ind.scalar_at(x1) == Complex{0.0});

    // Elements beyond the ball radius are dropped.
    const auto far = indicator(GroupElementSet({x1 * x2 * x1}), ball2);
    CHECK(far.empty());
}

TEST_CASE("set files round-trip") {
    const auto weak = generate_family({SetFamily::UpperTriangularWeak, 3, 0});
    std::stringstream buffer;
    buffer << "# a comment line\n\n";
    write_set(buffer, weak);
    const auto reread = read_set(buffer);
    CHECK(reread.elements() == weak.elements());
}

TEST_CASE("duplicate elements are rejected") {
    CHECK_THROWS_AS(GroupElementSet({x1, x1}), std::invalid_argument);
}
