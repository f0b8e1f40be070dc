#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "helpers.hpp"
#include "thinset/coloring.hpp"
#include "thinset/errors.hpp"
#include "thinset/extract.hpp"
#include "thinset/witness.hpp"

using namespace thinset;
using thinset::test::affine_table;

namespace {
ThinWitness bare_witness(std::vector<int> H) {
    ThinWitness w;
    w.set = std::move(H);
    return w;
}

std::vector<int> iota_set(int n) {
    std::vector<int> H(n);
    std::iota(H.begin(), H.end(), 0);
    return H;
}
} // namespace

TEST_CASE("transitive extraction, all intervals large") {
    ApproxTable t = affine_table(2, 2, 41);
    // every interval is large, so <0,1,1> is avoided and H survives whole
    auto w = extract_transitive(bare_witness({0, 3, 8, 18, 38}), t);
    REQUIRE(w.kind == TransitiveKind::all_large);
    REQUIRE(w.set == std::vector<int>{0, 3, 8, 18, 38});
    REQUIRE(all_intervals_large(w.set, t));
}

TEST_CASE("transitive extraction, dense set is transitive with smalls") {
    ApproxTable t = affine_table(1, 10, 8);
    // every interval is small: <0,0,0> is the one realized color
    auto w = extract_transitive(bare_witness({0, 1, 2, 3}), t);
    REQUIRE(w.kind == TransitiveKind::transitive_with_small);
    REQUIRE(w.set == std::vector<int>{0, 1, 2, 3});
    REQUIRE(is_g_transitive(w.set, t).ok);
}

TEST_CASE("transitive extraction, even subsequence case") {
    ApproxTable t = affine_table(1, 2, 8);
    // {0,1,2,4,5,6} under g(x) = x + 2 realizes every color except <0,0,0>
    auto w = extract_transitive(bare_witness({0, 1, 2, 4, 5, 6}), t);
    REQUIRE(w.kind == TransitiveKind::all_large);
    REQUIRE(w.set == std::vector<int>{0, 2, 5});
    REQUIRE(all_intervals_large(w.set, t));
    REQUIRE(w.set.size() >= (6 - 2) / 2);
}

TEST_CASE("transitive extraction, even case preempts the tail case") {
    ApproxTable t = affine_table(2, 2, 41);
    // avoided colors are <0,0,0> and <1,0,1>; the even subsequence wins
    auto w = extract_transitive(bare_witness({0, 1, 3, 8, 18}), t);
    REQUIRE(w.kind == TransitiveKind::all_large);
    REQUIRE(w.set == std::vector<int>{0, 3, 18});
}

TEST_CASE("transitive extraction, tail past a large pair") {
    ApproxTable t = affine_table(1, 3, 30);
    // realizes <0,0,0>, <0,0,1>, <0,1,1> and <1,1,1> but never <1,0,1>;
    // the first large pair closes at 4 and the tail above it is all large
    auto w = extract_transitive(bare_witness({0, 1, 2, 4, 10, 16, 22}), t);
    REQUIRE(w.kind == TransitiveKind::all_large);
    REQUIRE(w.set == std::vector<int>{10, 16, 22});
    REQUIRE(w.set.size() >= (7 - 2) / 2);
}

TEST_CASE("transitive extraction failures") {
    ApproxTable t = affine_table(1, 3, 8);
    // {0..4} under g(x) = x + 3 realizes all colors except <1,1,1>,
    // the one avoided color no case can use
    REQUIRE_THROWS_MATCHES(extract_transitive(bare_witness({0, 1, 2, 3, 4}), t),
                           InsufficientDataError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "only <1,1,1> is avoided")));

    // every color realized
    ApproxTable t30 = affine_table(1, 3, 30);
    REQUIRE_THROWS_MATCHES(extract_transitive(bare_witness({0, 1, 2, 4, 6, 10}), t30),
                           InputError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "every feasible triple color occurs")));

    REQUIRE_THROWS_AS(extract_transitive(bare_witness({0, 1, 2}), t), InputError);
    REQUIRE_THROWS_AS(extract_transitive(bare_witness({}), t), InputError);
    REQUIRE_THROWS_AS(extract_transitive(bare_witness({0, 2, 1, 3}), t), InputError);
    REQUIRE_THROWS_AS(extract_transitive(bare_witness({0, 1, 2, 8}), t), InputError);

    ApproxTable wide = affine_table(1, 3, 240, 3);
    REQUIRE_THROWS_AS(extract_transitive(bare_witness(iota_set(230)), wide), SizeGuardError);
}

TEST_CASE("gap extraction, all-small avoided") {
    ApproxTable t = affine_table(2, 1, 17); // g(x) = 2x + 1
    // every pair of H is large, so the all-small color is avoided and
    // h(i) = H[i + 2] dominates
    auto w = extract_dominator_gap(bare_witness({0, 1, 3, 7, 15}), t, 2);
    REQUIRE(verify_domination_witness(t, w));
    REQUIRE(w.certificate.size() == 3);
    REQUIRE(w.certificate[0].i == 0);
    REQUIRE(w.certificate[0].h == 3);
    REQUIRE(w.certificate[1].h == 7);
    REQUIRE(w.certificate[2].h == 15);
}

TEST_CASE("gap extraction, threshold shift past the realizer") {
    ApproxTable t = affine_table(2, 2, 41); // g(x) = 2x + 2
    // arity 3 avoids exactly <large, small>; the large coordinate is
    // realized at 0, and the tail past g(0) = 2 is read off shifted
    auto w = extract_dominator_gap(bare_witness({0, 1, 3, 8, 18, 38}), t, 3);
    REQUIRE(verify_domination_witness(t, w));
    REQUIRE(w.certificate.size() == 2);
    REQUIRE(w.certificate[0].i == 0);
    REQUIRE(w.certificate[0].h == 18);
    REQUIRE(w.certificate[0].g == 2);
    REQUIRE(w.certificate[1].i == 1);
    REQUIRE(w.certificate[1].h == 38);
    REQUIRE(w.certificate[1].g == 4);
}

TEST_CASE("gap extraction runs out of data") {
    ApproxTable dense = affine_table(1, 10, 14);
    // all pairs small; the avoided color <large> wants an element past
    // g(0) = 10 and there is none
    REQUIRE_THROWS_MATCHES(extract_dominator_gap(bare_witness({0, 1, 2, 3}), dense, 2),
                           InsufficientDataError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "no element may lie past t = 10")));

    ApproxTable g3 = affine_table(1, 3, 10);
    // only <large, small> realized, so all-small is avoided, but the set
    // has just arity many elements
    REQUIRE_THROWS_MATCHES(extract_dominator_gap(bare_witness({0, 5, 6}), g3, 3),
                           InsufficientDataError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "all-small case needs more than 3")));

    ApproxTable g15 = affine_table(1, 3, 15);
    // <large, small> is the least avoided color but only one element
    // clears the threshold, one short of the shifted reading
    REQUIRE_THROWS_MATCHES(extract_dominator_gap(bare_witness({0, 1, 2, 10}), g15, 3),
                           InsufficientDataError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "tail past t = 3 keeps 1 elements")));
}

TEST_CASE("gap extraction guards") {
    ApproxTable t = affine_table(2, 2, 41);
    REQUIRE_THROWS_AS(extract_dominator_gap(bare_witness({0, 1, 3}), t, 1), InputError);
    // both pair colors occur
    REQUIRE_THROWS_MATCHES(extract_dominator_gap(bare_witness({0, 1, 3}), t, 2), InputError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "every gap color occurs")));
    REQUIRE_THROWS_AS(extract_dominator_gap(bare_witness({0, 50}), t, 2), InputError);

    ApproxTable wide = affine_table(1, 1, 80, 3);
    REQUIRE_THROWS_AS(extract_dominator_gap(bare_witness(iota_set(75)), wide, 5),
                      SizeGuardError);
}

TEST_CASE("largeness extraction, adjacent-free class enumeration") {
    ApproxTable t = affine_table(2, 2, 41);
    std::vector<int> H = {0, 3, 8, 18, 38};
    // all pairs large: the empty pair graph is avoided, and h(t) reads the
    // closing element of the first pair above t
    Coloring f = largeness_coloring(2, t, H);
    ThinWitness thin = make_thin_witness(f, H, 1);
    auto w = extract_dominator_largeness(thin, t, 2);
    REQUIRE(verify_domination_witness(t, w));
    REQUIRE(w.certificate.size() == 18);
    REQUIRE(w.certificate[0].i == 0);
    REQUIRE(w.certificate[0].h == 8);
    REQUIRE(w.certificate[0].g == 2);
    REQUIRE(w.certificate[17].i == 17);
    REQUIRE(w.certificate[17].h == 38);
    REQUIRE(w.certificate[17].g == 36);
}

TEST_CASE("largeness extraction, forced target with an adjacent edge") {
    ApproxTable t = affine_table(2, 2, 41);
    std::vector<int> H = {0, 3, 8, 18, 38};

    // {0,1} alone: the one-point prefix is realized at 0, the empty
    // suffix pair is not (no small pair above g(0)), so the avoidance
    // recurses onto the tail
    auto w1 = extract_dominator_largeness(bare_witness(H), t, 3,
                                          LargenessGraph::from_edges(3, {{0, 1}}));
    REQUIRE(verify_domination_witness(t, w1));
    REQUIRE(w1.certificate.size() == 18);
    REQUIRE(w1.certificate[0].i == 0);
    REQUIRE(w1.certificate[0].h == 8);

    // {1,2} with chord {0,2}: the empty pair prefix is unrealized, so the
    // recursion drops straight to the pair case on all of H
    auto w2 = extract_dominator_largeness(bare_witness(H), t, 3,
                                          LargenessGraph::from_edges(3, {{1, 2}, {0, 2}}));
    REQUIRE(verify_domination_witness(t, w2));
    REQUIRE(w2.certificate.size() == 18);
}

TEST_CASE("largeness extraction runs out of data") {
    ApproxTable t = affine_table(1, 10, 35);
    // the class of {0,1} never closes above 0, and its normal restriction
    // is realized by the lone tail element
    REQUIRE_THROWS_MATCHES(
        extract_dominator_largeness(bare_witness({0, 1, 2, 30}), t, 3,
                                    LargenessGraph::from_edges(3, {{0, 1}})),
        InsufficientDataError,
        Catch::Matchers::MessageMatches(
            Catch::Matchers::ContainsSubstring("normal restriction is realized")));
}

TEST_CASE("largeness extraction guards") {
    ApproxTable t = affine_table(2, 2, 41);
    std::vector<int> H = {0, 3, 8, 18, 38};

    REQUIRE_THROWS_AS(extract_dominator_largeness(bare_witness(H), t, 1), InputError);
    REQUIRE_THROWS_AS(extract_dominator_largeness(bare_witness(H), t, 11), SizeGuardError);
    // both pair graphs occur on a mixed set
    REQUIRE_THROWS_MATCHES(extract_dominator_largeness(bare_witness({0, 1, 3}), t, 2),
                           InputError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "every largeness color occurs")));

    // target validation
    REQUIRE_THROWS_AS(extract_dominator_largeness(bare_witness(H), t, 3,
                                                  LargenessGraph::from_edges(2, {{0, 1}})),
                      InputError);
    REQUIRE_THROWS_AS(extract_dominator_largeness(bare_witness(H), t, 3,
                                                  LargenessGraph::from_edges(3, {{1, 2}})),
                      InputError);
    REQUIRE_THROWS_AS(
        extract_dominator_largeness(bare_witness(H), t, 3,
                                    LargenessGraph::from_edges(3, {{0, 1}, {1, 2}})),
        InputError); // realized by every triple of H

    // domain points double as stage indices
    ApproxTable shallow = affine_table(1, 2, 50, 5);
    REQUIRE_THROWS_MATCHES(extract_dominator_largeness(bare_witness({0, 1, 7}), shallow, 2),
                           InputError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "past the stage count")));
}
