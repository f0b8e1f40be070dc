#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "thinset/coloring.hpp"
#include "thinset/errors.hpp"
#include "thinset/witness.hpp"

using namespace thinset;
using thinset::test::affine_table;

TEST_CASE("thin witness recounts colors") {
    ApproxTable t = affine_table(1, 2, 8); // g(x) = x + 2
    Coloring f = gap3_coloring(t, {0, 1, 2, 3, 4, 5});

    ThinWitness w = make_thin_witness(f, {0, 1, 2, 3}, 3);
    REQUIRE(w.set == std::vector<int>{0, 1, 2, 3});
    REQUIRE(w.used_colors == std::vector<int>{1, 2, 3});
    REQUIRE(w.avoided_colors == std::vector<int>{0, 4});
    REQUIRE(w.bound == 3);
    REQUIRE(verify_thin_witness(f, w));

    // a slack bound is fine, a tight one must hold exactly
    REQUIRE(verify_thin_witness(f, make_thin_witness(f, {0, 1, 2, 3}, 5)));
    REQUIRE_THROWS_AS(make_thin_witness(f, {0, 1, 2, 3}, 2), InputError);
    REQUIRE_THROWS_AS(make_thin_witness(f, {0, 2, 1}, 3), InputError);
    REQUIRE_THROWS_AS(make_thin_witness(f, {0, 1, 2}, -1), InputError);

    // sets below the arity use no colors at all
    ThinWitness empty = make_thin_witness(f, {0, 1}, 0);
    REQUIRE(empty.used_colors.empty());
    REQUIRE(empty.avoided_colors.size() == 5);
    REQUIRE(verify_thin_witness(f, empty));
}

TEST_CASE("thin witness verification rejects tampering") {
    ApproxTable t = affine_table(1, 2, 8);
    Coloring f = gap3_coloring(t, {0, 1, 2, 3, 4, 5});
    ThinWitness good = make_thin_witness(f, {0, 1, 2, 3}, 3);

    ThinWitness w = good;
    w.bound = 2;
    REQUIRE_FALSE(verify_thin_witness(f, w));

    w = good;
    w.used_colors.pop_back();
    REQUIRE_FALSE(verify_thin_witness(f, w));

    w = good;
    w.used_colors = {1, 2};
    w.avoided_colors = {0, 3, 4}; // claims 3 avoided, but (0,2,3) uses it
    REQUIRE_FALSE(verify_thin_witness(f, w));

    w = good;
    w.avoided_colors = {0}; // 4 is neither used nor avoided
    REQUIRE_FALSE(verify_thin_witness(f, w));

    w = good;
    w.set = {0, 2, 1, 3};
    REQUIRE_FALSE(verify_thin_witness(f, w));

    w = good;
    w.set = {0, 1, 2, 9}; // outside the coloring domain
    REQUIRE_FALSE(verify_thin_witness(f, w));
}

TEST_CASE("domination certificates check against the truth row") {
    ApproxTable t = affine_table(2, 2, 40); // g(x) = 2x + 2

    DominationWitness w;
    w.certificate = {{0, 18, 2}, {1, 38, 4}};
    REQUIRE(verify_domination_witness(t, w));

    DominationWitness empty;
    REQUIRE(verify_domination_witness(t, empty));

    w.certificate = {{1, 38, 4}, {0, 18, 2}}; // inputs out of order
    REQUIRE_FALSE(verify_domination_witness(t, w));
    w.certificate = {{0, 18, 2}, {0, 38, 2}}; // repeated input
    REQUIRE_FALSE(verify_domination_witness(t, w));
    w.certificate = {{-1, 18, 2}};
    REQUIRE_FALSE(verify_domination_witness(t, w));
    w.certificate = {{40, 100, 82}}; // past the stable bound
    REQUIRE_FALSE(verify_domination_witness(t, w));
    w.certificate = {{0, 18, 3}}; // wrong truth value
    REQUIRE_FALSE(verify_domination_witness(t, w));
    w.certificate = {{0, 1, 2}}; // h below g
    REQUIRE_FALSE(verify_domination_witness(t, w));
}

TEST_CASE("triple transitivity over a table") {
    ApproxTable t = affine_table(2, 2, 40);

    auto bad = is_g_transitive({0, 1, 2, 6}, t);
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.x == 0);
    REQUIRE(bad.y == 1);
    REQUIRE(bad.z == 2);

    // one small opening interval is harmless without a small follow-up
    auto good = is_g_transitive({0, 1, 8, 18, 38}, t);
    REQUIRE(good.ok);
    REQUIRE(good.x == -1);

    // pairs cannot violate the triple condition, even past the bound
    REQUIRE(is_g_transitive({0, 100}, t).ok);
    REQUIRE(is_g_transitive({}, t).ok);
    REQUIRE_THROWS_AS(is_g_transitive({0, 1, 40}, t), InputError);
    REQUIRE_THROWS_AS(is_g_transitive({1, 0, 2}, t), InputError);
}

TEST_CASE("adjacent interval largeness") {
    ApproxTable t = affine_table(2, 2, 40);
    REQUIRE(all_intervals_large({0, 3, 8, 18, 38}, t));
    REQUIRE_FALSE(all_intervals_large({0, 1, 3}, t));
    REQUIRE(all_intervals_large({5}, t));
    REQUIRE(all_intervals_large({}, t));
    REQUIRE_THROWS_AS(all_intervals_large({3, 3}, t), InputError);
}
