#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "thinset/coloring.hpp"
#include "thinset/errors.hpp"
#include "thinset/search.hpp"

using namespace thinset;

namespace {

std::vector<int> iota_domain(int n) {
    std::vector<int> d(n);
    std::iota(d.begin(), d.end(), 0);
    return d;
}

Coloring pair_coloring(int points, int colors, std::function<int(int, int)> f) {
    return Coloring("pairs", 2, iota_domain(points), std::make_shared<IntPalette>(colors),
                    [f = std::move(f)](std::span<const int> t) { return f(t[0], t[1]); });
}

// the five-cycle and its complement are both triangle-free
Coloring pentagon() {
    return pair_coloring(5, 2, [](int i, int j) {
        int d = (j - i) % 5;
        return d == 1 || d == 4 ? 1 : 0;
    });
}

} // namespace

TEST_CASE("no witness when every triple is bichromatic") {
    Coloring f = pentagon();
    REQUIRE_FALSE(find_thin_set(f, 1, 3).has_value());
    REQUIRE_FALSE(brute_thin_oracle(f, 1, 3).has_value());
    REQUIRE_FALSE(find_thin_set(f, 1, 3, SearchBudget{0, 0.0, 3}).has_value());
    // relaxing either parameter makes the whole domain work
    REQUIRE(find_thin_set(f, 2, 3).has_value());
    REQUIRE(find_thin_set(f, 1, 2).has_value());
}

TEST_CASE("least witness in the parity coloring") {
    Coloring f = pair_coloring(6, 2, [](int i, int j) { return (i + j) % 2; });
    auto w = find_thin_set(f, 1, 3);
    REQUIRE(w.has_value());
    REQUIRE(w->set == std::vector<int>{0, 2, 4});
    REQUIRE(w->used_colors == std::vector<int>{0});
    REQUIRE(w->avoided_colors == std::vector<int>{1});
    REQUIRE(verify_thin_witness(f, *w));

    auto brute = brute_thin_oracle(f, 1, 3);
    REQUIRE(brute.has_value());
    REQUIRE(brute->set == w->set);

    auto parallel = find_thin_set(f, 1, 3, SearchBudget{0, 0.0, 4});
    REQUIRE(parallel.has_value());
    REQUIRE(parallel->set == w->set);
}

TEST_CASE("search skips a poisoned root") {
    // every pair through 0 gets its own color, pairs beyond are color 0
    Coloring f = pair_coloring(6, 5, [](int i, int j) { return i == 0 ? j - 1 : 0; });
    auto w = find_thin_set(f, 1, 3);
    REQUIRE(w.has_value());
    REQUIRE(w->set == std::vector<int>{1, 2, 3});
    auto parallel = find_thin_set(f, 1, 3, SearchBudget{0, 0.0, 4});
    REQUIRE(parallel->set == std::vector<int>{1, 2, 3});
    REQUIRE(brute_thin_oracle(f, 1, 3)->set == std::vector<int>{1, 2, 3});
}

TEST_CASE("search input guards") {
    Coloring f = pentagon();
    REQUIRE_THROWS_AS(find_thin_set(f, 0, 3), InputError);
    REQUIRE_THROWS_AS(find_thin_set(f, 1, 0), InputError);
    REQUIRE_THROWS_AS(find_thin_set(f, 1, 6), InputError);
    REQUIRE_THROWS_AS(brute_thin_oracle(f, 0, 3), InputError);
    REQUIRE_THROWS_AS(brute_thin_oracle(f, 1, 0), InputError);
    REQUIRE_THROWS_AS(brute_thin_oracle(f, 1, 6), InputError);
}

TEST_CASE("node budget interrupts the search") {
    Coloring f = pentagon();
    SearchBudget tight;
    tight.max_nodes = 1;
    REQUIRE_THROWS_AS(find_thin_set(f, 1, 3, tight), BudgetExceededError);
}

TEST_CASE("the brute oracle refuses huge instances") {
    Coloring f = pair_coloring(50, 2, [](int, int) { return 0; });
    REQUIRE_THROWS_AS(brute_thin_oracle(f, 1, 5), SizeGuardError); // C(50,5) subsets
    // the incremental search handles the same instance easily
    REQUIRE(find_thin_set(f, 1, 5)->set == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("extremal numbers for singleton colorings") {
    REQUIRE(extremal_number(1, 2, 1, 2) == 3);
    REQUIRE(extremal_number(1, 2, 1, 3) == 5); // pigeonhole: k(m-1)+1
    REQUIRE(extremal_number(1, 3, 1, 2) == 4);
}

TEST_CASE("extremal numbers for pair colorings") {
    REQUIRE(extremal_number(2, 2, 1, 2) == 2); // a single pair is always thin
    REQUIRE(extremal_number(2, 2, 1, 3) == 6); // the five-cycle is the last counterexample
}

TEST_CASE("a generous bound needs no search") {
    REQUIRE(extremal_number(2, 5, 5, 4) == 4);
    REQUIRE(extremal_number(3, 4, 4, 5) == 5);
    REQUIRE(extremal_number(1, 1, 1, 3) == 3);
}

TEST_CASE("extremal guards and budgets") {
    REQUIRE_THROWS_AS(extremal_number(0, 2, 1, 2), InputError);
    REQUIRE_THROWS_AS(extremal_number(1, 0, 1, 2), InputError);
    REQUIRE_THROWS_AS(extremal_number(1, 2, 0, 2), InputError);
    REQUIRE_THROWS_AS(extremal_number(1, 2, 1, 0), InputError);
    REQUIRE_THROWS_AS(extremal_number(2, 2, 1, 13), SizeGuardError);

    SearchBudget tight;
    tight.max_nodes = 1;
    REQUIRE_THROWS_MATCHES(extremal_number(2, 2, 1, 3, tight), BudgetExceededError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "budget exceeded at N = 3")));

    // too many colorings to enumerate: the error reports the progress made
    REQUIRE_THROWS_MATCHES(extremal_number(2, 6, 1, 4), BudgetExceededError,
                           Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                               "best known: counterexamples up to N = 4")));
}
