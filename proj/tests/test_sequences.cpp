#include <catch2/catch_amalgamated.hpp>

#include "thinset/errors.hpp"
#include "thinset/sequences.hpp"

using namespace thinset;

TEST_CASE("catalan prefix") {
    auto t = catalan_sequence(7);
    REQUIRE(t.first_index == 0);
    std::vector<long long> expected = {1, 1, 2, 5, 14, 42, 132, 429};
    REQUIRE(t.values.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) REQUIRE(t.values[i] == BigInt(expected[i]));
    REQUIRE(catalan(12) == BigInt(208012));
    // 64-bit overflow territory reached exactly
    REQUIRE(catalan(40) == BigInt("2622127042276492108820"));
}

TEST_CASE("catalan convolution recurrence") {
    auto t = catalan_sequence(20);
    for (int n = 0; n < 20; ++n) {
        BigInt sum = 0;
        for (int i = 0; i <= n; ++i) sum += t.at(i) * t.at(n - i);
        REQUIRE(sum == t.at(n + 1));
    }
}

TEST_CASE("schroder prefix and growth") {
    auto t = schroder_sequence(7);
    std::vector<long long> expected = {1, 2, 6, 22, 90, 394, 1806, 8558};
    REQUIRE(t.values.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) REQUIRE(t.values[i] == BigInt(expected[i]));
    auto big = schroder_sequence(10);
    auto cat = catalan_sequence(10);
    for (int n = 0; n <= 10; ++n) REQUIRE(big.at(n) >= cat.at(n));
}

TEST_CASE("sequence table range checks") {
    auto t = catalan_sequence(5);
    REQUIRE(t.last_index() == 5);
    REQUIRE_THROWS_AS(t.at(6), InputError);
    REQUIRE_THROWS_AS(t.at(-1), InputError);
    REQUIRE_THROWS_AS(catalan_sequence(-1), InputError);
    auto e = ell_sequence(4);
    REQUIRE(e.first_index == 1);
    REQUIRE_THROWS_AS(e.at(0), InputError);
}

TEST_CASE("decreasing sequences at level 4") {
    auto dec = dec_sequences(4);
    REQUIRE(dec.size() == 7);
    std::vector<std::vector<int>> expected = {{1}, {2}, {3}, {2, 1}, {3, 1}, {3, 2}, {3, 2, 1}};
    std::vector<std::vector<int>> got;
    for (const auto& s : dec) got.push_back(s.entries());
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    REQUIRE(got == expected);
}

TEST_CASE("decreasing sequence counts") {
    REQUIRE(dec_sequences(1).empty());
    for (int n = 1; n <= 16; ++n)
        REQUIRE(dec_sequences(n).size() == (std::size_t{1} << (n - 1)) - 1);
    REQUIRE_THROWS_AS(dec_sequences(0), InputError);
}

TEST_CASE("sigma plus and minus") {
    DecSeq sigma(5, {4, 2, 1});
    REQUIRE(sigma.plus() == 1);
    REQUIRE(sigma.minus() == DecSeq(5, {4, 2}));
    DecSeq eps(5, {});
    REQUIRE(eps.plus() == 5);
    REQUIRE_THROWS_AS(eps.minus(), InputError);
    REQUIRE_THROWS_AS(DecSeq(4, {1, 2}), InputError);   // not decreasing
    REQUIRE_THROWS_AS(DecSeq(4, {4}), InputError);      // out of range
}

TEST_CASE("ell weights") {
    auto ell = ell_sequence(8);
    // epsilon contributes its own ell value factor-free
    REQUIRE(ell_weight(3, DecSeq(3, {}), ell) == BigInt(1));
    // ell(3, (2,1)) = ell_{3-2} * ell_{2-1} = 1
    REQUIRE(ell_weight(3, DecSeq(3, {2, 1}), ell) == BigInt(1));
    // ell(4, (1)) = ell_{4-1} = 2
    REQUIRE(ell_weight(4, DecSeq(4, {1}), ell) == BigInt(2));
    REQUIRE_THROWS_AS(ell_weight(4, DecSeq(3, {1}), ell), InputError);
}

TEST_CASE("ell equals catalan shifted") {
    auto ell = ell_sequence(13);
    auto cat = catalan_sequence(12);
    for (int n = 0; n <= 12; ++n) REQUIRE(ell.at(n + 1) == cat.at(n));
}

TEST_CASE("ell convolution identity") {
    auto ell = ell_sequence(13);
    for (int n = 1; n <= 12; ++n) {
        BigInt sum = 0;
        for (int i = 0; i < n; ++i) sum += ell.at(i + 1) * ell.at(n - i);
        REQUIRE(sum == ell.at(n + 1));
    }
}
