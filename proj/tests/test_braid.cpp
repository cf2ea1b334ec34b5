#include "jones/braid.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace jones;

TEST_CASE("parse_braid maps tokens directly") {
    const BraidWord a = parse_braid("1 1 1", 2);
    CHECK(a.n_strands == 2);
    CHECK(a.letters == std::vector<int>{1, 1, 1});

    const BraidWord b = parse_braid("1 -2 1 -2", 3);
    CHECK(b.letters == std::vector<int>{1, -2, 1, -2});

    CHECK(parse_braid("1, -2, 1", 3).letters == std::vector<int>{1, -2, 1});
    CHECK(parse_braid("", 3).empty());
    CHECK(parse_braid("   ", 5).empty());
}

TEST_CASE("parse_braid rejects bad letters") {
    CHECK_THROWS_AS(parse_braid("3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("0", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("1 x", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("1.5", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("-2", 2), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(0, {}), std::invalid_argument);
    // one strand admits only the identity word
    CHECK_NOTHROW(BraidWord(1, {}));
    CHECK_THROWS_AS(BraidWord(1, {1}), std::invalid_argument);
}

TEST_CASE("exponent_sum") {
    CHECK(exponent_sum(BraidWord(2, {1, 1, 1})) == 3);
    CHECK(exponent_sum(BraidWord(3, {1, -2, 1, -2})) == 0);
    CHECK(exponent_sum(BraidWord(4, {})) == 0);
}

TEST_CASE("exponent_sum is additive under concat and flips under inverse") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto rand_word = [&](int len) {
            std::vector<int> ls;
            for (int k = 0; k < len; ++k) {
                int g = 1 + static_cast<int>(rng() % (n - 1));
                ls.push_back((rng() % 2) ? g : -g);
            }
            return BraidWord(n, ls);
        };
        const BraidWord a = rand_word(static_cast<int>(rng() % 8));
        const BraidWord b = rand_word(static_cast<int>(rng() % 8));
        CHECK(exponent_sum(concat(a, b)) == exponent_sum(a) + exponent_sum(b));
        CHECK(exponent_sum(inverse(a)) == -exponent_sum(a));
    }
}

TEST_CASE("closure_permutation counts link components") {
    CHECK(closure_permutation(BraidWord(2, {1, 1, 1})).components == 1);
    CHECK(closure_permutation(BraidWord(3, {})).components == 3);
    CHECK(closure_permutation(BraidWord(3, {1, 2, 1, 2})).components == 1);
    CHECK(closure_permutation(BraidWord(2, {1, 1})).components == 2); // Hopf link
}

TEST_CASE("component count is invariant under cyclic rotation") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int len = 1 + static_cast<int>(rng() % 10);
        std::vector<int> ls;
        for (int k = 0; k < len; ++k) {
            int g = 1 + static_cast<int>(rng() % (n - 1));
            ls.push_back((rng() % 2) ? g : -g);
        }
        const int base = closure_permutation(BraidWord(n, ls)).components;
        std::rotate(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(rng() % ls.size()), ls.end());
        CHECK(closure_permutation(BraidWord(n, ls)).components == base);
    }
}
