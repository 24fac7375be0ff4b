#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "delrecon/sequence.hpp"

using namespace delrecon;

namespace {

BinarySequence random_seq(std::mt19937_64& rng, int max_len = 64) {
    const int n = static_cast<int>(rng() % (max_len + 1));
    return BinarySequence(rng(), n);
}

}  // namespace

TEST_CASE("parse and format") {
    CHECK(BinarySequence::parse("").length() == 0);
    const auto x = BinarySequence::parse("1010");
    CHECK(x.length() == 4);
    CHECK(x.bit(1) == 1);
    CHECK(x.bit(2) == 0);
    CHECK(x.bit(3) == 1);
    CHECK(x.bit(4) == 0);
    CHECK(BinarySequence::parse("011001010").str() == "011001010");

    CHECK_THROWS_AS(BinarySequence::parse("10a1"), std::invalid_argument);
    CHECK_THROWS_AS(BinarySequence::parse(std::string(65, '0')), std::invalid_argument);
    CHECK_NOTHROW(BinarySequence::parse(std::string(64, '1')));
}

TEST_CASE("parse inverts format on random words") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 2000; ++it) {
        const auto x = random_seq(rng);
        CHECK(BinarySequence::parse(x.str()) == x);
    }
}

TEST_CASE("complement") {
    CHECK(complement(BinarySequence::parse("1010")).str() == "0101");
    CHECK(complement(BinarySequence::parse("")).empty());
    const auto x = BinarySequence::parse("0110010");
    CHECK(complement(complement(x)) == x);
}

TEST_CASE("reversed") {
    CHECK(reversed(BinarySequence::parse("100")).str() == "001");
    const auto x = BinarySequence::parse("011001010");
    CHECK(reversed(reversed(x)) == x);
    const auto pal = BinarySequence::parse("010");
    CHECK(reversed(pal) == pal);
}

TEST_CASE("concat") {
    CHECK(concat(BinarySequence::parse("10"), BinarySequence::parse("01")).str() == "1001");
    const auto x = BinarySequence::parse("11011");
    CHECK(concat(x, {}) == x);
    CHECK(concat({}, x) == x);
    const auto mid = concat(BinarySequence::parse("10101"), BinarySequence::parse("10"));
    CHECK(concat(BinarySequence::parse("101010"), mid).str() == "1010101010110");
    CHECK_THROWS_AS(concat(BinarySequence(0, 60), BinarySequence(0, 5)), std::length_error);
}

TEST_CASE("structural identities on random words") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 2000; ++it) {
        const auto u = random_seq(rng, 30);
        const auto v = random_seq(rng, 30);
        CHECK(reversed(concat(u, v)) == concat(reversed(v), reversed(u)));
        CHECK(complement(concat(u, v)) == concat(complement(u), complement(v)));
    }
}

TEST_CASE("project") {
    const auto x = BinarySequence::parse("1010");
    CHECK(project(x, 2, 3).str() == "01");
    CHECK(project(x, 1, 4) == x);
    CHECK(project(x, 3, 2).empty());
    CHECK_THROWS_AS(project(x, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(project(x, 1, 5), std::out_of_range);
    CHECK_THROWS_AS(project(x, 4, 2), std::out_of_range);
}

TEST_CASE("projection split reassembles the word") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 500; ++it) {
        const auto x = random_seq(rng);
        const int k = static_cast<int>(rng() % (x.length() + 1));
        CHECK(concat(project(x, 1, k), project(x, k + 1, x.length())) == x);
    }
}

TEST_CASE("alternating") {
    CHECK(alternating(5, 1).str() == "10101");
    CHECK(alternating(1, 0).str() == "0");
    CHECK(alternating(0, 1).empty());
    for (int n = 0; n <= 20; ++n) CHECK(run_count(alternating(n, 1)) == n);
}

TEST_CASE("periodicity predicates") {
    CHECK(is_alternating(BinarySequence::parse("10101")));
    CHECK_FALSE(is_two_periodic(BinarySequence::parse("1100")));
    CHECK_FALSE(is_alternating(BinarySequence::parse("1100")));
    CHECK(is_alternating(BinarySequence::parse("0")));
    CHECK(is_alternating(BinarySequence::parse("")));
    CHECK(is_two_periodic(BinarySequence::parse("1111")));
    CHECK_FALSE(is_alternating(BinarySequence::parse("1111")));
}

TEST_CASE("runs") {
    const auto rs = runs(BinarySequence::parse("11011"));
    REQUIRE(rs.size() == 3);
    CHECK(rs[0] == Run{1, 2, 1});
    CHECK(rs[1] == Run{3, 3, 0});
    CHECK(rs[2] == Run{4, 5, 1});
    CHECK(runs(BinarySequence::parse("0000")) == std::vector<Run>{Run{1, 4, 0}});
    CHECK(runs(BinarySequence::parse("")).empty());
}

TEST_CASE("runs partition the word and alternate symbols") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 500; ++it) {
        const auto x = random_seq(rng);
        const auto rs = runs(x);
        CHECK(static_cast<int>(rs.size()) == run_count(x));
        int expect_start = 1;
        for (std::size_t k = 0; k < rs.size(); ++k) {
            CHECK(rs[k].start == expect_start);
            CHECK(rs[k].start <= rs[k].end);
            if (k > 0) CHECK(rs[k].symbol != rs[k - 1].symbol);
            expect_start = rs[k].end + 1;
        }
        CHECK(expect_start == x.length() + 1);
        int flips = 0;
        for (int i = 1; i < x.length(); ++i) flips += x.bit(i) != x.bit(i + 1);
        CHECK(run_count(x) == (x.length() == 0 ? 0 : flips + 1));
    }
}

TEST_CASE("textual order") {
    const auto parse = [](const char* s) { return BinarySequence::parse(s); };
    CHECK(lex_less(parse("0"), parse("00")));
    CHECK(lex_less(parse("01"), parse("1")));
    CHECK(lex_less(parse("0101"), parse("0110")));
    CHECK_FALSE(lex_less(parse("1010"), parse("1010")));

    std::mt19937_64 rng(23);
    std::vector<BinarySequence> words;
    for (int it = 0; it < 200; ++it) words.push_back(random_seq(rng, 10));
    std::sort(words.begin(), words.end(), lex_less);
    for (std::size_t k = 1; k < words.size(); ++k)
        CHECK(words[k - 1].str() <= words[k].str());
}
