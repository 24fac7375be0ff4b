#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "delrecon/deletion_ball.hpp"
#include "delrecon/intersect.hpp"

using namespace delrecon;

namespace {

// Reference LCS, independent of the library's word-parallel path.
int lcs_reference(const std::string& a, const std::string& b) {
    std::vector<std::vector<int>> dp(a.size() + 1, std::vector<int>(b.size() + 1, 0));
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= b.size(); ++j)
            dp[i][j] = a[i - 1] == b[j - 1] ? dp[i - 1][j - 1] + 1
                                            : std::max(dp[i - 1][j], dp[i][j - 1]);
    return dp[a.size()][b.size()];
}

std::set<std::string> ball_by_recursion(const std::string& x, int t) {
    if (t < 0 || t > static_cast<int>(x.size())) return {};
    std::set<std::string> level{x};
    for (int k = 0; k < t; ++k) {
        std::set<std::string> next;
        for (const auto& w : level)
            for (std::size_t i = 0; i < w.size(); ++i) next.insert(w.substr(0, i) + w.substr(i + 1));
        level = std::move(next);
    }
    return level;
}

}  // namespace

TEST_CASE("deletion ball basics") {
    const auto b = deletion_ball(BinarySequence::parse("1010"), 1);
    REQUIRE(b.size() == 4);
    std::set<std::string> got;
    for (const auto& z : b.elements) got.insert(z.str());
    CHECK(got == std::set<std::string>{"010", "110", "100", "101"});
    CHECK(b.contains(BinarySequence::parse("110")));
    CHECK_FALSE(b.contains(BinarySequence::parse("111")));

    const auto x = BinarySequence::parse("100110");
    const auto b0 = deletion_ball(x, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0.elements[0] == x);

    const auto collapsed = deletion_ball(BinarySequence::parse("1111"), 2);
    REQUIRE(collapsed.size() == 1);
    CHECK(collapsed.elements[0].str() == "11");

    CHECK(deletion_ball(x, 7).size() == 0);
    CHECK(deletion_ball(x, -1).size() == 0);
    CHECK(deletion_ball(x, 6).elements == std::vector<BinarySequence>{BinarySequence{}});
}

TEST_CASE("ball enumeration matches the one-deletion recursion") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 300; ++it) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const BinarySequence x(rng(), n);
        const int t = static_cast<int>(rng() % (n + 1));
        const auto ref = ball_by_recursion(x.str(), t);
        const auto ball = deletion_ball(x, t);
        REQUIRE(ball.size() == ref.size());
        for (const auto& z : ball.elements) CHECK(ref.count(z.str()) == 1);
    }
}

TEST_CASE("is_subsequence") {
    CHECK(is_subsequence(BinarySequence::parse("101"), BinarySequence::parse("1001")));
    // deleting position 2 of 1010 leaves 110
    CHECK(is_subsequence(BinarySequence::parse("110"), BinarySequence::parse("1010")));
    CHECK(deletion_ball(BinarySequence::parse("1010"), 1).contains(BinarySequence::parse("110")));
    CHECK_FALSE(is_subsequence(BinarySequence::parse("111"), BinarySequence::parse("1010")));
    CHECK(is_subsequence({}, BinarySequence::parse("0110")));
    CHECK(is_subsequence({}, {}));
    CHECK_FALSE(is_subsequence(BinarySequence::parse("01"), BinarySequence::parse("0")));
}

TEST_CASE("membership in a ball is exactly the subsequence relation") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 200; ++it) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const BinarySequence x(rng(), n);
        const int t = static_cast<int>(rng() % (n + 1));
        const auto ball = deletion_ball(x, t);
        for (std::uint64_t bits = 0; bits < (1ULL << (n - t)); ++bits) {
            const BinarySequence y(bits, n - t);
            CHECK(ball.contains(y) == is_subsequence(y, x));
        }
    }
}

TEST_CASE("ball size counting") {
    CHECK(ball_size(alternating(10, 1), 3) == 64);
    CHECK(ball_size(BinarySequence::parse("100110"), 0) == 1);
    CHECK(ball_size(BinarySequence::parse("1111"), 3) == 1);
    CHECK(ball_size(BinarySequence::parse("1111"), 5) == 0);
}

TEST_CASE("counting agrees with enumeration exhaustively (n <= 12, t <= 4)") {
    for (int n = 0; n <= 12; ++n) {
        for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
            const BinarySequence x(bits, n);
            for (int t = 0; t <= 4; ++t)
                REQUIRE(ball_size(x, t) == deletion_ball(x, t).size());
        }
    }
}

TEST_CASE("largest ball formula") {
    CHECK(max_ball_size(10, 3) == 64);
    CHECK(max_ball_size(8, 1) == 8);
    CHECK(max_ball_size(5, 7) == 0);
    CHECK(max_ball_size(-1, 0) == 0);
    CHECK(max_ball_size(5, -2) == 0);
    CHECK(max_ball_size(6, 6) == 1);
}

TEST_CASE("alternating words maximize the ball (n <= 14, t <= 5)") {
    for (int n = 1; n <= 14; ++n) {
        for (int t = 0; t <= 5 && t <= n; ++t) {
            std::uint64_t best = 0;
            for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits)
                best = std::max(best, ball_size(BinarySequence(bits, n), t));
            CHECK(best == max_ball_size(n, t));
            CHECK(ball_size(alternating(n, 1), t) == best);
        }
    }
}

TEST_CASE("largest ball recurrence") {
    for (int n = 2; n <= 40; ++n)
        for (int t = 1; t < n; ++t)
            CHECK(max_ball_size(n, t) == max_ball_size(n - 1, t) + max_ball_size(n - 2, t - 1));
}

TEST_CASE("lcs_length") {
    CHECK(lcs_length(BinarySequence::parse("1010"), BinarySequence::parse("0101")) == 3);
    CHECK(lcs_length(BinarySequence::parse("110101"), {}) == 0);
    const auto x = BinarySequence::parse("100101");
    CHECK(lcs_length(x, x) == x.length());
}

TEST_CASE("lcs matches the quadratic reference") {
    for (int n = 0; n <= 7; ++n) {
        for (std::uint64_t a = 0; a < (1ULL << n); ++a) {
            for (std::uint64_t b = 0; b < (1ULL << n); ++b) {
                const BinarySequence x(a, n), y(b, n);
                REQUIRE(lcs_length(x, y) == lcs_reference(x.str(), y.str()));
            }
        }
    }
    std::mt19937_64 rng(41);
    for (int it = 0; it < 2000; ++it) {
        const BinarySequence x(rng(), static_cast<int>(rng() % 65));
        const BinarySequence y(rng(), static_cast<int>(rng() % 65));
        REQUIRE(lcs_length(x, y) == lcs_reference(x.str(), y.str()));
    }
}

TEST_CASE("deletion distance") {
    const auto x = BinarySequence::parse("100101");
    CHECK(levenshtein_distance(x, x) == 0);
    CHECK(levenshtein_distance(BinarySequence::parse("1010"), BinarySequence::parse("0101")) == 1);
    CHECK_THROWS_AS(levenshtein_distance(x, BinarySequence::parse("10")),
                    std::invalid_argument);
    // interleaved construction at n = 13 sits at distance exactly 3
    CHECK(levenshtein_distance(BinarySequence::parse("1010101010110"),
                               BinarySequence::parse("0110011010101")) == 3);
}

TEST_CASE("distance equals the least radius with intersecting balls (n <= 10)") {
    for (int n = 1; n <= 10; ++n) {
        for (std::uint64_t a = 0; a < (1ULL << n); ++a) {
            const BinarySequence x(a, n);
            for (std::uint64_t b = a; b < (1ULL << n); ++b) {
                const BinarySequence y(b, n);
                const int d = levenshtein_distance(x, y);
                REQUIRE(intersection_size(x, d, y, d) > 0);
                if (d > 0) REQUIRE(intersection_size(x, d - 1, y, d - 1) == 0);
            }
        }
    }
}

TEST_CASE("distance is a metric (n <= 8)") {
    for (int n = 1; n <= 8; ++n) {
        const int count = 1 << n;
        std::vector<std::vector<int>> dist(count, std::vector<int>(count));
        for (int a = 0; a < count; ++a)
            for (int b = 0; b < count; ++b)
                dist[a][b] = levenshtein_distance(BinarySequence(a, n), BinarySequence(b, n));
        for (int a = 0; a < count; ++a) {
            REQUIRE(dist[a][a] == 0);
            for (int b = a + 1; b < count; ++b) {
                REQUIRE(dist[a][b] > 0);
                REQUIRE(dist[a][b] == dist[b][a]);
            }
        }
        if (n <= 7) {
            for (int a = 0; a < count; ++a)
                for (int b = 0; b < count; ++b)
                    for (int c = 0; c < count; ++c)
                        REQUIRE(dist[a][c] <= dist[a][b] + dist[b][c]);
        }
    }
}
