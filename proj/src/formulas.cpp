#include "delrecon/formulas.hpp"

#include <array>
#include <stdexcept>

#include "delrecon/deletion_ball.hpp"
#include "delrecon/intersect.hpp"

namespace delrecon {

namespace {

std::uint64_t D(int n, int t) { return max_ball_size(n, t); }

// Searched values of N(n, 3, 4) for n = 5..12 and pairs attaining them.
struct TablePair {
    std::uint64_t value;
    const char* x;
    const char* y;
};

constexpr std::array<TablePair, 8> d3_t4_table{{
    {2, "00010", "11101"},
    {4, "010110", "110001"},
    {8, "0101110", "1100101"},
    {16, "01101001", "10010110"},
    {26, "011001010", "101011001"},
    {40, "0110011001", "1010101010"},
    {57, "01100110101", "10101010110"},
    {75, "011001010101", "101010100110"},
}};

}  // namespace

std::uint64_t n_value_d1(int n, int t) {
    if (t < 1 || t >= n) throw std::domain_error("requires 1 <= t < n");
    return 2 * D(n - 2, t - 1);
}

std::uint64_t n_value_d2(int n, int t) {
    if (t < 2 || t >= n || n < 8) throw std::domain_error("requires 2 <= t < n and n >= 8");
    return 2 * D(n - 4, t - 2) + 2 * D(n - 5, t - 2) + 2 * D(n - 7, t - 2) + D(n - 6, t - 3) +
           D(n - 7, t - 3);
}

std::uint64_t n_value_d2_t3(int n) {
    if (n < 8) throw std::domain_error("requires n >= 8");
    return 6ULL * n - 30;
}

std::uint64_t m_value(int n, int t) {
    return 6 * D(n - 6, t - 3) + 4 * D(n - 8, t - 3) + 6 * D(n - 9, t - 3) +
           4 * D(n - 11, t - 3) + 2 * D(n - 13, t - 5) + D(n - 13, t - 6);
}

std::uint64_t n_value_d3_t4(int n) {
    if (n < 5) throw std::domain_error("requires n >= 5");
    if (n <= 12) return d3_t4_table[n - 5].value;
    return 20ULL * n - 166;
}

std::uint64_t n_value_d3_t4_upper(int n) {
    if (n < 9) throw std::domain_error("requires n >= 9");
    return 20ULL * n - 150;
}

std::uint64_t n_value_dd(int d) {
    if (d < 1 || d > 31) throw std::domain_error("requires 1 <= d <= 31");
    return binomial(2 * d, d);
}

std::uint64_t n_value_d3_t3(int n) {
    if (n < 10) throw std::domain_error("requires n >= 10");
    return 20;
}

std::pair<std::uint64_t, std::uint64_t> near_alternating_ball_sizes(int n, int t) {
    if (n < 4) throw std::domain_error("requires n >= 4");
    const std::uint64_t a = D(n - 1, t) + D(n - 3, t - 2);
    const std::uint64_t b = D(n - 2, t) + D(n - 2, t - 1) + D(n - 4, t - 2);
    return {a, b};
}

std::optional<std::uint64_t> known_n_value(int n, int d, int t) {
    if (d == 1 && t >= 1 && t < n) return n_value_d1(n, t);
    if (d == 2 && t == 2) {
        static constexpr std::array<std::uint64_t, 4> small{1, 2, 4, 4};  // n = 2..5
        if (n >= 2 && n <= 5) return small[n - 2];
        if (n >= 6) return 6;
    }
    if (d == 2 && t == 3) {
        static constexpr std::array<std::uint64_t, 6> small{0, 1, 2, 4, 8, 13};  // n = 2..7
        if (n >= 2 && n <= 7) return small[n - 2];
        if (n >= 8) return n_value_d2_t3(n);
    }
    if (d == 2 && t >= 2 && t < n && n >= 8) return n_value_d2(n, t);
    if (d == 3 && t == 3 && n >= 10) return 20;
    if (d == 3 && t == 4 && n >= 5) return n_value_d3_t4(n);
    if (d == t && d >= 1 && n >= 4 * d - 2) return n_value_dd(d);
    return std::nullopt;
}

PairWitness construct_extremal(int n, int d, int t) {
    BinarySequence x, y;
    if (d == 1) {
        if (n < 2) throw std::domain_error("distance-1 pair needs n >= 2");
        x = alternating(n, 1);
        y = concat(BinarySequence(0, 1), alternating(n - 1, 1));
    } else if (d == 3 && n >= 5 && n <= 12) {
        const auto& row = d3_t4_table[n - 5];
        x = BinarySequence::parse(row.x);
        y = BinarySequence::parse(row.y);
    } else if (d == 3 && n >= 13) {
        const BinarySequence core = alternating(n - 8, 1);
        const char* tail_x = (n % 2 == 1) ? "10" : "01";
        const char* tail_y = (n % 2 == 1) ? "01" : "10";
        x = concat(concat(BinarySequence::parse("101010"), core), BinarySequence::parse(tail_x));
        y = concat(concat(BinarySequence::parse("011001"), core), BinarySequence::parse(tail_y));
    } else {
        throw std::domain_error("no construction for this (n, d)");
    }
    PairWitness wit;
    wit.x = x;
    wit.y = y;
    wit.n = n;
    wit.min_distance_claimed = d;
    wit.radius = t;
    wit.intersection = intersection_size(x, t, y, t);
    return wit;
}

}  // namespace delrecon
