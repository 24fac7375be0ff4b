#include "delrecon/deletion_ball.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "next_table.hpp"

namespace delrecon {

namespace {

using detail::NextTable;

// Remove the positions flagged in `mask` (bit p-1 set deletes x_p).
BinarySequence delete_positions(const BinarySequence& x, std::uint64_t mask) {
    std::uint64_t bits = 0;
    int out = 0;
    for (int i = 0; i < x.length(); ++i) {
        if (mask >> i & 1) continue;
        bits |= static_cast<std::uint64_t>(x.raw() >> i & 1) << out;
        ++out;
    }
    return BinarySequence(bits, out);
}

}  // namespace

bool DeletionBall::contains(const BinarySequence& z) const {
    return std::binary_search(elements.begin(), elements.end(), z, lex_less);
}

DeletionBall deletion_ball(const BinarySequence& x, int t) {
    DeletionBall ball;
    ball.center_length = x.length();
    ball.radius = t;
    if (t < 0 || t > x.length()) return ball;
    if (t == 0) {
        ball.elements.push_back(x);
        return ball;
    }
    // Walk all C(n, t) deletion masks (Gosper's hack) and deduplicate.
    const std::uint64_t limit = 1ULL << x.length();
    std::uint64_t mask = (1ULL << t) - 1;
    while (mask < limit) {
        ball.elements.push_back(delete_positions(x, mask));
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    std::sort(ball.elements.begin(), ball.elements.end(), lex_less);
    ball.elements.erase(std::unique(ball.elements.begin(), ball.elements.end()),
                        ball.elements.end());
    return ball;
}

bool is_subsequence(const BinarySequence& y, const BinarySequence& x) {
    if (y.length() > x.length()) return false;
    int i = 1;
    for (int k = 1; k <= y.length(); ++k) {
        const int c = y.bit(k);
        while (i <= x.length() && x.bit(i) != c) ++i;
        if (i > x.length()) return false;
        ++i;
    }
    return true;
}

std::uint64_t ball_size(const BinarySequence& x, int t) {
    const int n = x.length();
    if (t < 0 || t > n) return 0;
    const int target = n - t;
    if (target == 0) return 1;

    const NextTable tab(x);
    // g[k][i] = distinct length-k subsequences of x_i ... x_n, with every
    // word matched at its earliest embedding so it is counted once.
    std::array<std::uint64_t, BinarySequence::max_length + 3> prev{}, cur{};
    for (int i = 1; i <= n + 1; ++i) prev[i] = 1;
    for (int k = 1; k <= target; ++k) {
        cur.fill(0);
        for (int i = 1; i <= n - k + 1; ++i) {
            std::uint64_t v = 0;
            if (const int p = tab.nxt[0][i]) v += prev[p + 1];
            if (const int p = tab.nxt[1][i]) v += prev[p + 1];
            cur[i] = v;
        }
        prev = cur;
    }
    return prev[1];
}

std::uint64_t binomial(int n, int k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> c{};
        for (int i = 0; i <= 64; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        }
        return c;
    }();
    if (n < 0 || n > 64) throw std::domain_error("binomial defined for 0 <= n <= 64");
    if (k < 0 || k > n) return 0;
    return table[n][k];
}

std::uint64_t max_ball_size(int n, int t) {
    if (t < 0 || n < 0 || t > n) return 0;
    std::uint64_t total = 0;
    for (int i = 0; i <= t && i <= n - t; ++i) total += binomial(n - t, i);
    return total;
}

namespace {

int lcs_bitparallel(const BinarySequence& x, const BinarySequence& y) {
    const int n = x.length();
    const std::uint64_t mask = detail::length_mask(n);
    const std::uint64_t m1 = x.raw(), m0 = ~x.raw() & mask;
    std::uint64_t v = mask;
    for (int j = 0; j < y.length(); ++j) {
        const std::uint64_t m = (y.raw() >> j & 1) ? m1 : m0;
        const std::uint64_t u = v & m;
        v = ((v + u) | (v - u)) & mask;
    }
    return n - __builtin_popcountll(v);
}

int lcs_rowwise(const BinarySequence& x, const BinarySequence& y) {
    std::array<std::uint8_t, BinarySequence::max_length + 1> prev{}, cur{};
    for (int i = 1; i <= x.length(); ++i) {
        cur[0] = 0;
        for (int j = 1; j <= y.length(); ++j) {
            if (x.bit(i) == y.bit(j))
                cur[j] = static_cast<std::uint8_t>(prev[j - 1] + 1);
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        prev = cur;
    }
    return prev[y.length()];
}

}  // namespace

int lcs_length(const BinarySequence& x, const BinarySequence& y) {
    if (x.empty() || y.empty()) return 0;
    // The word-parallel recurrence needs a carry slot above the top bit.
    if (x.length() <= 63) return lcs_bitparallel(x, y);
    if (y.length() <= 63) return lcs_bitparallel(y, x);
    return lcs_rowwise(x, y);
}

int levenshtein_distance(const BinarySequence& x, const BinarySequence& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("deletion distance requires equal lengths");
    return x.length() - lcs_length(x, y);
}

}  // namespace delrecon
