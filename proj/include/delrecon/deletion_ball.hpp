#pragma once

#include <cstdint>
#include <vector>

#include "delrecon/sequence.hpp"

namespace delrecon {

/// All distinct subsequences of the center with exactly `radius` symbols
/// removed. Empty whenever the radius falls outside [0, n].
struct DeletionBall {
    int center_length = 0;
    int radius = 0;
    std::vector<BinarySequence> elements;  // sorted by lex_less, deduplicated

    std::size_t size() const noexcept { return elements.size(); }
    bool contains(const BinarySequence& z) const;
};

DeletionBall deletion_ball(const BinarySequence& x, int t);

/// True iff y can be obtained from x by deletions (greedy left-to-right match).
bool is_subsequence(const BinarySequence& y, const BinarySequence& x);

/// |D_t(x)| by the distinct fixed-length subsequence counting DP; agrees with
/// enumerating the ball but never materializes it.
std::uint64_t ball_size(const BinarySequence& x, int t);

/// The largest t-deletion ball size over length-n words, sum of C(n-t, i) for
/// i = 0..t; zero when t > n, n < 0 or t < 0.
std::uint64_t max_ball_size(int n, int t);

/// C(n, k) for 0 <= n <= 64 (exact in 64 bits over that range).
std::uint64_t binomial(int n, int k);

int lcs_length(const BinarySequence& x, const BinarySequence& y);

/// Deletion distance between equal-length words: the least t with
/// D_t(x) and D_t(y) intersecting, computed as n - LCS(x, y).
int levenshtein_distance(const BinarySequence& x, const BinarySequence& y);

}  // namespace delrecon
