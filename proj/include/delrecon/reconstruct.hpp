#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delrecon/sequence.hpp"

namespace delrecon {

/// Equal-length words pairwise at deletion distance >= d.
struct Codebook {
    int n = 0;
    int d = 0;
    std::vector<BinarySequence> words;
};

/// Lexicographic greedy selection over all length-n words (n <= 16): keep a
/// word iff it sits at distance >= d from everything kept so far.
Codebook greedy_code(int n, int d);

/// Distinct outputs of independent channels that each delete exactly t bits.
struct ReadSet {
    int t = 0;
    std::vector<BinarySequence> reads;  // distinct, in draw order
};

/// Draws `count` distinct elements of D_t(x) by seeded random choice of
/// deletion positions, rejecting duplicates. Deterministic per seed
/// (mt19937_64, modulo-reduced draws).
ReadSet channel_reads(const BinarySequence& x, int t, std::size_t count, std::uint64_t seed);

/// Every codeword whose t-deletion ball contains all reads, in codebook order.
std::vector<BinarySequence> decode(const ReadSet& reads, const Codebook& code);

struct ThresholdParams {
    int n = 0;
    int d = 0;
    int t = 0;
    int trials = 0;
    std::uint64_t seed = 0;
};

/// Outcome of the two-sided threshold demonstration: with one read more than
/// the worst-case ball overlap decoding is always unique, and at exactly the
/// overlap size a concrete two-candidate read set exists.
struct ThresholdReport {
    ThresholdParams params;
    std::uint64_t max_intersection = 0;  // N(n, d, t)
    std::uint64_t threshold = 0;         // N(n, d, t) + 1
    int trials_run = 0;
    int unique_successes = 0;
    int skipped = 0;
    double positive_pass_rate = 0.0;
    BinarySequence sharp_x, sharp_y;
    std::size_t sharp_reads_count = 0;
    std::vector<BinarySequence> sharp_candidates;
    std::string generator = "mt19937_64/mod";
};

ThresholdReport threshold_experiment(const ThresholdParams& params);

}  // namespace delrecon
