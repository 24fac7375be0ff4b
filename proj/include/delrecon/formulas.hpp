#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "delrecon/sequence.hpp"

namespace delrecon {

/// N(n, 1, t) = 2 D(n-2, t-1) for 1 <= t < n.
std::uint64_t n_value_d1(int n, int t);

/// The five-term closed form for N(n, 2, t), valid for 2 <= t < n, n >= 8.
std::uint64_t n_value_d2(int n, int t);

/// N(n, 2, 3) = 6n - 30 for n >= 8.
std::uint64_t n_value_d2_t3(int n);

/// The six-term lower-bound form
/// M(n, t) = 6D(n-6,t-3) + 4D(n-8,t-3) + 6D(n-9,t-3) + 4D(n-11,t-3)
///         + 2D(n-13,t-5) + D(n-13,t-6), total on all inputs.
std::uint64_t m_value(int n, int t);

/// Exact N(n, 3, 4): the searched table for 5 <= n <= 12, 20n - 166 beyond.
std::uint64_t n_value_d3_t4(int n);

/// Upper bound 20n - 150 on N(n, 3, 4), valid for n >= 9.
std::uint64_t n_value_d3_t4_upper(int n);

/// N(n, d, d) = C(2d, d), independent of n once n >= 4d - 2.
std::uint64_t n_value_dd(int d);

/// N(n, 3, 3) = 20 for n >= 10.
std::uint64_t n_value_d3_t3(int n);

/// Closed forms for the balls of the two near-alternating words:
/// |D_t(1 ∘ a_{n-1})| and |D_t(0 1 ∘ a_{n-2})|, n >= 4.
std::pair<std::uint64_t, std::uint64_t> near_alternating_ball_sizes(int n, int t);

/// N(n, d, t) when a closed form or published table pins it; nullopt when
/// only search can answer.
std::optional<std::uint64_t> known_n_value(int n, int d, int t);

/// A pair of equal-length words together with the distance it promises and
/// its verified intersection size at the stated radius.
struct PairWitness {
    BinarySequence x;
    BinarySequence y;
    int n = 0;
    int min_distance_claimed = 0;
    int radius = 0;
    std::uint64_t intersection = 0;
};

/// Extremal pairs: d = 1 gives the alternating-word pair attaining
/// N(n, 1, t); d = 3 gives the searched table pair for 5 <= n <= 12 and the
/// interleaved construction for n >= 13 (distance exactly 3, intersection
/// M(n, t) at radius t >= 4).
PairWitness construct_extremal(int n, int d, int t);

}  // namespace delrecon
