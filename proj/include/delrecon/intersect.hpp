#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "delrecon/sequence.hpp"

namespace delrecon {

/// |D_s(x) ∩ D_t(y)| by the common distinct-subsequence counting DP. Zero
/// when either radius is outside its word or the residual lengths disagree.
std::uint64_t intersection_size(const BinarySequence& x, int s, const BinarySequence& y, int t);

/// The same intersection materialized; the enumeration oracle backing the DP.
std::vector<BinarySequence> intersection_elements(const BinarySequence& x, int s,
                                                  const BinarySequence& y, int t);

/// The subset of D_radius(center) whose elements start with required_prefix
/// and end with required_suffix. Both affixes are given in natural reading
/// order (the suffix is NOT reversed, unlike the usual bookkeeping that
/// stores it back to front).
struct RestrictedBallSpec {
    BinarySequence center;
    int radius = 0;
    BinarySequence required_prefix;
    BinarySequence required_suffix;
};

std::vector<BinarySequence> restricted_ball(const RestrictedBallSpec& spec);

/// Result of rewriting a restricted ball as a plain ball of an inner factor.
struct ReducedBall {
    BinarySequence inner;
    int t_star = 0;
};

/// Computes the least k1 embedding the prefix into x_1..x_k1 and the largest
/// k2 embedding the suffix into x_k2..x_n. When k1 < k2 the restricted ball
/// is required_prefix ∘ D_{t*}(x_{k1+1}..x_{k2-1}) ∘ required_suffix; the
/// degenerate cases (no embedding, or k1 >= k2) return nullopt and are
/// handled by direct filtering.
std::optional<ReducedBall> reduce_restricted_ball(const RestrictedBallSpec& spec);

/// Whether |D_t(x)| equals the sum of restricted-ball sizes over all
/// 2^m1 prefixes and 2^m2 suffixes. Requires m1 + m2 <= n - t.
bool partition_identity_holds(const BinarySequence& x, int t, int m1, int m2);

/// x = prefix ∘ mid_x ∘ suffix and y = prefix ∘ mid_y ∘ suffix with the
/// prefix maximal and, of what remains, the suffix maximal.
struct AffixDecomposition {
    BinarySequence prefix;
    BinarySequence mid_x;
    BinarySequence mid_y;
    BinarySequence suffix;
};

AffixDecomposition affix_decompose(const BinarySequence& x, const BinarySequence& y);

/// Set identity D_t(uvw) ∩ D_s(uṽw) = ⋃_{p+q<=min(t,s)} D_p(u) ∘
/// (D_{t-p-q}(v) ∩ D_{s-p-q}(ṽ)) ∘ D_q(w), checked by enumeration.
bool affix_union_identity_holds(const BinarySequence& u, const BinarySequence& v,
                                const BinarySequence& vt, const BinarySequence& w, int t, int s);

/// Set identity D_t(uvw) ∩ D_t(uṽw) = u ∘ (D_t(v) ∩ D_t(ṽ)) ∘ w, valid when
/// |v| = |ṽ| and the middles are at distance >= t. Throws otherwise.
bool affix_factorization_identity_holds(const BinarySequence& u, const BinarySequence& v,
                                        const BinarySequence& vt, const BinarySequence& w, int t);

/// Decomposition x = u v w, y = u v̄ w with v alternating and |v| >= 2; the
/// shape behind two equal-length words sharing exactly two single-deletion
/// subsequences.
struct TypeAWitness {
    BinarySequence prefix;
    BinarySequence mid;
    BinarySequence suffix;
};

std::optional<TypeAWitness> type_a_confusable(const BinarySequence& x, const BinarySequence& y);

/// Whether x = u a ā v b w and y = u ā v b b̄ w for some split and bits a, b,
/// in either role order.
bool type_b_confusable(const BinarySequence& x, const BinarySequence& y);

int hamming_distance(const BinarySequence& x, const BinarySequence& y);

/// Where |D_2(x) ∩ D_2(y)| lands for a distance-one pair of length n >= 7.
/// When both affixes around the complemented block are alternating the size
/// is pinned exactly (2n-4 / 2n-5 / 2n-6 by block position); pairs sharing
/// at most one single-deletion subsequence stay <= n; the residual class
/// (a non-alternating affix) stays <= 2n-6 but is not pinned.
enum class DistanceOnePairClass { two_n_minus_4, two_n_minus_5, two_n_minus_6, at_most_n, other };

DistanceOnePairClass classify_distance_one_pair(const BinarySequence& x, const BinarySequence& y);

}  // namespace delrecon
