#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delrecon/formulas.hpp"
#include "delrecon/sequence.hpp"

namespace delrecon {

inline constexpr const char* engine_version = "dr-search-1";

struct SearchOptions {
    int threads = 1;
    bool symmetry_reduction = true;
    /// Unlocks the heavy configurations: n = 14..16, and radius >= 5 at n = 13.
    bool extended = false;
};

/// A pair attaining a searched maximum, radii spelled out so asymmetric
/// families fit too.
struct SearchWitness {
    BinarySequence x;
    BinarySequence y;
    int radius_x = 0;
    int radius_y = 0;

    friend bool operator==(const SearchWitness&, const SearchWitness&) = default;
};

struct SearchReport {
    int n = 0;
    int d = 0;
    int t = 0;
    std::uint64_t value = 0;
    std::optional<SearchWitness> witness;
    std::uint64_t pairs_scanned = 0;
    std::uint64_t classes_scanned = 0;
    double elapsed_seconds = 0.0;
    std::string engine = engine_version;
};

/// Exact maximum of |D_t(x) ∩ D_t(y)| over unordered pairs of length-n words
/// at deletion distance >= d. Symmetry reduction scans one representative per
/// orbit of joint complement / joint reversal / swap; the witness is the
/// lexicographically least attaining pair regardless.
SearchReport nvalue_search(int n, int d, int t, const SearchOptions& options = {});

/// The lexicographically least ordered pair in the orbit of {x, y} under
/// swap, joint complement and joint reversal. Idempotent.
std::pair<BinarySequence, BinarySequence> canonical_pair(const BinarySequence& x,
                                                         const BinarySequence& y);

/// The constrained maxima the upper-bound case analysis leans on.
enum class ConstrainedFamily {
    /// max |D_2(x) ∩ D_4(y)| over x of length n, y of length n+2, x ∉ D_2(y).
    length_gap_max,
    /// max |D_4(c̄ c v) ∩ D_2(ṽ)| over 6-bit middles with v_1 = c̄, ṽ_1 = c,
    /// v_6 != ṽ_6 and distance exactly 2.
    headed_middle_gap,
    /// max |D_4(v ∘ 1 0) ∩ D_2(ṽ)| over the two fixed middle pairs
    /// (101010, 011001) and their complement.
    tailed_middle_gap,
    /// max |D_2(v) ∩ D_2(ṽ)| over the shaped 6-bit middles
    /// v = c c̄ c * * ā, ṽ = c̄ * * * ā a at distance >= 2.
    shaped_middle_22,
    /// max |D_3(v) ∩ D_3(ṽ)| over the same shaped middles.
    shaped_middle_33,
    /// max |D_3(u v w) ∩ D_3(u ṽ w)| at n = 10 with |v| = |ṽ| = 4, nonempty
    /// u and w maximal as common affixes, and distance >= 2.
    mid_block_len4_at10,
};

struct ConstrainedSpec {
    ConstrainedFamily family;
    int n = 0;  // only length_gap_max takes a parameter
};

SearchReport constrained_max(const ConstrainedSpec& spec);

/// One recomputed paper constant.
struct ClaimRecord {
    std::string id;
    std::string location;
    std::string relation;  // "eq" or "le"
    std::uint64_t expected = 0;
    std::uint64_t computed = 0;
    std::string status;  // "pass", "fail" or "trusted-not-recomputed"

    bool passed() const { return status != "fail"; }
};

struct VerifyOptions {
    /// Empty means every claim; otherwise exact claim ids to run.
    std::vector<std::string> only;
    int threads = 1;
    bool extended = false;
};

/// Re-derives every computer-searched constant the analysis cites and checks
/// it against the published value. Failures are recorded, not thrown.
std::vector<ClaimRecord> verify_constants(const VerifyOptions& options = {});

}  // namespace delrecon
