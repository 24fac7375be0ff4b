#include "delrecon/reconstruct.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "delrecon/cache.hpp"
#include "delrecon/deletion_ball.hpp"
#include "delrecon/formulas.hpp"
#include "delrecon/intersect.hpp"
#include "delrecon/search.hpp"

namespace delrecon {

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

BinarySequence delete_positions(const BinarySequence& x, const std::vector<int>& positions) {
    std::uint64_t drop = 0;
    for (int p : positions) drop |= 1ULL << (p - 1);
    std::uint64_t bits = 0;
    int out = 0;
    for (int i = 0; i < x.length(); ++i) {
        if (drop >> i & 1) continue;
        bits |= static_cast<std::uint64_t>(x.raw() >> i & 1) << out;
        ++out;
    }
    return BinarySequence(bits, out);
}

std::uint64_t resolve_n_value(int n, int d, int t, std::uint64_t seed_unused) {
    (void)seed_unused;
    if (const auto known = known_n_value(n, d, t)) return *known;
    if (const auto cached = cache_load(n, d, t)) return cached->value;
    const auto report = nvalue_search(n, d, t);
    cache_store(report);
    return report.value;
}

PairWitness extremal_pair(int n, int d, int t) {
    if (d == 1 || d == 3) {
        try {
            return construct_extremal(n, d, t);
        } catch (const std::domain_error&) {
        }
    }
    const auto report = [&] {
        if (const auto cached = cache_load(n, d, t); cached && cached->witness) return *cached;
        auto fresh = nvalue_search(n, d, t);
        cache_store(fresh);
        return fresh;
    }();
    if (!report.witness) throw std::domain_error("no qualifying pair at this distance");
    PairWitness wit;
    wit.x = report.witness->x;
    wit.y = report.witness->y;
    wit.n = n;
    wit.min_distance_claimed = d;
    wit.radius = t;
    wit.intersection = report.value;
    return wit;
}

}  // namespace

Codebook greedy_code(int n, int d) {
    if (n < 1 || n > 16) throw std::domain_error("codebooks are built for 1 <= n <= 16");
    if (d < 1) throw std::domain_error("minimum distance must be positive");
    Codebook code{n, d, {}};
    for (std::uint64_t lex = 0; lex < (1ULL << n); ++lex) {
        const BinarySequence x(detail::bit_reverse64(lex) >> (64 - n), n);
        bool ok = true;
        for (const auto& w : code.words) {
            if (levenshtein_distance(x, w) < d) {
                ok = false;
                break;
            }
        }
        if (ok) code.words.push_back(x);
    }
    return code;
}

ReadSet channel_reads(const BinarySequence& x, int t, std::size_t count, std::uint64_t seed) {
    if (t < 0 || t > x.length()) throw std::domain_error("radius outside the word");
    if (count > ball_size(x, t))
        throw std::invalid_argument("requested more distinct reads than the ball holds");
    ReadSet rs{t, {}};
    std::mt19937_64 rng(seed);
    std::vector<BinarySequence> seen;
    while (rs.reads.size() < count) {
        // Floyd's sampling of t distinct deletion positions.
        std::vector<int> chosen;
        for (int k = x.length() - t + 1; k <= x.length(); ++k) {
            const int p = static_cast<int>(bounded(rng, k)) + 1;
            if (std::find(chosen.begin(), chosen.end(), p) != chosen.end())
                chosen.push_back(k);
            else
                chosen.push_back(p);
        }
        const BinarySequence read = delete_positions(x, chosen);
        const auto it = std::lower_bound(seen.begin(), seen.end(), read, lex_less);
        if (it != seen.end() && *it == read) continue;
        seen.insert(it, read);
        rs.reads.push_back(read);
    }
    return rs;
}

std::vector<BinarySequence> decode(const ReadSet& reads, const Codebook& code) {
    if (reads.reads.empty()) throw std::invalid_argument("decoding needs at least one read");
    for (const auto& r : reads.reads)
        if (r.length() != code.n - reads.t)
            throw std::invalid_argument("read length inconsistent with the code and radius");
    std::vector<BinarySequence> candidates;
    for (const auto& w : code.words) {
        bool all = true;
        for (const auto& r : reads.reads) {
            if (!is_subsequence(r, w)) {
                all = false;
                break;
            }
        }
        if (all) candidates.push_back(w);
    }
    return candidates;
}

ThresholdReport threshold_experiment(const ThresholdParams& params) {
    const auto [n, d, t, trials, seed] = params;
    if (trials < 1) throw std::invalid_argument("needs at least one trial");

    ThresholdReport report;
    report.params = params;
    report.max_intersection = resolve_n_value(n, d, t, seed);
    report.threshold = report.max_intersection + 1;

    const Codebook code = greedy_code(n, d);
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
        const BinarySequence word = code.words[bounded(rng, code.words.size())];
        if (ball_size(word, t) < report.threshold) {
            ++report.skipped;
            continue;
        }
        ++report.trials_run;
        const ReadSet reads = channel_reads(word, t, report.threshold, rng());
        const auto candidates = decode(reads, code);
        if (candidates.size() == 1 && candidates.front() == word) ++report.unique_successes;
    }
    report.positive_pass_rate =
        report.trials_run ? static_cast<double>(report.unique_successes) / report.trials_run : 0.0;

    const PairWitness wit = extremal_pair(n, d, t);
    report.sharp_x = wit.x;
    report.sharp_y = wit.y;
    ReadSet sharp{t, intersection_elements(wit.x, t, wit.y, t)};
    report.sharp_reads_count = sharp.reads.size();
    Codebook mini{n, d, {wit.x, wit.y}};
    if (lex_less(mini.words[1], mini.words[0])) std::swap(mini.words[0], mini.words[1]);
    report.sharp_candidates = decode(sharp, mini);
    return report;
}

}  // namespace delrecon
