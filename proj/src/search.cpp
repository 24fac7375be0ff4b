#include "delrecon/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "delrecon/deletion_ball.hpp"
#include "delrecon/intersect.hpp"

namespace delrecon {

namespace {

// Words of a fixed length n live here as "lexcodes": the integer whose
// most-significant of n bits is x_1, so that numeric order of codes is the
// textual order of words.
BinarySequence seq_from_code(std::uint32_t code, int n) {
    if (n == 0) return {};
    return BinarySequence(detail::bit_reverse64(code) >> (64 - n), n);
}

std::uint32_t code_from_seq(const BinarySequence& x) {
    if (x.length() == 0) return 0;
    return static_cast<std::uint32_t>(x.lex_key() >> (64 - x.length()));
}

std::uint32_t reverse_code(std::uint32_t code, int n) {
    return static_cast<std::uint32_t>(detail::bit_reverse64(code) >> (64 - n));
}

int lcs_codes(std::uint32_t a, std::uint32_t b, int n) {
    const std::uint64_t mask = detail::length_mask(n);
    const std::uint64_t m1 = a, m0 = ~static_cast<std::uint64_t>(a) & mask;
    std::uint64_t v = mask;
    for (int j = 0; j < n; ++j) {
        const std::uint64_t m = (b >> j & 1) ? m1 : m0;
        const std::uint64_t u = v & m;
        v = ((v + u) | (v - u)) & mask;
    }
    return n - __builtin_popcountll(v);
}

// Flattened per-word subsequence-automaton tables plus ball sizes. The
// "no further occurrence" entry is remapped to n+2 so the DP can read a
// permanently zero sink row instead of branching.
struct PairEngine {
    int n, t, target;
    std::uint32_t count, mask;
    int stride;               // n + 4, also the DP row stride
    std::vector<std::uint8_t> nxt;  // [code][c][i], i in 0..n+1
    std::vector<std::uint32_t> ball;
    std::vector<std::uint32_t> rev;
    std::vector<std::uint64_t> layer0;

    PairEngine(int n_, int t_) : n(n_), t(t_), target(n_ - t_) {
        count = 1U << n;
        mask = count - 1;
        stride = n + 4;
        nxt.assign(static_cast<std::size_t>(count) * 2 * (n + 2), 0);
        ball.resize(count);
        rev.resize(count);
        for (std::uint32_t code = 0; code < count; ++code) {
            const BinarySequence x = seq_from_code(code, n);
            ball[code] = static_cast<std::uint32_t>(ball_size(x, t));
            rev[code] = reverse_code(code, n);
            std::uint8_t* tab = &nxt[static_cast<std::size_t>(code) * 2 * (n + 2)];
            tab[0 * (n + 2) + n + 1] = static_cast<std::uint8_t>(n + 2);
            tab[1 * (n + 2) + n + 1] = static_cast<std::uint8_t>(n + 2);
            for (int i = n; i >= 1; --i) {
                tab[0 * (n + 2) + i] = tab[0 * (n + 2) + i + 1];
                tab[1 * (n + 2) + i] = tab[1 * (n + 2) + i + 1];
                tab[x.bit(i) * (n + 2) + i] = static_cast<std::uint8_t>(i);
            }
        }
        layer0.assign(static_cast<std::size_t>(n + 4) * stride, 0);
        for (int i = 1; i <= n + 1; ++i)
            for (int j = 1; j <= n + 1; ++j) layer0[i * stride + j] = 1;
    }

    const std::uint8_t* table(std::uint32_t code, int c) const {
        return &nxt[(static_cast<std::size_t>(code) * 2 + c) * (n + 2)];
    }

    std::uint64_t common_count(std::uint32_t a, std::uint32_t b, std::vector<std::uint64_t>& prev,
                               std::vector<std::uint64_t>& cur) const {
        if (target < 0) return 0;
        if (target == 0) return 1;
        prev = layer0;
        cur = layer0;
        const std::uint8_t* tx0 = table(a, 0);
        const std::uint8_t* tx1 = table(a, 1);
        const std::uint8_t* ty0 = table(b, 0);
        const std::uint8_t* ty1 = table(b, 1);
        for (int k = 1; k <= target; ++k) {
            for (int i = 1; i <= n + 1; ++i) {
                const std::uint64_t* row0 = &prev[(tx0[i] + 1) * stride];
                const std::uint64_t* row1 = &prev[(tx1[i] + 1) * stride];
                std::uint64_t* out = &cur[i * stride];
                for (int j = 1; j <= n + 1; ++j) out[j] = row0[ty0[j] + 1] + row1[ty1[j] + 1];
            }
            std::swap(prev, cur);
        }
        return prev[stride + 1];
    }

    // Least ordered pair in the orbit of {a, b} under swap, joint complement
    // and joint reversal.
    std::pair<std::uint32_t, std::uint32_t> orbit_min(std::uint32_t a, std::uint32_t b) const {
        auto norm = [](std::uint32_t p, std::uint32_t q) {
            return p <= q ? std::pair{p, q} : std::pair{q, p};
        };
        auto best = norm(a, b);
        best = std::min(best, norm(mask ^ a, mask ^ b));
        best = std::min(best, norm(rev[a], rev[b]));
        best = std::min(best, norm(mask ^ rev[a], mask ^ rev[b]));
        return best;
    }
};

struct WorkerResult {
    bool found = false;
    std::uint64_t best = 0;
    std::pair<std::uint32_t, std::uint32_t> witness{0, 0};
    std::uint64_t pairs = 0;
    std::uint64_t classes = 0;
};

void merge_into(WorkerResult& acc, const WorkerResult& part) {
    acc.pairs += part.pairs;
    acc.classes += part.classes;
    if (!part.found) return;
    if (!acc.found || part.best > acc.best) {
        acc.found = true;
        acc.best = part.best;
        acc.witness = part.witness;
    } else if (part.best == acc.best && part.witness < acc.witness) {
        acc.witness = part.witness;
    }
}

WorkerResult scan_range(const PairEngine& eng, int d, std::uint32_t lo, std::uint32_t hi,
                        bool symmetry) {
    WorkerResult res;
    std::vector<std::uint64_t> prev, cur;
    const int n = eng.n;
    for (std::uint32_t a = lo; a < hi; ++a) {
        for (std::uint32_t b = a + 1; b < eng.count; ++b) {
            if (symmetry) {
                if (eng.orbit_min(a, b) != std::pair{a, b}) continue;
                ++res.classes;
            } else if (eng.orbit_min(a, b) == std::pair{a, b}) {
                ++res.classes;
            }
            ++res.pairs;
            if (res.found && std::min(eng.ball[a], eng.ball[b]) < res.best) continue;
            if (n - lcs_codes(a, b, n) < d) continue;
            const std::uint64_t v = eng.common_count(a, b, prev, cur);
            if (!res.found || v > res.best) {
                res.found = true;
                res.best = v;
                res.witness = eng.orbit_min(a, b);
            } else if (v == res.best) {
                res.witness = std::min(res.witness, eng.orbit_min(a, b));
            }
        }
    }
    return res;
}

}  // namespace

std::pair<BinarySequence, BinarySequence> canonical_pair(const BinarySequence& x,
                                                         const BinarySequence& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("canonical form is defined on equal lengths");
    auto norm = [](BinarySequence p, BinarySequence q) {
        return lex_less(q, p) ? std::pair{q, p} : std::pair{p, q};
    };
    auto less = [](const auto& a, const auto& b) {
        if (a.first != b.first) return lex_less(a.first, b.first);
        return lex_less(a.second, b.second);
    };
    auto best = norm(x, y);
    for (const auto& cand :
         {norm(complement(x), complement(y)), norm(reversed(x), reversed(y)),
          norm(complement(reversed(x)), complement(reversed(y)))}) {
        if (less(cand, best)) best = cand;
    }
    return best;
}

SearchReport nvalue_search(int n, int d, int t, const SearchOptions& options) {
    if (n < 1) throw std::domain_error("n must be positive");
    if (d < 1 || d > t) throw std::domain_error("requires 1 <= d <= t");
    const int hard_limit = 16;
    if (n > hard_limit) throw std::domain_error("n above the engine limit of 16");
    if (!options.extended && (n > 13 || (n == 13 && t >= 5)))
        throw std::domain_error("configuration requires the extended budget flag");

    const auto start = std::chrono::steady_clock::now();
    const PairEngine eng(n, t);

    const int threads = std::max(1, options.threads);
    WorkerResult total;
    if (threads == 1) {
        total = scan_range(eng, d, 0, eng.count, options.symmetry_reduction);
    } else {
        std::vector<WorkerResult> parts(threads);
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            const std::uint32_t lo = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(eng.count) * w / threads);
            const std::uint32_t hi = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(eng.count) * (w + 1) / threads);
            pool.emplace_back([&, w, lo, hi] {
                parts[w] = scan_range(eng, d, lo, hi, options.symmetry_reduction);
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts) merge_into(total, part);
    }

    SearchReport report;
    report.n = n;
    report.d = d;
    report.t = t;
    report.value = total.found ? total.best : 0;
    if (total.found) {
        report.witness = SearchWitness{seq_from_code(total.witness.first, n),
                                       seq_from_code(total.witness.second, n), t, t};
    }
    report.pairs_scanned = total.pairs;
    report.classes_scanned = total.classes;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

// Shared scaffolding for the small constrained scans: feed candidate pairs in
// ascending order and keep the first attaining witness.
struct ConstrainedScan {
    std::uint64_t best = 0;
    bool found = false;
    SearchWitness witness;
    std::uint64_t pairs = 0;

    void offer(const BinarySequence& x, int sx, const BinarySequence& y, int sy) {
        ++pairs;
        const std::uint64_t v = intersection_size(x, sx, y, sy);
        if (!found || v > best) {
            found = true;
            best = v;
            witness = SearchWitness{x, y, sx, sy};
        }
    }
};

SearchReport finish(ConstrainedScan& scan, int n, int d, int t,
                    const std::chrono::steady_clock::time_point& start) {
    SearchReport report;
    report.n = n;
    report.d = d;
    report.t = t;
    report.value = scan.best;
    if (scan.found) report.witness = scan.witness;
    report.pairs_scanned = scan.pairs;
    report.classes_scanned = scan.pairs;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

SearchReport constrained_max(const ConstrainedSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    ConstrainedScan scan;
    switch (spec.family) {
        case ConstrainedFamily::length_gap_max: {
            const int n = spec.n;
            if (n < 1 || n > 12) throw std::domain_error("length gap family scans n in [1, 12]");
            for (std::uint32_t a = 0; a < (1U << n); ++a) {
                const BinarySequence x = seq_from_code(a, n);
                for (std::uint32_t b = 0; b < (1U << (n + 2)); ++b) {
                    const BinarySequence y = seq_from_code(b, n + 2);
                    if (is_subsequence(x, y)) continue;  // excludes x ∈ D_2(y)
                    scan.offer(x, 2, y, 4);
                }
            }
            return finish(scan, n, 0, 0, start);
        }
        case ConstrainedFamily::headed_middle_gap: {
            for (int c = 0; c <= 1; ++c) {
                const BinarySequence head(static_cast<std::uint64_t>(c) << 1 | (1 - c), 2);
                for (std::uint32_t vb = 0; vb < 64; ++vb) {
                    const BinarySequence v(vb, 6);
                    if (v.bit(1) != 1 - c) continue;
                    for (std::uint32_t wb = 0; wb < 64; ++wb) {
                        const BinarySequence vt(wb, 6);
                        if (vt.bit(1) != c || vt.bit(6) == v.bit(6)) continue;
                        if (levenshtein_distance(v, vt) != 2) continue;
                        scan.offer(concat(head, v), 4, vt, 2);
                    }
                }
            }
            return finish(scan, 8, 0, 0, start);
        }
        case ConstrainedFamily::tailed_middle_gap: {
            scan.offer(BinarySequence::parse("10101010"), 4, BinarySequence::parse("011001"), 2);
            scan.offer(BinarySequence::parse("01010101"), 4, BinarySequence::parse("100110"), 2);
            return finish(scan, 8, 0, 0, start);
        }
        case ConstrainedFamily::shaped_middle_22:
        case ConstrainedFamily::shaped_middle_33: {
            const int r = spec.family == ConstrainedFamily::shaped_middle_22 ? 2 : 3;
            for (int a = 0; a <= 1; ++a) {
                for (int c = 0; c <= 1; ++c) {
                    for (std::uint32_t vb = 0; vb < 64; ++vb) {
                        const BinarySequence v(vb, 6);
                        if (v.bit(1) != c || v.bit(2) != 1 - c || v.bit(3) != c ||
                            v.bit(6) != 1 - a)
                            continue;
                        for (std::uint32_t wb = 0; wb < 64; ++wb) {
                            const BinarySequence vt(wb, 6);
                            if (vt.bit(1) != 1 - c || vt.bit(5) != 1 - a || vt.bit(6) != a)
                                continue;
                            if (levenshtein_distance(v, vt) < 2) continue;
                            scan.offer(v, r, vt, r);
                        }
                    }
                }
            }
            return finish(scan, 6, 2, r, start);
        }
        case ConstrainedFamily::mid_block_len4_at10: {
            for (int s = 1; s <= 5; ++s) {
                const int t = 6 - s;
                for (std::uint32_t ub = 0; ub < (1U << s); ++ub) {
                    const BinarySequence u(ub, s);
                    for (std::uint32_t wb = 0; wb < (1U << t); ++wb) {
                        const BinarySequence w(wb, t);
                        for (std::uint32_t vb = 0; vb < 16; ++vb) {
                            const BinarySequence v(vb, 4);
                            for (std::uint32_t tb = 0; tb < 16; ++tb) {
                                const BinarySequence vt(tb, 4);
                                if (v.bit(1) == vt.bit(1) || v.bit(4) == vt.bit(4)) continue;
                                const BinarySequence x = concat(concat(u, v), w);
                                const BinarySequence y = concat(concat(u, vt), w);
                                if (levenshtein_distance(x, y) < 2) continue;
                                scan.offer(x, 3, y, 3);
                            }
                        }
                    }
                }
            }
            return finish(scan, 10, 2, 3, start);
        }
    }
    throw std::invalid_argument("unknown constrained family");
}

namespace {

struct ClaimDef {
    std::string id;
    std::string location;
    std::string relation;
    std::uint64_t expected;
    std::function<std::uint64_t()> compute;
    bool extended_only = false;
};

std::string claim_id_n(int n, int d, int t) {
    return "N(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(t) + ")";
}

}  // namespace

std::vector<ClaimRecord> verify_constants(const VerifyOptions& options) {
    std::vector<ClaimDef> defs;
    const SearchOptions search_opts{options.threads, true, options.extended};

    auto add_n = [&](int n, int d, int t, std::uint64_t expected, const std::string& where,
                     bool extended_only = false) {
        defs.push_back({claim_id_n(n, d, t), where, "eq", expected,
                        [=] { return nvalue_search(n, d, t, search_opts).value; }, extended_only});
    };

    const std::string table_34 = "published N(n,3,4) table";
    const std::uint64_t vals_34[] = {2, 4, 8, 16, 26, 40, 57, 75};
    for (int n = 5; n <= 12; ++n) add_n(n, 3, 4, vals_34[n - 5], table_34);
    add_n(13, 3, 4, 94, "published value of the first closed-form length");
    add_n(14, 3, 4, 114, "published value one past the first closed-form length", true);

    const std::string small_22 = "published N(n,2,2) small values";
    const std::uint64_t vals_22[] = {1, 2, 4, 4};
    for (int n = 2; n <= 5; ++n) add_n(n, 2, 2, vals_22[n - 2], small_22);
    for (int n = 6; n <= 9; ++n) add_n(n, 2, 2, 6, "N(n,2,2) plateau for n >= 6");

    const std::string small_23 = "published N(n,2,3) small values";
    const std::uint64_t vals_23[] = {0, 1, 2, 4, 8, 13};
    for (int n = 2; n <= 7; ++n) add_n(n, 2, 3, vals_23[n - 2], small_23);
    for (int n = 8; n <= 9; ++n) add_n(n, 2, 3, 6ULL * n - 30, "N(n,2,3) closed form");

    for (int n = 10; n <= 12; ++n) add_n(n, 3, 3, 20, "N(n,3,3) plateau for n >= 10");

    const std::uint64_t vals_f[] = {1, 2, 4, 7, 11};
    for (int n = 2; n <= 6; ++n) {
        defs.push_back({"f(" + std::to_string(n) + ")", "published f(n) values", "eq",
                        vals_f[n - 2], [n] {
                            return constrained_max({ConstrainedFamily::length_gap_max, n}).value;
                        }});
    }

    defs.push_back({"maxD4D2-headed", "searched bound in the headed-middle case", "le", 11, [] {
                        return constrained_max({ConstrainedFamily::headed_middle_gap}).value;
                    }});
    defs.push_back({"maxD4D2-tailed", "searched bound in the tailed-middle case", "le", 8, [] {
                        return constrained_max({ConstrainedFamily::tailed_middle_gap}).value;
                    }});
    defs.push_back({"maxD2D2-shaped6", "searched bound over the shaped 6-bit middles", "le", 6,
                    [] { return constrained_max({ConstrainedFamily::shaped_middle_22}).value; }});
    defs.push_back({"maxD3D3-shaped6", "searched bound over the shaped 6-bit middles", "le", 8,
                    [] { return constrained_max({ConstrainedFamily::shaped_middle_33}).value; }});
    defs.push_back({"maxD3D3-midblock4-n10", "searched bound for the length-4 middle at n = 10",
                    "le", 22, [] {
                        return constrained_max({ConstrainedFamily::mid_block_len4_at10}).value;
                    }});

    std::vector<ClaimRecord> records;
    for (const auto& def : defs) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), def.id) == options.only.end())
            continue;
        ClaimRecord rec;
        rec.id = def.id;
        rec.location = def.location;
        rec.relation = def.relation;
        rec.expected = def.expected;
        if (def.extended_only && !options.extended) {
            rec.computed = 0;
            rec.status = "trusted-not-recomputed";
        } else {
            rec.computed = def.compute();
            const bool ok =
                def.relation == "eq" ? rec.computed == rec.expected : rec.computed <= rec.expected;
            rec.status = ok ? "pass" : "fail";
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace delrecon
