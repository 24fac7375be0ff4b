#include "delrecon/intersect.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "delrecon/deletion_ball.hpp"
#include "next_table.hpp"

namespace delrecon {

namespace {

using detail::NextTable;

std::vector<BinarySequence> sorted_unique(std::vector<BinarySequence> v) {
    std::sort(v.begin(), v.end(), lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void append_products(std::vector<BinarySequence>& out, const std::vector<BinarySequence>& left,
                     const std::vector<BinarySequence>& mid,
                     const std::vector<BinarySequence>& right) {
    for (const auto& a : left)
        for (const auto& b : mid)
            for (const auto& c : right) out.push_back(concat(concat(a, b), c));
}

bool starts_with(const BinarySequence& z, const BinarySequence& prefix) {
    if (prefix.length() > z.length()) return false;
    return (z.raw() & detail::length_mask(prefix.length())) == prefix.raw();
}

bool ends_with(const BinarySequence& z, const BinarySequence& suffix) {
    if (suffix.length() > z.length()) return false;
    return (z.raw() >> (z.length() - suffix.length())) == suffix.raw();
}

int common_prefix_length(const BinarySequence& x, const BinarySequence& y) {
    const int n = std::min(x.length(), y.length());
    const std::uint64_t diff = (x.raw() ^ y.raw()) & detail::length_mask(n);
    return diff ? __builtin_ctzll(diff) : n;
}

int common_suffix_length(const BinarySequence& x, const BinarySequence& y) {
    return common_prefix_length(reversed(x), reversed(y));
}

}  // namespace

std::uint64_t intersection_size(const BinarySequence& x, int s, const BinarySequence& y, int t) {
    const int nx = x.length(), ny = y.length();
    if (s < 0 || s > nx || t < 0 || t > ny) return 0;
    if (nx - s != ny - t) return 0;
    const int target = nx - s;
    if (target == 0) return 1;

    const NextTable tx(x), ty(y);
    const int stride = ny + 2;
    const std::size_t cells = static_cast<std::size_t>(nx + 2) * stride;
    thread_local std::vector<std::uint64_t> prev, cur;
    prev.assign(cells, 0);
    cur.assign(cells, 0);
    for (int i = 1; i <= nx + 1; ++i)
        for (int j = 1; j <= ny + 1; ++j) prev[i * stride + j] = 1;

    // f_k(i, j) = distinct length-k words embeddable in both x_i.. and y_j..,
    // every word taken along its earliest embedding in each string.
    for (int k = 1; k <= target; ++k) {
        std::fill(cur.begin(), cur.end(), 0);
        for (int i = 1; i <= nx - k + 1; ++i) {
            const int p0 = tx.nxt[0][i], p1 = tx.nxt[1][i];
            for (int j = 1; j <= ny - k + 1; ++j) {
                std::uint64_t v = 0;
                if (p0)
                    if (const int q0 = ty.nxt[0][j]) v += prev[(p0 + 1) * stride + q0 + 1];
                if (p1)
                    if (const int q1 = ty.nxt[1][j]) v += prev[(p1 + 1) * stride + q1 + 1];
                cur[i * stride + j] = v;
            }
        }
        std::swap(prev, cur);
    }
    return prev[stride + 1];
}

std::vector<BinarySequence> intersection_elements(const BinarySequence& x, int s,
                                                  const BinarySequence& y, int t) {
    if (x.length() - s != y.length() - t) return {};
    const auto bx = deletion_ball(x, s);
    const auto by = deletion_ball(y, t);
    std::vector<BinarySequence> out;
    std::set_intersection(bx.elements.begin(), bx.elements.end(), by.elements.begin(),
                          by.elements.end(), std::back_inserter(out), lex_less);
    return out;
}

std::vector<BinarySequence> restricted_ball(const RestrictedBallSpec& spec) {
    const int n = spec.center.length();
    const int m1 = spec.required_prefix.length(), m2 = spec.required_suffix.length();
    if (m1 + m2 > n - spec.radius)
        throw std::invalid_argument("required affixes exceed the element length");
    std::vector<BinarySequence> out;
    for (const auto& z : deletion_ball(spec.center, spec.radius).elements)
        if (starts_with(z, spec.required_prefix) && ends_with(z, spec.required_suffix))
            out.push_back(z);
    return out;
}

std::optional<ReducedBall> reduce_restricted_ball(const RestrictedBallSpec& spec) {
    const BinarySequence& x = spec.center;
    const int n = x.length();
    const int m1 = spec.required_prefix.length(), m2 = spec.required_suffix.length();
    if (m1 + m2 > n - spec.radius)
        throw std::invalid_argument("required affixes exceed the element length");

    int k1 = 0;
    {
        int i = 1;
        for (int k = 1; k <= m1; ++k) {
            const int c = spec.required_prefix.bit(k);
            while (i <= n && x.bit(i) != c) ++i;
            if (i > n) return std::nullopt;
            k1 = i++;
        }
    }
    int k2 = n + 1;
    {
        int i = n;
        for (int k = m2; k >= 1; --k) {
            const int c = spec.required_suffix.bit(k);
            while (i >= 1 && x.bit(i) != c) --i;
            if (i < 1) return std::nullopt;
            k2 = i--;
        }
    }
    if (k1 >= k2) return std::nullopt;
    const BinarySequence inner = project(x, k1 + 1, k2 - 1);
    const int t_star = spec.radius - (k1 - m1) - (n - k2 + 1 - m2);
    return ReducedBall{inner, t_star};
}

bool partition_identity_holds(const BinarySequence& x, int t, int m1, int m2) {
    const int n = x.length();
    if (m1 < 0 || m2 < 0 || m1 + m2 > n - t)
        throw std::invalid_argument("affix widths must fit in the element length");
    std::uint64_t total = 0;
    for (std::uint64_t a = 0; a < (1ULL << m1); ++a) {
        for (std::uint64_t b = 0; b < (1ULL << m2); ++b) {
            RestrictedBallSpec spec{x, t, BinarySequence(a, m1), BinarySequence(b, m2)};
            if (const auto red = reduce_restricted_ball(spec))
                total += ball_size(red->inner, red->t_star);
            else
                total += restricted_ball(spec).size();
        }
    }
    return total == ball_size(x, t);
}

AffixDecomposition affix_decompose(const BinarySequence& x, const BinarySequence& y) {
    if (x == y) throw std::invalid_argument("equal words have no middle to decompose");
    const int p = common_prefix_length(x, y);
    const BinarySequence xr = project(x, p + 1, x.length());
    const BinarySequence yr = project(y, p + 1, y.length());
    const int s = common_suffix_length(xr, yr);
    AffixDecomposition d;
    d.prefix = project(x, 1, p);
    d.mid_x = project(xr, 1, xr.length() - s);
    d.mid_y = project(yr, 1, yr.length() - s);
    d.suffix = project(xr, xr.length() - s + 1, xr.length());
    return d;
}

bool affix_union_identity_holds(const BinarySequence& u, const BinarySequence& v,
                                const BinarySequence& vt, const BinarySequence& w, int t, int s) {
    const BinarySequence x = concat(concat(u, v), w);
    const BinarySequence y = concat(concat(u, vt), w);
    const auto lhs = intersection_elements(x, t, y, s);

    std::vector<BinarySequence> rhs;
    const int cap = std::min(t, s);
    for (int p = 0; p <= cap; ++p) {
        for (int q = 0; p + q <= cap; ++q) {
            const auto mid = intersection_elements(v, t - p - q, vt, s - p - q);
            if (mid.empty()) continue;
            append_products(rhs, deletion_ball(u, p).elements, mid, deletion_ball(w, q).elements);
        }
    }
    return sorted_unique(std::move(rhs)) == lhs;
}

bool affix_factorization_identity_holds(const BinarySequence& u, const BinarySequence& v,
                                        const BinarySequence& vt, const BinarySequence& w, int t) {
    if (v.length() != vt.length())
        throw std::invalid_argument("middles must have equal length");
    if (levenshtein_distance(v, vt) < t)
        throw std::invalid_argument("middles must be at distance at least t");
    const BinarySequence x = concat(concat(u, v), w);
    const BinarySequence y = concat(concat(u, vt), w);
    const auto lhs = intersection_elements(x, t, y, t);

    std::vector<BinarySequence> rhs;
    append_products(rhs, {u}, intersection_elements(v, t, vt, t), {w});
    return sorted_unique(std::move(rhs)) == lhs;
}

std::optional<TypeAWitness> type_a_confusable(const BinarySequence& x, const BinarySequence& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("confusability is defined on equal lengths");
    if (x == y) return std::nullopt;
    const std::uint64_t diff = x.raw() ^ y.raw();
    const int i = __builtin_ctzll(diff) + 1;
    const int j = 64 - __builtin_clzll(diff);
    // The complemented middle disagrees everywhere, so the differing
    // positions must form one contiguous block.
    if (diff != (detail::length_mask(j - i + 1) << (i - 1))) return std::nullopt;
    if (j - i + 1 < 2) return std::nullopt;
    const BinarySequence mid = project(x, i, j);
    if (!is_alternating(mid)) return std::nullopt;
    return TypeAWitness{project(x, 1, i - 1), mid, project(x, j + 1, x.length())};
}

namespace {

bool type_b_one_direction(const BinarySequence& x, const BinarySequence& y) {
    const int n = x.length();
    if (n < 3) return false;
    const int lcp = common_prefix_length(x, y);
    const int lcs = common_suffix_length(x, y);
    for (int ulen = 0; ulen <= std::min(lcp, n - 3); ++ulen) {
        const int a = x.bit(ulen + 1);
        if (x.bit(ulen + 2) != 1 - a || y.bit(ulen + 1) != 1 - a) continue;
        bool v_equal = true;
        for (int vlen = 0; ulen + 3 + vlen <= n; ++vlen) {
            if (vlen > 0) v_equal = v_equal && x.bit(ulen + 2 + vlen) == y.bit(ulen + 1 + vlen);
            if (!v_equal) break;
            const int b = x.bit(ulen + 3 + vlen);
            if (y.bit(ulen + 2 + vlen) != b || y.bit(ulen + 3 + vlen) != 1 - b) continue;
            if (n - (ulen + 3 + vlen) <= lcs) return true;
        }
    }
    return false;
}

}  // namespace

bool type_b_confusable(const BinarySequence& x, const BinarySequence& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("confusability is defined on equal lengths");
    return type_b_one_direction(x, y) || type_b_one_direction(y, x);
}

int hamming_distance(const BinarySequence& x, const BinarySequence& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("Hamming distance requires equal lengths");
    return __builtin_popcountll(x.raw() ^ y.raw());
}

DistanceOnePairClass classify_distance_one_pair(const BinarySequence& x, const BinarySequence& y) {
    const int n = x.length();
    if (n < 7) throw std::domain_error("classification needs length at least 7");
    if (levenshtein_distance(x, y) != 1)
        throw std::invalid_argument("classification needs distance exactly one");

    if (intersection_size(x, 1, y, 1) <= 1) return DistanceOnePairClass::at_most_n;
    const auto wit = type_a_confusable(x, y);
    if (!wit) throw std::logic_error("two shared single-deletion words without the block shape");

    if (!is_alternating(wit->prefix) || !is_alternating(wit->suffix))
        return DistanceOnePairClass::other;
    const int s = wit->prefix.length(), l = wit->mid.length(), t = wit->suffix.length();
    const int lo = std::min(s, t), hi = std::max(s, t);
    if (l == n || (l == 2 && lo == 0)) return DistanceOnePairClass::two_n_minus_4;
    if (l == n - 1 || (l == n - 2 && lo == 0 && hi == 2) || (l == 2 && lo >= 1) ||
        (l >= 3 && l <= n - 2 && lo == 0 && hi >= 1))
        return DistanceOnePairClass::two_n_minus_5;
    if (l >= 3 && l <= n - 2 && lo >= 1) return DistanceOnePairClass::two_n_minus_6;
    return DistanceOnePairClass::other;
}

}  // namespace delrecon
