#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace delrecon {

namespace detail {

constexpr std::uint64_t bit_reverse64(std::uint64_t v) {
    v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
    v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
    return (v >> 32) | (v << 32);
}

constexpr std::uint64_t length_mask(int n) {
    return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

}  // namespace detail

/// A binary word of length 0..64. Bit i (1-based, leftmost in the textual
/// form) is stored at machine bit i-1, and everything past the length is
/// kept zero so that (length, bits) equality is value equality.
class BinarySequence {
public:
    static constexpr int max_length = 64;

    constexpr BinarySequence() = default;

    constexpr BinarySequence(std::uint64_t bits, int length)
        : bits_(bits & detail::length_mask(check_length(length))),
          len_(static_cast<std::uint8_t>(length)) {}

    /// Parses a '0'/'1' string, leftmost character becoming bit 1.
    static BinarySequence parse(std::string_view text) {
        if (text.size() > max_length)
            throw std::invalid_argument("sequence longer than 64 bits");
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < text.size(); ++k) {
            char c = text[k];
            if (c == '1')
                bits |= 1ULL << k;
            else if (c != '0')
                throw std::invalid_argument("sequence may contain only '0' and '1'");
        }
        return BinarySequence(bits, static_cast<int>(text.size()));
    }

    std::string str() const {
        std::string s(len_, '0');
        for (int i = 0; i < len_; ++i)
            if (bits_ >> i & 1) s[i] = '1';
        return s;
    }

    constexpr int length() const noexcept { return len_; }
    constexpr bool empty() const noexcept { return len_ == 0; }

    /// 1-based bit access mirroring the x_1 ... x_n indexing.
    constexpr int bit(int i) const {
        if (i < 1 || i > len_) throw std::out_of_range("bit index out of range");
        return static_cast<int>(bits_ >> (i - 1) & 1);
    }

    /// Raw content, bit 1 of the word at machine bit 0.
    constexpr std::uint64_t raw() const noexcept { return bits_; }

    /// Content with bit 1 moved to machine bit 63; numeric order of keys is
    /// the textual (lexicographic) order for words of equal length.
    constexpr std::uint64_t lex_key() const noexcept { return detail::bit_reverse64(bits_); }

    friend constexpr bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    static constexpr int check_length(int n) {
        if (n < 0 || n > max_length) throw std::length_error("length must be in [0, 64]");
        return n;
    }

    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

/// Textual order: strict prefixes sort first, otherwise compare at the first
/// differing position.
constexpr bool lex_less(const BinarySequence& a, const BinarySequence& b) noexcept {
    const std::uint64_t ka = a.lex_key(), kb = b.lex_key();
    if (ka != kb) return ka < kb;
    return a.length() < b.length();
}

constexpr bool operator<(const BinarySequence& a, const BinarySequence& b) noexcept {
    return lex_less(a, b);
}

/// Maximal interval of equal symbols, 1-based inclusive.
struct Run {
    int start;
    int end;
    int symbol;

    friend bool operator==(const Run&, const Run&) = default;
};

constexpr BinarySequence complement(const BinarySequence& x) noexcept {
    return BinarySequence(~x.raw() & detail::length_mask(x.length()), x.length());
}

constexpr BinarySequence reversed(const BinarySequence& x) noexcept {
    if (x.length() == 0) return {};
    return BinarySequence(detail::bit_reverse64(x.raw()) >> (64 - x.length()), x.length());
}

inline BinarySequence concat(const BinarySequence& u, const BinarySequence& v) {
    if (u.length() + v.length() > BinarySequence::max_length)
        throw std::length_error("concatenation exceeds 64 bits");
    std::uint64_t bits = u.raw();
    if (u.length() < 64) bits |= v.raw() << u.length();
    return BinarySequence(bits, u.length() + v.length());
}

/// x_i ... x_j with 1 <= i <= j+1 and j <= |x|; i == j+1 gives the empty word.
inline BinarySequence project(const BinarySequence& x, int i, int j) {
    if (i < 1 || j > x.length() || i > j + 1)
        throw std::out_of_range("projection interval out of range");
    const int n = j - i + 1;
    return BinarySequence(x.raw() >> (i - 1), n);
}

/// Alternating word of length n whose first bit is `first`.
inline BinarySequence alternating(int n, int first) {
    if (n < 0 || n > BinarySequence::max_length)
        throw std::length_error("length must be in [0, 64]");
    if (first != 0 && first != 1) throw std::invalid_argument("first bit must be 0 or 1");
    const std::uint64_t odd = 0x5555555555555555ULL;
    return BinarySequence(first ? odd : ~odd, n);
}

constexpr bool is_two_periodic(const BinarySequence& x) noexcept {
    if (x.length() < 3) return true;
    return ((x.raw() ^ (x.raw() >> 2)) & detail::length_mask(x.length() - 2)) == 0;
}

/// Two-periodic with differing first two bits; words of length <= 1 count as
/// alternating.
constexpr bool is_alternating(const BinarySequence& x) noexcept {
    if (x.length() <= 1) return true;
    return is_two_periodic(x) && x.bit(1) != x.bit(2);
}

inline std::vector<Run> runs(const BinarySequence& x) {
    std::vector<Run> out;
    int i = 1;
    while (i <= x.length()) {
        int j = i;
        while (j < x.length() && x.bit(j + 1) == x.bit(i)) ++j;
        out.push_back(Run{i, j, x.bit(i)});
        i = j + 1;
    }
    return out;
}

constexpr int run_count(const BinarySequence& x) noexcept {
    if (x.length() == 0) return 0;
    const std::uint64_t flips = (x.raw() ^ (x.raw() >> 1)) & detail::length_mask(x.length() - 1);
    return 1 + __builtin_popcountll(flips);
}

}  // namespace delrecon
