#pragma once

#include <array>
#include <cstdint>

#include "delrecon/sequence.hpp"

namespace delrecon::detail {

// Subsequence automaton: nxt[c][i] is the least position p >= i with
// x_p == c, or 0 when there is none. Valid queries use i in [1, n+1].
struct NextTable {
    std::array<std::array<std::uint8_t, BinarySequence::max_length + 2>, 2> nxt{};

    explicit NextTable(const BinarySequence& x) {
        const int n = x.length();
        nxt[0][n + 1] = 0;
        nxt[1][n + 1] = 0;
        for (int i = n; i >= 1; --i) {
            nxt[0][i] = nxt[0][i + 1];
            nxt[1][i] = nxt[1][i + 1];
            nxt[x.bit(i)][i] = static_cast<std::uint8_t>(i);
        }
    }
};

}  // namespace delrecon::detail
