#ifndef EHCUT_BITS_HPP
#define EHCUT_BITS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "ehcut/errors.hpp"

namespace ehcut {

using VertexId = std::uint32_t;

// Number of positions where two equal-length binary strings differ.
inline int hamming_distance(std::string_view x, std::string_view y) {
    if (x.size() != y.size())
        throw LengthMismatch("hamming_distance: strings of length " + std::to_string(x.size()) +
                             " and " + std::to_string(y.size()));
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        char a = x[i], b = y[i];
        if ((a != '0' && a != '1') || (b != '0' && b != '1'))
            throw InvalidParams("hamming_distance: non-binary character");
        d += (a != b);
    }
    return d;
}

inline int hamming_distance(std::uint64_t x, std::uint64_t y) {
    return std::popcount(x ^ y);
}

// Label u_{n-1}...u_1u_0; bit i of the id is character n-1-i of the string.
inline std::string to_bit_string(VertexId v, int bits) {
    std::string s(static_cast<std::size_t>(bits), '0');
    for (int i = 0; i < bits; ++i)
        if (v >> i & 1u) s[static_cast<std::size_t>(bits - 1 - i)] = '1';
    return s;
}

inline VertexId parse_bit_string(std::string_view s) {
    VertexId v = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw InvalidParams("parse_bit_string: non-binary character");
        v = (v << 1) | static_cast<VertexId>(c == '1');
    }
    return v;
}

// id with bit r removed; bits above r shift down one position.
inline VertexId delete_bit(VertexId v, int r) {
    VertexId low = v & ((VertexId{1} << r) - 1u);
    VertexId high = (v >> (r + 1)) << r;
    return high | low;
}

} // namespace ehcut

#endif
