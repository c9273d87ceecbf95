#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace qpp {

inline constexpr std::size_t kPermKeyBytes = 256;

// A bijection on byte values, stored as a substitution table:
// map[i] is the image of input byte i.
struct Permutation {
    std::array<std::uint8_t, 256> map;

    std::uint8_t operator()(std::uint8_t b) const { return map[b]; }
};

// Key-scheduled construction: start from the identity table and, for i from
// 255 down to 1, swap entries key[i] and i. Every key yields a bijection.
// Note this indexes the swap partner by the raw key byte (no reduction to
// 0..i), so the sampling is not uniform over the symmetric group; the
// construction is kept exactly as specified and is pinned by golden tests.
Permutation permutation_from_key(std::span<const std::uint8_t> key);

bool is_bijection(const Permutation& perm);

Permutation inverse(const Permutation& perm);

// log2((2^bit_width)!) by direct summation of log2(k); bit_width in 1..16.
double permutation_entropy_bits(int bit_width);

}  // namespace qpp
