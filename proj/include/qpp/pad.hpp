#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qpp/permutation.hpp"

namespace qpp {

inline constexpr std::size_t kPadPerms = 64;
inline constexpr std::size_t kSeedBytes = kPadPerms * kPermKeyBytes;  // 16384

// Ordered collection of 64 byte permutations keyed by a 16 KB seed.
struct QppPad {
    std::array<Permutation, kPadPerms> perms;
};

// perms[m] is built from seed bytes [256*m, 256*m + 255], in order.
QppPad pad_from_seed(std::span<const std::uint8_t> seed);

// Selects one of the 64 pad entries from a byte: top 6 bits, exactly 4-to-1.
constexpr std::uint8_t dispatch_index(std::uint8_t x) {
    return static_cast<std::uint8_t>(x >> 2);
}

// Total key-selection entropy of the pad: 64 * log2(256!).
double pad_entropy_bits(const QppPad& pad);

}  // namespace qpp
