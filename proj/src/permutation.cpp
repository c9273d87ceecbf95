#include "qpp/permutation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qpp {

Permutation permutation_from_key(std::span<const std::uint8_t> key) {
    if (key.size() != kPermKeyBytes) {
        throw std::invalid_argument("permutation key must be exactly 256 bytes, got " +
                                    std::to_string(key.size()));
    }
    Permutation p;
    std::iota(p.map.begin(), p.map.end(), 0);
    for (int i = 255; i >= 1; --i) {
        std::swap(p.map[key[i]], p.map[i]);
    }
    return p;
}

bool is_bijection(const Permutation& perm) {
    std::array<bool, 256> seen = {};
    for (std::uint8_t v : perm.map) {
        if (seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

Permutation inverse(const Permutation& perm) {
    Permutation q;
    for (std::size_t i = 0; i < 256; ++i) {
        q.map[perm.map[i]] = static_cast<std::uint8_t>(i);
    }
    return q;
}

double permutation_entropy_bits(int bit_width) {
    if (bit_width < 1 || bit_width > 16) {
        throw std::domain_error("bit width must be in 1..16");
    }
    const long n = 1L << bit_width;
    long double bits = 0.0L;
    for (long k = 2; k <= n; ++k) {
        bits += std::log2(static_cast<long double>(k));
    }
    return static_cast<double>(bits);
}

}  // namespace qpp
