#include "qpp/pad.hpp"

#include <stdexcept>
#include <string>

namespace qpp {

QppPad pad_from_seed(std::span<const std::uint8_t> seed) {
    if (seed.size() != kSeedBytes) {
        throw std::invalid_argument("seed must be exactly 16384 bytes, got " +
                                    std::to_string(seed.size()));
    }
    QppPad pad;
    for (std::size_t m = 0; m < kPadPerms; ++m) {
        pad.perms[m] = permutation_from_key(seed.subspan(m * kPermKeyBytes, kPermKeyBytes));
    }
    return pad;
}

double pad_entropy_bits(const QppPad& pad) {
    return static_cast<double>(pad.perms.size()) * permutation_entropy_bits(8);
}

}  // namespace qpp
