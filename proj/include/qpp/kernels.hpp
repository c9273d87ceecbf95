#pragma once

#include <cstddef>
#include <cstdint>

namespace qpp::kernels {

// Hot reduction kernels behind the statistics battery. Scalar versions are
// the reference; AVX2/NEON variants are selected once at runtime and must be
// bit-identical (all-integer arithmetic, equivalence-tested).
struct Ops {
    const char* name;
    // sum of byte values
    std::uint64_t (*byte_sum)(const std::uint8_t* data, std::size_t n);
    // number of set bits
    std::uint64_t (*bit_count)(const std::uint8_t* data, std::size_t n);
    // sum of data[i]*data[i+1] for i in [0, n-2]; 0 when n < 2
    std::uint64_t (*adjacent_product_sum)(const std::uint8_t* data,
                                          std::size_t n);
};

const Ops& scalar_ops();

// Best variant for this machine, chosen once: env QPP_KERNELS=scalar|avx2|neon
// overrides; otherwise cpuid (x86) / baseline NEON (aarch64) / scalar.
// Throws std::runtime_error for an unknown or unsupported override.
const Ops& active_ops();

// Adds the count of each byte value to out[256] (always scalar: the access
// pattern is gather/scatter; four sub-tables break store-to-load dependences
// on repeated values).
void histogram(const std::uint8_t* data, std::size_t n, std::uint64_t out[256]);

}  // namespace qpp::kernels
