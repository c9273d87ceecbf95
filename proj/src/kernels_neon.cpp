// NEON variants of the stats kernels (baseline on aarch64, so no runtime
// feature probe is needed beyond the architecture itself).
#include "kernels_backends.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace qpp::kernels {

namespace {

std::uint64_t byte_sum_neon(const std::uint8_t* data, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const uint8x16_t v = vld1q_u8(data + i);
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(v))));
    }
    std::uint64_t sum = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) {
        sum += data[i];
    }
    return sum;
}

std::uint64_t bit_count_neon(const std::uint8_t* data, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const uint8x16_t cnt = vcntq_u8(vld1q_u8(data + i));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(cnt))));
    }
    std::uint64_t ones = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) {
        ones += static_cast<unsigned>(__builtin_popcount(data[i]));
    }
    return ones;
}

std::uint64_t adjacent_product_sum_neon(const std::uint8_t* data, std::size_t n) {
    if (n < 2) {
        return 0;
    }
    std::uint64_t sum = 0;
    uint32x4_t acc32 = vdupq_n_u32(0);
    std::size_t blocks_in_acc = 0;
    std::size_t i = 0;
    // each block covers products for positions i..i+15, needing bytes up to i+16
    while (i + 17 <= n) {
        const uint8x16_t a = vld1q_u8(data + i);
        const uint8x16_t b = vld1q_u8(data + i + 1);
        const uint16x8_t lo = vmull_u8(vget_low_u8(a), vget_low_u8(b));
        const uint16x8_t hi = vmull_u8(vget_high_u8(a), vget_high_u8(b));
        // pairwise u16 adds into u32 lanes: <= 130050 per block and lane,
        // so 16384 blocks stay below 2^32 before the flush
        acc32 = vpadalq_u16(acc32, lo);
        acc32 = vpadalq_u16(acc32, hi);
        i += 16;
        if (++blocks_in_acc == 16384) {
            const uint64x2_t wide = vpaddlq_u32(acc32);
            sum += vgetq_lane_u64(wide, 0) + vgetq_lane_u64(wide, 1);
            acc32 = vdupq_n_u32(0);
            blocks_in_acc = 0;
        }
    }
    const uint64x2_t wide = vpaddlq_u32(acc32);
    sum += vgetq_lane_u64(wide, 0) + vgetq_lane_u64(wide, 1);
    for (; i + 1 < n; ++i) {
        sum += static_cast<std::uint64_t>(data[i]) * data[i + 1];
    }
    return sum;
}

const Ops kNeonOps = {"neon", byte_sum_neon, bit_count_neon,
                      adjacent_product_sum_neon};

}  // namespace

const Ops* neon_ops_if_supported() { return &kNeonOps; }

}  // namespace qpp::kernels

#else

namespace qpp::kernels {

const Ops* neon_ops_if_supported() { return nullptr; }

}  // namespace qpp::kernels

#endif
