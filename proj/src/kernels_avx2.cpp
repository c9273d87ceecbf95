// AVX2 variants of the stats kernels. This is the only translation unit
// built with -mavx2; callers reach it through the dispatch table after a
// cpuid check, so no AVX2 instruction can execute on an unsupported CPU.
#include "kernels_backends.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cstring>

namespace qpp::kernels {

namespace {

std::uint64_t hsum_u64x4(__m256i v) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

std::uint64_t hsum_i32x8(__m256i v) {
    alignas(32) std::int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    std::uint64_t sum = 0;
    for (int k = 0; k < 8; ++k) {
        sum += static_cast<std::uint32_t>(lanes[k]);
    }
    return sum;
}

std::uint64_t byte_sum_avx2(const std::uint8_t* data, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i v =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
    }
    std::uint64_t sum = hsum_u64x4(acc);
    for (; i < n; ++i) {
        sum += data[i];
    }
    return sum;
}

std::uint64_t bit_count_avx2(const std::uint8_t* data, std::size_t n) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i v =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                            _mm256_shuffle_epi8(lut, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, zero));
    }
    std::uint64_t ones = hsum_u64x4(acc);
    for (; i < n; ++i) {
        ones += static_cast<unsigned>(__builtin_popcount(data[i]));
    }
    return ones;
}

std::uint64_t adjacent_product_sum_avx2(const std::uint8_t* data, std::size_t n) {
    if (n < 2) {
        return 0;
    }
    std::uint64_t sum = 0;
    __m256i acc32 = _mm256_setzero_si256();
    std::size_t blocks_in_acc = 0;
    std::size_t i = 0;
    // each block covers products for positions i..i+31, needing bytes up to i+32
    while (i + 33 <= n) {
        const __m256i a =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        const __m256i b =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 1));
        const __m256i a_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(a));
        const __m256i b_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(b));
        const __m256i a_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(a, 1));
        const __m256i b_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(b, 1));
        // each 32-bit lane takes two u8*u8 products (<= 130050), so 4096
        // blocks stay far below 2^31 before the flush
        acc32 = _mm256_add_epi32(acc32, _mm256_madd_epi16(a_lo, b_lo));
        acc32 = _mm256_add_epi32(acc32, _mm256_madd_epi16(a_hi, b_hi));
        i += 32;
        if (++blocks_in_acc == 4096) {
            sum += hsum_i32x8(acc32);
            acc32 = _mm256_setzero_si256();
            blocks_in_acc = 0;
        }
    }
    sum += hsum_i32x8(acc32);
    for (; i + 1 < n; ++i) {
        sum += static_cast<std::uint64_t>(data[i]) * data[i + 1];
    }
    return sum;
}

const Ops kAvx2Ops = {"avx2", byte_sum_avx2, bit_count_avx2,
                      adjacent_product_sum_avx2};

}  // namespace

const Ops* avx2_ops_if_supported() {
    return __builtin_cpu_supports("avx2") ? &kAvx2Ops : nullptr;
}

}  // namespace qpp::kernels

#else

namespace qpp::kernels {

const Ops* avx2_ops_if_supported() { return nullptr; }

}  // namespace qpp::kernels

#endif
