#include "qpp/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "kernels_backends.hpp"

namespace qpp::kernels {

namespace {

std::uint64_t byte_sum_scalar(const std::uint8_t* data, std::size_t n) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += data[i];
    }
    return sum;
}

std::uint64_t bit_count_scalar(const std::uint8_t* data, std::size_t n) {
    std::uint64_t ones = 0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        std::uint64_t w;
        std::memcpy(&w, data + i, 8);
        ones += static_cast<unsigned>(__builtin_popcountll(w));
    }
    for (; i < n; ++i) {
        ones += static_cast<unsigned>(__builtin_popcount(data[i]));
    }
    return ones;
}

std::uint64_t adjacent_product_sum_scalar(const std::uint8_t* data, std::size_t n) {
    if (n < 2) {
        return 0;
    }
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        sum += static_cast<std::uint64_t>(data[i]) * data[i + 1];
    }
    return sum;
}

const Ops kScalarOps = {"scalar", byte_sum_scalar, bit_count_scalar,
                        adjacent_product_sum_scalar};

const Ops* pick_ops() {
    if (const char* env = std::getenv("QPP_KERNELS")) {
        const std::string want = env;
        if (want == "scalar") {
            return &kScalarOps;
        }
        if (want == "avx2") {
            if (const Ops* ops = avx2_ops_if_supported()) {
                return ops;
            }
            throw std::runtime_error("QPP_KERNELS=avx2 but this CPU has no AVX2");
        }
        if (want == "neon") {
            if (const Ops* ops = neon_ops_if_supported()) {
                return ops;
            }
            throw std::runtime_error("QPP_KERNELS=neon but this build has no NEON");
        }
        throw std::runtime_error("unknown QPP_KERNELS value: " + want);
    }
    if (const Ops* ops = avx2_ops_if_supported()) {
        return ops;
    }
    if (const Ops* ops = neon_ops_if_supported()) {
        return ops;
    }
    return &kScalarOps;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops& active_ops() {
    static const Ops* chosen = pick_ops();
    return *chosen;
}

void histogram(const std::uint8_t* data, std::size_t n, std::uint64_t out[256]) {
    std::uint64_t h0[256] = {}, h1[256] = {}, h2[256] = {}, h3[256] = {};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        ++h0[data[i]];
        ++h1[data[i + 1]];
        ++h2[data[i + 2]];
        ++h3[data[i + 3]];
    }
    for (; i < n; ++i) {
        ++h0[data[i]];
    }
    for (int v = 0; v < 256; ++v) {
        out[v] += h0[v] + h1[v] + h2[v] + h3[v];
    }
}

}  // namespace qpp::kernels
