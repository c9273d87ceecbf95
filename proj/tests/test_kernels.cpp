#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "kernels_backends.hpp"
#include "qpp/kernels.hpp"

using qpp::kernels::active_ops;
using qpp::kernels::Ops;
using qpp::kernels::scalar_ops;

namespace {

std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> v(n);
    for (auto& b : v) {
        b = static_cast<std::uint8_t>(rng());
    }
    return v;
}

std::uint64_t naive_byte_sum(const std::vector<std::uint8_t>& v) {
    std::uint64_t s = 0;
    for (std::uint8_t b : v) {
        s += b;
    }
    return s;
}

std::uint64_t naive_bit_count(const std::vector<std::uint8_t>& v) {
    std::uint64_t s = 0;
    for (std::uint8_t b : v) {
        for (int k = 0; k < 8; ++k) {
            s += (b >> k) & 1u;
        }
    }
    return s;
}

std::uint64_t naive_adjacent(const std::vector<std::uint8_t>& v) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        s += static_cast<std::uint64_t>(v[i]) * v[i + 1];
    }
    return s;
}

// every variant compiled into this binary and usable on this machine
std::vector<const Ops*> all_variants() {
    std::vector<const Ops*> v = {&scalar_ops(), &active_ops()};
    if (const Ops* ops = qpp::kernels::avx2_ops_if_supported()) {
        v.push_back(ops);
    }
    if (const Ops* ops = qpp::kernels::neon_ops_if_supported()) {
        v.push_back(ops);
    }
    return v;
}

const std::size_t kSizes[] = {0,  1,  2,    3,    31,          32, 33,
                              63, 64, 65,   1000, 4096,        (1u << 20) + 7};

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
    const Ops& ops = scalar_ops();
    for (std::size_t n : kSizes) {
        const auto data = random_bytes(n, 0x1000 + n);
        CHECK(ops.byte_sum(data.data(), n) == naive_byte_sum(data));
        CHECK(ops.bit_count(data.data(), n) == naive_bit_count(data));
        CHECK(ops.adjacent_product_sum(data.data(), n) == naive_adjacent(data));
    }
}

TEST_CASE("every compiled variant is bit-identical to scalar") {
    const Ops& ref = scalar_ops();
    for (const Ops* ops : all_variants()) {
        CAPTURE(ops->name);
        for (std::size_t n : kSizes) {
            const auto data = random_bytes(n, 0x2000 + n);
            CHECK(ops->byte_sum(data.data(), n) == ref.byte_sum(data.data(), n));
            CHECK(ops->bit_count(data.data(), n) == ref.bit_count(data.data(), n));
            CHECK(ops->adjacent_product_sum(data.data(), n) ==
                  ref.adjacent_product_sum(data.data(), n));
        }
    }
}

TEST_CASE("variants agree on saturating input (accumulator flush stress)") {
    // 2 MB of 0xFF drives per-lane partial sums to their worst case; a missed
    // flush in a wide accumulator shows up as a wrong total here
    const std::vector<std::uint8_t> data(2u << 20, 0xFF);
    const std::uint64_t n = data.size();
    const std::uint64_t expect_sum = 255u * n;
    const std::uint64_t expect_bits = 8u * n;
    const std::uint64_t expect_adj = 255ull * 255ull * (n - 1);
    for (const Ops* ops : all_variants()) {
        CAPTURE(ops->name);
        CHECK(ops->byte_sum(data.data(), data.size()) == expect_sum);
        CHECK(ops->bit_count(data.data(), data.size()) == expect_bits);
        CHECK(ops->adjacent_product_sum(data.data(), data.size()) == expect_adj);
    }
}

TEST_CASE("active variant is a known name") {
    const std::string name = active_ops().name;
    CHECK((name == "scalar" || name == "avx2" || name == "neon"));
#if defined(__x86_64__)
    if (!std::getenv("QPP_KERNELS") && __builtin_cpu_supports("avx2")) {
        CHECK(name == "avx2");
    }
#endif
}

TEST_CASE("histogram accumulates across calls") {
    const auto data = random_bytes(100000, 0xABCD);
    std::uint64_t hist[256] = {};
    qpp::kernels::histogram(data.data(), data.size(), hist);

    std::uint64_t expect[256] = {};
    for (std::uint8_t b : data) {
        ++expect[b];
    }
    std::uint64_t total = 0;
    for (int v = 0; v < 256; ++v) {
        CHECK(hist[v] == expect[v]);
        total += hist[v];
    }
    CHECK(total == data.size());

    // second call adds on top instead of overwriting
    qpp::kernels::histogram(data.data(), data.size(), hist);
    for (int v = 0; v < 256; ++v) {
        CHECK(hist[v] == 2 * expect[v]);
    }

    // ragged tail sizes
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                          std::size_t{5}, std::size_t{7}}) {
        std::uint64_t h[256] = {};
        qpp::kernels::histogram(data.data(), n, h);
        std::uint64_t sum = 0;
        for (int v = 0; v < 256; ++v) {
            sum += h[v];
        }
        CHECK(sum == n);
    }
}
