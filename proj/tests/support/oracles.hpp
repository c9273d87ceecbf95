// Shared test fixtures and independent cross-check oracles.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qpp/baselines.hpp"
#include "qpp/pad.hpp"

namespace testsupport {

inline std::uint64_t fnv1a64(std::span<const std::uint8_t> data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string to_hex(std::span<const std::uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * data.size());
    for (std::uint8_t b : data) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xF]);
    }
    return s;
}

// Fixed 16 KB seed used by every golden test: the byte stream of the weak
// baseline generator from state 0x0123456789ABCDEF.
inline std::vector<std::uint8_t> test_seed() {
    std::vector<std::uint8_t> seed(qpp::kSeedBytes);
    qpp::Lcg64 lcg(0x0123456789ABCDEFULL);
    lcg.fill(seed);
    return seed;
}

// 64 repetitions of 0..255: every pad entry becomes the identity map.
inline std::vector<std::uint8_t> identity_seed() {
    std::vector<std::uint8_t> seed(qpp::kSeedBytes);
    for (std::size_t i = 0; i < seed.size(); ++i) {
        seed[i] = static_cast<std::uint8_t>(i & 0xFF);
    }
    return seed;
}

// Brute-force upper-tail chi-square probability by Simpson integration of
// the density; independent of the series/continued-fraction implementation.
// Accurate to ~1e-9 for moderate statistics, plenty for a 1e-5 comparison.
inline double chi_square_upper_tail_by_integration(double statistic, int df) {
    const long double a = df / 2.0L;
    const long double log_norm = -(a * std::log(2.0L) + std::lgamma(a));
    const auto pdf = [&](long double t) -> long double {
        if (t <= 0.0L) {
            return 0.0L;
        }
        return std::exp(log_norm + (a - 1.0L) * std::log(t) - t / 2.0L);
    };
    const int steps = 200000;  // even
    const long double h = statistic / steps;
    long double sum = pdf(0.0L) + pdf(statistic);
    for (int k = 1; k < steps; ++k) {
        sum += pdf(k * h) * ((k & 1) ? 4.0L : 2.0L);
    }
    return static_cast<double>(1.0L - sum * h / 3.0L);
}

}  // namespace testsupport
