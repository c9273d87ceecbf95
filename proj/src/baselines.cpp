#include "qpp/baselines.hpp"

#include <stdexcept>

namespace qpp {

Xorshift128Plus::Xorshift128Plus(std::uint64_t s0, std::uint64_t s1)
    : s0_(s0), s1_(s1) {
    if (s0 == 0 && s1 == 0) {
        throw std::invalid_argument("xorshift128+ state must not be all zero");
    }
}

std::uint64_t Xorshift128Plus::next() {
    std::uint64_t x = s0_;
    const std::uint64_t y = s1_;
    s0_ = y;
    x ^= x << 23;
    s1_ = x ^ y ^ (x >> 17) ^ (y >> 26);
    return s1_ + y;
}

std::uint8_t Xorshift128Plus::next_byte() {
    if (word_bytes_left_ == 0) {
        word_ = next();
        word_bytes_left_ = 8;
    }
    const std::uint8_t b = static_cast<std::uint8_t>(word_);
    word_ >>= 8;
    --word_bytes_left_;
    return b;
}

void Xorshift128Plus::fill(std::span<std::uint8_t> out) {
    for (std::uint8_t& b : out) {
        b = next_byte();
    }
}

std::uint8_t Lcg64::next_byte() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint8_t>(state_ >> 32);
}

void Lcg64::fill(std::span<std::uint8_t> out) {
    for (std::uint8_t& b : out) {
        b = next_byte();
    }
}

}  // namespace qpp
