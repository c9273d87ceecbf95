#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace qpp {

// xorshift128+ with shift constants (23, 17, 26). Also usable as a byte
// source: each 64-bit word is consumed low byte first.
class Xorshift128Plus {
public:
    // Throws std::invalid_argument if both words are zero.
    Xorshift128Plus(std::uint64_t s0, std::uint64_t s1);

    std::uint64_t next();

    std::uint8_t next_byte();
    void fill(std::span<std::uint8_t> out);

    std::uint64_t s0() const { return s0_; }
    std::uint64_t s1() const { return s1_; }

private:
    std::uint64_t s0_;
    std::uint64_t s1_;
    std::uint64_t word_ = 0;
    int word_bytes_left_ = 0;
};

// Classic 64-bit LCG emitting bits 32..39 of each new state. Deliberately
// weak baseline for whitening demos; also used to build fixed test fixtures.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t state) : state_(state) {}

    std::uint8_t next_byte();
    void fill(std::span<std::uint8_t> out);

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace qpp
