#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qpp/baselines.hpp"
#include "qpp/pad.hpp"

namespace qpp {

// Stream-state material folded out of the 16 KB seed: the full seed is pad
// key material, so the dispatcher, counter, and feedback are derived by
// XOR-folding the same bytes rather than consuming extra input.
struct StreamSeed {
    std::uint64_t dispatcher_s0;  // 16-byte fold, lanes j%16, as two LE words;
    std::uint64_t dispatcher_s1;  // (0,0) is fixed up to (1,0)
    std::uint64_t counter;        // 8-byte fold, lanes j%8, LE
    std::uint8_t feedback;        // XOR of all seed bytes
};

StreamSeed fold_stream_seed(std::span<const std::uint8_t> seed);

// Deterministic permutation-pad generator: each step substitutes
// (counter byte XOR previous output) through a pad entry selected by the
// dispatcher byte, then feeds the output back.
class Pqrng {
public:
    explicit Pqrng(std::span<const std::uint8_t> seed);

    std::uint8_t next_byte();
    void fill(std::span<std::uint8_t> out);
    std::vector<std::uint8_t> generate(std::size_t n);

    std::uint64_t counter() const { return counter_; }
    std::uint8_t feedback() const { return feedback_; }
    const QppPad& pad() const { return pad_; }
    const Xorshift128Plus& dispatcher() const { return dispatcher_; }

private:
    Pqrng(QppPad pad, const StreamSeed& s);

    QppPad pad_;
    Xorshift128Plus dispatcher_;
    std::uint64_t counter_;
    std::uint8_t feedback_;
};

}  // namespace qpp
