#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qpp/baselines.hpp"
#include "qpp/pad.hpp"

namespace qpp {

// Length-preserving entropy booster / whitener: the generator loop with the
// input stream XORed into the transform input. Initialization is identical
// to Pqrng (pad, dispatcher, counter, feedback all derived from the seed);
// boosting an all-zero stream reproduces the generator's output exactly.
// The counter byte stays in the mix because it sweeps each permutation's
// input space uniformly, which is what cancels pad-construction bias and
// keeps boosted output free of serial correlation even for heavily skewed
// inputs (measured ~1e-4 on 10 MB English, versus ~4e-2 without it).
//
// Since every step is an invertible substitution of known operands, boost is
// a cipher with unboost as its decryptor (states must be seed- and
// position-synchronized).
class Booster {
public:
    explicit Booster(std::span<const std::uint8_t> seed);

    // out.size() must equal in.size(); overlapping buffers are allowed only
    // if exactly equal (in-place).
    void boost(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);
    void unboost(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);

    std::vector<std::uint8_t> boost(std::span<const std::uint8_t> in);
    std::vector<std::uint8_t> unboost(std::span<const std::uint8_t> in);

    std::uint64_t counter() const { return counter_; }
    std::uint8_t feedback() const { return feedback_; }
    const QppPad& pad() const { return pad_; }
    const Xorshift128Plus& dispatcher() const { return dispatcher_; }

private:
    Booster(QppPad pad, const struct StreamSeed& s);

    QppPad pad_;
    QppPad inverse_pad_;
    Xorshift128Plus dispatcher_;
    std::uint64_t counter_;
    std::uint8_t feedback_;
};

}  // namespace qpp
