#include "qpp/generator.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qpp {

namespace {

std::uint64_t load_le64(const std::uint8_t* p) {
    std::uint64_t w = 0;
    for (int i = 0; i < 8; ++i) {
        w |= std::uint64_t{p[i]} << (8 * i);
    }
    return w;
}

}  // namespace

StreamSeed fold_stream_seed(std::span<const std::uint8_t> seed) {
    if (seed.size() != kSeedBytes) {
        throw std::invalid_argument("seed must be exactly 16384 bytes, got " +
                                    std::to_string(seed.size()));
    }
    std::uint8_t fold16[16] = {};
    std::uint8_t fold8[8] = {};
    std::uint8_t fb = 0;
    for (std::size_t j = 0; j < seed.size(); ++j) {
        fold16[j % 16] ^= seed[j];
        fold8[j % 8] ^= seed[j];
        fb ^= seed[j];
    }
    StreamSeed s;
    s.dispatcher_s0 = load_le64(fold16);
    s.dispatcher_s1 = load_le64(fold16 + 8);
    if (s.dispatcher_s0 == 0 && s.dispatcher_s1 == 0) {
        s.dispatcher_s0 = 1;
    }
    s.counter = load_le64(fold8);
    s.feedback = fb;
    return s;
}

Pqrng::Pqrng(std::span<const std::uint8_t> seed)
    : Pqrng(pad_from_seed(seed), fold_stream_seed(seed)) {}

Pqrng::Pqrng(QppPad pad, const StreamSeed& s)
    : pad_(std::move(pad)),
      dispatcher_(s.dispatcher_s0, s.dispatcher_s1),
      counter_(s.counter),
      feedback_(s.feedback) {}

std::uint8_t Pqrng::next_byte() {
    const std::uint8_t x = dispatcher_.next_byte();
    const std::uint8_t in = static_cast<std::uint8_t>(counter_) ^ feedback_;
    const std::uint8_t out = pad_.perms[dispatch_index(x)](in);
    feedback_ = out;
    ++counter_;
    return out;
}

void Pqrng::fill(std::span<std::uint8_t> out) {
    for (std::uint8_t& b : out) {
        b = next_byte();
    }
}

std::vector<std::uint8_t> Pqrng::generate(std::size_t n) {
    std::vector<std::uint8_t> out(n);
    fill(out);
    return out;
}

}  // namespace qpp
