#include "qpp/booster.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "qpp/generator.hpp"

namespace qpp {

namespace {

QppPad invert_pad(const QppPad& pad) {
    QppPad inv;
    for (std::size_t m = 0; m < kPadPerms; ++m) {
        inv.perms[m] = inverse(pad.perms[m]);
    }
    return inv;
}

void check_sizes(std::size_t in, std::size_t out) {
    if (in != out) {
        throw std::invalid_argument("output buffer size " + std::to_string(out) +
                                    " does not match input size " + std::to_string(in));
    }
}

}  // namespace

Booster::Booster(std::span<const std::uint8_t> seed)
    : Booster(pad_from_seed(seed), fold_stream_seed(seed)) {}

Booster::Booster(QppPad pad, const StreamSeed& s)
    : pad_(std::move(pad)),
      inverse_pad_(invert_pad(pad_)),
      dispatcher_(s.dispatcher_s0, s.dispatcher_s1),
      counter_(s.counter),
      feedback_(s.feedback) {}

void Booster::boost(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
    check_sizes(in.size(), out.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const std::uint8_t x = dispatcher_.next_byte();
        const std::uint8_t v =
            in[i] ^ static_cast<std::uint8_t>(counter_) ^ feedback_;
        const std::uint8_t o = pad_.perms[dispatch_index(x)](v);
        feedback_ = o;
        ++counter_;
        out[i] = o;
    }
}

void Booster::unboost(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
    check_sizes(in.size(), out.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const std::uint8_t x = dispatcher_.next_byte();
        const std::uint8_t o = in[i];  // read before out[i] aliases it
        const std::uint8_t v = inverse_pad_.perms[dispatch_index(x)](o);
        out[i] = v ^ static_cast<std::uint8_t>(counter_) ^ feedback_;
        feedback_ = o;
        ++counter_;
    }
}

std::vector<std::uint8_t> Booster::boost(std::span<const std::uint8_t> in) {
    std::vector<std::uint8_t> out(in.size());
    boost(in, out);
    return out;
}

std::vector<std::uint8_t> Booster::unboost(std::span<const std::uint8_t> in) {
    std::vector<std::uint8_t> out(in.size());
    unboost(in, out);
    return out;
}

}  // namespace qpp
