#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace qpp {

// The five byte-level randomness statistics plus sample size.
// serial_degenerate marks constant input, where the correlation denominator
// is zero and the coefficient is reported as 0 by convention.
struct EntReport {
    std::uint64_t sample_bytes = 0;
    double entropy_bits_per_byte = 0.0;
    double chi_square = 0.0;
    double chi_p_value = 0.0;
    double arithmetic_mean = 0.0;
    double monte_carlo_pi = 0.0;
    double serial_correlation = 0.0;
    bool serial_degenerate = false;
};

// Shannon entropy of the byte histogram, bits per byte. Empty input: domain error.
double byte_entropy(std::span<const std::uint8_t> data);

// Sum over byte values of (observed - expected)^2 / expected, expected = n/256.
double chi_square_statistic(std::span<const std::uint8_t> data);

// Upper-tail probability of the chi-square distribution: the regularized
// incomplete gamma Q(df/2, x/2), series for x < df+1 and continued fraction
// otherwise; absolute accuracy 1e-6 or better. statistic < 0 or df < 1:
// domain error.
double chi_square_p_value(double statistic, unsigned degrees_of_freedom);

double arithmetic_mean(std::span<const std::uint8_t> data);

// Non-overlapping 6-byte groups; bytes 0-2 / 3-5 are X / Y as 24-bit
// big-endian coordinates, inside iff X^2 + Y^2 <= (2^24 - 1)^2;
// estimate = 4 * inside / groups. Fewer than 6 bytes: domain error.
double monte_carlo_pi(std::span<const std::uint8_t> data);

// Pearson correlation between the sequence and its successor, with the last
// byte wrapping to the first. Constant data returns 0 and sets *degenerate.
// Fewer than 2 bytes: domain error.
double serial_correlation(std::span<const std::uint8_t> data,
                          bool* degenerate = nullptr);

// Frequency (monobit) test over all bits: p = erfc(|#1 - #0| / sqrt(n) / sqrt(2)).
// Fewer than 100 bits: domain error.
double monobit_frequency(std::span<const std::uint8_t> data);

// All report fields in one pass; requires at least 6 bytes.
EntReport ent_report(std::span<const std::uint8_t> data);

// Streaming equivalent of ent_report: O(1) memory, any chunking, results
// identical to the one-shot call on the concatenated input.
class EntAccumulator {
public:
    void update(std::span<const std::uint8_t> chunk);
    EntReport finalize() const;  // domain error if fewer than 6 bytes seen
    std::uint64_t total_bytes() const { return n_; }

private:
    std::uint64_t hist_[256] = {};
    std::uint64_t n_ = 0;
    std::uint64_t adjacent_sum_ = 0;  // in-order a[i]*a[i+1], wrap added at finalize
    std::uint64_t mc_groups_ = 0;
    std::uint64_t mc_inside_ = 0;
    std::uint8_t mc_buf_[6] = {};
    int mc_fill_ = 0;
    std::uint8_t first_ = 0;
    std::uint8_t last_ = 0;
};

// Human-readable table (one statistic per row) and machine-readable
// key=value lines with exactly the seven report fields.
std::string format_report_text(const EntReport& report);
std::string format_report_machine(const EntReport& report);

}  // namespace qpp
