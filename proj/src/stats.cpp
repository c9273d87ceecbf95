#include "qpp/stats.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qpp/kernels.hpp"

namespace qpp {

namespace {

constexpr std::uint64_t kMcRadius2 =
    (std::uint64_t{(1 << 24) - 1}) * ((1 << 24) - 1);

// Regularized upper incomplete gamma Q(a, x): power series below a+1,
// modified-Lentz continued fraction above. Converges to ~1e-15 relative,
// well past the 1e-6 contract.
long double gamma_q(long double a, long double x) {
    if (x <= 0.0L) {
        return 1.0L;
    }
    const long double log_prefactor = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0L) {
        long double ap = a;
        long double term = 1.0L / a;
        long double sum = term;
        for (int k = 0; k < 10000; ++k) {
            ap += 1.0L;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-18L) {
                break;
            }
        }
        return 1.0L - sum * std::exp(log_prefactor);
    }
    const long double kFloor = 1e-300L;
    long double b = x + 1.0L - a;
    long double c = 1.0L / kFloor;
    long double d = 1.0L / b;
    long double h = d;
    for (int i = 1; i < 10000; ++i) {
        const long double an = -static_cast<long double>(i) * (i - a);
        b += 2.0L;
        d = an * d + b;
        if (std::fabs(d) < kFloor) d = kFloor;
        c = b + an / c;
        if (std::fabs(c) < kFloor) c = kFloor;
        d = 1.0L / d;
        const long double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0L) < 1e-18L) {
            break;
        }
    }
    return std::exp(log_prefactor) * h;
}

void require_nonempty(std::span<const std::uint8_t> data) {
    if (data.empty()) {
        throw std::domain_error("statistic requires non-empty input");
    }
}

}  // namespace

double chi_square_p_value(double statistic, unsigned degrees_of_freedom) {
    if (statistic < 0.0 || std::isnan(statistic)) {
        throw std::domain_error("chi-square statistic must be non-negative");
    }
    if (degrees_of_freedom < 1) {
        throw std::domain_error("degrees of freedom must be at least 1");
    }
    const long double q = gamma_q(degrees_of_freedom / 2.0L, statistic / 2.0L);
    if (q < 0.0L) return 0.0;
    if (q > 1.0L) return 1.0;
    return static_cast<double>(q);
}

double byte_entropy(std::span<const std::uint8_t> data) {
    require_nonempty(data);
    std::uint64_t hist[256] = {};
    kernels::histogram(data.data(), data.size(), hist);
    const long double n = static_cast<long double>(data.size());
    long double h = 0.0L;
    for (std::uint64_t count : hist) {
        if (count) {
            const long double p = count / n;
            h -= p * std::log2(p);
        }
    }
    return static_cast<double>(h);
}

double chi_square_statistic(std::span<const std::uint8_t> data) {
    require_nonempty(data);
    std::uint64_t hist[256] = {};
    kernels::histogram(data.data(), data.size(), hist);
    const long double expected = data.size() / 256.0L;
    long double chi = 0.0L;
    for (std::uint64_t count : hist) {
        const long double d = count - expected;
        chi += d * d / expected;
    }
    return static_cast<double>(chi);
}

double arithmetic_mean(std::span<const std::uint8_t> data) {
    require_nonempty(data);
    const std::uint64_t sum =
        kernels::active_ops().byte_sum(data.data(), data.size());
    return static_cast<double>(static_cast<long double>(sum) / data.size());
}

double monte_carlo_pi(std::span<const std::uint8_t> data) {
    if (data.size() < 6) {
        throw std::domain_error("Monte Carlo estimate requires at least 6 bytes");
    }
    std::uint64_t groups = 0;
    std::uint64_t inside = 0;
    for (std::size_t o = 0; o + 6 <= data.size(); o += 6) {
        const std::uint64_t x = (std::uint64_t{data[o]} << 16) |
                                (std::uint64_t{data[o + 1]} << 8) | data[o + 2];
        const std::uint64_t y = (std::uint64_t{data[o + 3]} << 16) |
                                (std::uint64_t{data[o + 4]} << 8) | data[o + 5];
        ++groups;
        inside += (x * x + y * y <= kMcRadius2) ? 1 : 0;
    }
    return static_cast<double>(4.0L * inside / groups);
}

double serial_correlation(std::span<const std::uint8_t> data, bool* degenerate) {
    if (data.size() < 2) {
        throw std::domain_error("serial correlation requires at least 2 bytes");
    }
    const auto& ops = kernels::active_ops();
    const std::uint64_t n = data.size();
    const std::uint64_t sxy = ops.adjacent_product_sum(data.data(), n) +
                              std::uint64_t{data.back()} * data.front();
    const std::uint64_t sx = ops.byte_sum(data.data(), n);
    std::uint64_t hist[256] = {};
    kernels::histogram(data.data(), n, hist);
    std::uint64_t sx2 = 0;
    for (std::uint64_t v = 0; v < 256; ++v) {
        sx2 += hist[v] * v * v;
    }
    const __int128 num = static_cast<__int128>(n) * sxy -
                         static_cast<__int128>(sx) * sx;
    const __int128 den = static_cast<__int128>(n) * sx2 -
                         static_cast<__int128>(sx) * sx;
    if (degenerate) {
        *degenerate = (den == 0);
    }
    if (den == 0) {
        return 0.0;
    }
    return static_cast<double>(static_cast<long double>(num) /
                               static_cast<long double>(den));
}

double monobit_frequency(std::span<const std::uint8_t> data) {
    const std::uint64_t bits = 8 * static_cast<std::uint64_t>(data.size());
    if (bits < 100) {
        throw std::domain_error("frequency test requires at least 100 bits");
    }
    const std::uint64_t ones =
        kernels::active_ops().bit_count(data.data(), data.size());
    const long double s =
        std::fabs(2.0L * ones - static_cast<long double>(bits)) /
        std::sqrt(static_cast<long double>(bits));
    return static_cast<double>(std::erfc(s / std::sqrt(2.0L)));
}

EntReport ent_report(std::span<const std::uint8_t> data) {
    EntAccumulator acc;
    acc.update(data);
    return acc.finalize();
}

void EntAccumulator::update(std::span<const std::uint8_t> chunk) {
    if (chunk.empty()) {
        return;
    }
    kernels::histogram(chunk.data(), chunk.size(), hist_);
    const auto& ops = kernels::active_ops();
    if (n_ == 0) {
        first_ = chunk.front();
    } else {
        adjacent_sum_ += std::uint64_t{last_} * chunk.front();
    }
    adjacent_sum_ += ops.adjacent_product_sum(chunk.data(), chunk.size());
    last_ = chunk.back();

    std::size_t idx = 0;
    const auto consume_group = [this](const std::uint8_t* g) {
        const std::uint64_t x =
            (std::uint64_t{g[0]} << 16) | (std::uint64_t{g[1]} << 8) | g[2];
        const std::uint64_t y =
            (std::uint64_t{g[3]} << 16) | (std::uint64_t{g[4]} << 8) | g[5];
        ++mc_groups_;
        mc_inside_ += (x * x + y * y <= kMcRadius2) ? 1 : 0;
    };
    if (mc_fill_ > 0) {
        while (idx < chunk.size() && mc_fill_ < 6) {
            mc_buf_[mc_fill_++] = chunk[idx++];
        }
        if (mc_fill_ == 6) {
            consume_group(mc_buf_);
            mc_fill_ = 0;
        }
    }
    for (; idx + 6 <= chunk.size(); idx += 6) {
        consume_group(chunk.data() + idx);
    }
    while (idx < chunk.size()) {
        mc_buf_[mc_fill_++] = chunk[idx++];
    }

    n_ += chunk.size();
}

EntReport EntAccumulator::finalize() const {
    if (n_ < 6) {
        throw std::domain_error("report requires at least 6 bytes");
    }
    EntReport r;
    r.sample_bytes = n_;

    const long double n = static_cast<long double>(n_);
    const long double expected = n / 256.0L;
    long double entropy = 0.0L;
    long double chi = 0.0L;
    std::uint64_t sx = 0;
    std::uint64_t sx2 = 0;
    for (std::uint64_t v = 0; v < 256; ++v) {
        const std::uint64_t count = hist_[v];
        if (count) {
            const long double p = count / n;
            entropy -= p * std::log2(p);
        }
        const long double d = count - expected;
        chi += d * d / expected;
        sx += count * v;
        sx2 += count * v * v;
    }
    r.entropy_bits_per_byte = static_cast<double>(entropy);
    r.chi_square = static_cast<double>(chi);
    r.chi_p_value = chi_square_p_value(r.chi_square, 255);
    r.arithmetic_mean = static_cast<double>(static_cast<long double>(sx) / n);
    r.monte_carlo_pi = static_cast<double>(4.0L * mc_inside_ / mc_groups_);

    const std::uint64_t sxy = adjacent_sum_ + std::uint64_t{last_} * first_;
    const __int128 num = static_cast<__int128>(n_) * sxy -
                         static_cast<__int128>(sx) * sx;
    const __int128 den = static_cast<__int128>(n_) * sx2 -
                         static_cast<__int128>(sx) * sx;
    r.serial_degenerate = (den == 0);
    r.serial_correlation =
        den == 0 ? 0.0
                 : static_cast<double>(static_cast<long double>(num) /
                                       static_cast<long double>(den));
    return r;
}

std::string format_report_text(const EntReport& r) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "Sample size          %llu bytes\n"
                  "Entropy (bits)       %.6f\n"
                  "Chi Square           %.2f\n"
                  "p-Value              %.4f\n"
                  "Arith. Mean          %.4f\n"
                  "Monte Carlo Pi       %.9f\n"
                  "Serial Correlation   %.6f%s\n",
                  static_cast<unsigned long long>(r.sample_bytes),
                  r.entropy_bits_per_byte, r.chi_square, r.chi_p_value,
                  r.arithmetic_mean, r.monte_carlo_pi, r.serial_correlation,
                  r.serial_degenerate ? " (degenerate: constant input)" : "");
    return buf;
}

std::string format_report_machine(const EntReport& r) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "sample_bytes=%llu\n"
                  "entropy_bits_per_byte=%.6f\n"
                  "chi_square=%.6f\n"
                  "chi_p_value=%.6f\n"
                  "arithmetic_mean=%.6f\n"
                  "monte_carlo_pi=%.9f\n"
                  "serial_correlation=%.6f\n",
                  static_cast<unsigned long long>(r.sample_bytes),
                  r.entropy_bits_per_byte, r.chi_square, r.chi_p_value,
                  r.arithmetic_mean, r.monte_carlo_pi, r.serial_correlation);
    return buf;
}

}  // namespace qpp
