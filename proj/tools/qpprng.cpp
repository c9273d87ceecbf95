// qpprng: deterministic permutation-pad PRNG, entropy booster, and byte-level
// randomness battery over raw binary streams.
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpp/booster.hpp"
#include "qpp/generator.hpp"
#include "qpp/seed_io.hpp"
#include "qpp/stats.hpp"

namespace {

constexpr std::size_t kChunkBytes = 1 << 20;

std::uint64_t parse_length(const std::string& text) {
    if (text.empty()) {
        throw std::runtime_error("empty --length");
    }
    std::size_t digits = 0;
    unsigned __int128 value = 0;
    while (digits < text.size() && text[digits] >= '0' && text[digits] <= '9') {
        value = value * 10 + static_cast<unsigned>(text[digits] - '0');
        if (value > (static_cast<unsigned __int128>(1) << 63)) {
            throw std::runtime_error("--length too large: " + text);
        }
        ++digits;
    }
    if (digits == 0) {
        throw std::runtime_error("--length must start with digits: " + text);
    }
    std::uint64_t multiplier = 1;
    if (digits + 1 == text.size()) {
        switch (text[digits]) {
            case 'K': case 'k': multiplier = 1ULL << 10; break;
            case 'M': case 'm': multiplier = 1ULL << 20; break;
            case 'G': case 'g': multiplier = 1ULL << 30; break;
            default:
                throw std::runtime_error("bad --length suffix: " + text);
        }
    } else if (digits != text.size()) {
        throw std::runtime_error("bad --length: " + text);
    }
    value *= multiplier;
    if (value > (static_cast<unsigned __int128>(1) << 63)) {
        throw std::runtime_error("--length too large: " + text);
    }
    return static_cast<std::uint64_t>(value);
}

// Byte source: a file or stdin ("-").
class ChunkSource {
public:
    explicit ChunkSource(const std::string& path) {
        if (path == "-") {
            file_ = stdin;
        } else {
            file_ = std::fopen(path.c_str(), "rb");
            owned_ = true;
            if (!file_) {
                throw std::runtime_error("cannot open " + path);
            }
        }
        name_ = path;
    }
    ~ChunkSource() {
        if (owned_ && file_) {
            std::fclose(file_);
        }
    }
    ChunkSource(const ChunkSource&) = delete;
    ChunkSource& operator=(const ChunkSource&) = delete;

    std::size_t read(std::uint8_t* buf, std::size_t want) {
        const std::size_t got = std::fread(buf, 1, want, file_);
        if (got < want && std::ferror(file_)) {
            throw std::runtime_error("read error on " + name_);
        }
        return got;
    }

private:
    std::FILE* file_ = nullptr;
    bool owned_ = false;
    std::string name_;
};

// Byte sink: stdout ("-") or a file written via temp-plus-rename so failures
// never leave a partial output behind.
class ChunkSink {
public:
    explicit ChunkSink(const std::string& path) : target_(path) {
        if (path == "-") {
            file_ = stdout;
        } else {
            temp_ = path + ".tmp." + std::to_string(::getpid());
            file_ = std::fopen(temp_.c_str(), "wb");
            owned_ = true;
            if (!file_) {
                throw std::runtime_error("cannot create " + temp_);
            }
        }
    }
    ~ChunkSink() {
        if (owned_ && file_) {
            std::fclose(file_);
            std::remove(temp_.c_str());
        }
    }
    ChunkSink(const ChunkSink&) = delete;
    ChunkSink& operator=(const ChunkSink&) = delete;

    void write(const std::uint8_t* buf, std::size_t n) {
        if (n > 0 && std::fwrite(buf, 1, n, file_) != n) {
            throw std::runtime_error("write error on " +
                                     (owned_ ? temp_ : target_));
        }
    }

    void commit() {
        if (!owned_) {
            if (std::fflush(file_) != 0) {
                throw std::runtime_error("write error on stdout");
            }
            return;
        }
        const bool ok = std::fflush(file_) == 0 && std::fclose(file_) == 0;
        file_ = nullptr;
        if (!ok || std::rename(temp_.c_str(), target_.c_str()) != 0) {
            std::remove(temp_.c_str());
            owned_ = false;
            throw std::runtime_error("cannot finalize " + target_);
        }
        owned_ = false;
    }

private:
    std::string target_;
    std::string temp_;
    std::FILE* file_ = nullptr;
    bool owned_ = false;
};

int cmd_seed(const std::string& out_path) {
    const std::vector<std::uint8_t> seed = qpp::os_random_seed();
    ChunkSink sink(out_path);
    sink.write(seed.data(), seed.size());
    sink.commit();
    return 0;
}

int cmd_gen(const std::string& seed_path, const std::string& length_text,
            const std::string& out_path) {
    const std::uint64_t length = parse_length(length_text);
    const std::vector<std::uint8_t> seed = qpp::load_seed_file(seed_path);
    qpp::Pqrng rng(seed);
    ChunkSink sink(out_path);
    std::vector<std::uint8_t> buf(kChunkBytes);
    std::uint64_t remaining = length;
    while (remaining > 0) {
        const std::size_t take =
            static_cast<std::size_t>(std::min<std::uint64_t>(remaining, buf.size()));
        rng.fill({buf.data(), take});
        sink.write(buf.data(), take);
        remaining -= take;
    }
    sink.commit();
    return 0;
}

int cmd_boost(const std::string& seed_path, const std::string& in_path,
              const std::string& out_path, bool invert) {
    const std::vector<std::uint8_t> seed = qpp::load_seed_file(seed_path);
    qpp::Booster booster(seed);
    ChunkSource source(in_path);
    ChunkSink sink(out_path);
    std::vector<std::uint8_t> buf(kChunkBytes);
    for (;;) {
        const std::size_t got = source.read(buf.data(), buf.size());
        if (got == 0) {
            break;
        }
        const std::span<std::uint8_t> span{buf.data(), got};
        if (invert) {
            booster.unboost(span, span);
        } else {
            booster.boost(span, span);
        }
        sink.write(buf.data(), got);
    }
    sink.commit();
    return 0;
}

int cmd_test(const std::string& in_path, const std::string& format) {
    qpp::EntAccumulator acc;
    {
        ChunkSource source(in_path);
        std::vector<std::uint8_t> buf(kChunkBytes);
        for (;;) {
            const std::size_t got = source.read(buf.data(), buf.size());
            if (got == 0) {
                break;
            }
            acc.update({buf.data(), got});
        }
    }
    const qpp::EntReport report = acc.finalize();
    const std::string text = format == "machine"
                                 ? qpp::format_report_machine(report)
                                 : qpp::format_report_text(report);
    std::fputs(text.c_str(), stdout);
    return (report.chi_p_value >= 0.01 && report.chi_p_value <= 0.99) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation-pad PRNG, entropy booster, and randomness battery"};
    app.require_subcommand(1);

    std::string seed_path;
    std::string in_path = "-";
    std::string out_path = "-";
    std::string length_text;
    std::string format = "text";

    CLI::App* seed = app.add_subcommand("seed", "write a fresh 16384-byte seed from OS entropy");
    seed->add_option("--out", out_path, "output file, or - for stdout")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate a deterministic byte stream from a seed");
    gen->add_option("--seed", seed_path, "seed file (16384 raw bytes or 32768 hex digits)")->required();
    gen->add_option("--length", length_text, "byte count, with optional K/M/G (1024-based)")->required();
    gen->add_option("--out", out_path, "output file, or - for stdout");

    CLI::App* boost = app.add_subcommand("boost", "entropy-boost a byte stream (length-preserving)");
    boost->add_option("--seed", seed_path, "seed file")->required();
    boost->add_option("--in", in_path, "input file, or - for stdin");
    boost->add_option("--out", out_path, "output file, or - for stdout");

    CLI::App* unboost = app.add_subcommand("unboost", "invert a boost with the same seed");
    unboost->add_option("--seed", seed_path, "seed file")->required();
    unboost->add_option("--in", in_path, "input file, or - for stdin");
    unboost->add_option("--out", out_path, "output file, or - for stdout");

    CLI::App* test = app.add_subcommand("test", "byte-level randomness battery; exit 2 when chi-square p leaves [0.01, 0.99]");
    test->add_option("--in", in_path, "input file, or - for stdin");
    test->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (seed->parsed()) {
            return cmd_seed(out_path);
        }
        if (gen->parsed()) {
            return cmd_gen(seed_path, length_text, out_path);
        }
        if (boost->parsed()) {
            return cmd_boost(seed_path, in_path, out_path, false);
        }
        if (unboost->parsed()) {
            return cmd_boost(seed_path, in_path, out_path, true);
        }
        if (test->parsed()) {
            return cmd_test(in_path, format);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "qpprng: %s\n", e.what());
        return 1;
    }
    return 1;
}
