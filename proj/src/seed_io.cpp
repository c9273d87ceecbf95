#include "qpp/seed_io.hpp"

#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <system_error>

#include "qpp/pad.hpp"

namespace qpp {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        bytes.insert(bytes.end(), buf, buf + in.gcount());
    }
    if (in.bad()) {
        throw std::runtime_error("read error on " + path.string());
    }
    return bytes;
}

std::vector<std::uint8_t> load_seed_file(const std::filesystem::path& path) {
    std::vector<std::uint8_t> raw = read_file(path);
    if (raw.size() == kSeedBytes) {
        return raw;
    }
    // hex form: ignore whitespace, require exactly 2*16384 digits
    std::vector<std::uint8_t> seed;
    seed.reserve(kSeedBytes);
    int hi = -1;
    for (std::uint8_t b : raw) {
        if (std::isspace(b)) {
            continue;
        }
        const int d = hex_digit(static_cast<char>(b));
        if (d < 0 || seed.size() == kSeedBytes) {
            throw std::runtime_error(
                "seed file " + path.string() +
                " must be exactly 16384 raw bytes or 32768 hex digits");
        }
        if (hi < 0) {
            hi = d;
        } else {
            seed.push_back(static_cast<std::uint8_t>(hi << 4 | d));
            hi = -1;
        }
    }
    if (hi >= 0 || seed.size() != kSeedBytes) {
        throw std::runtime_error("seed file " + path.string() +
                                 " must be exactly 16384 raw bytes or 32768 hex digits");
    }
    return seed;
}

std::vector<std::uint8_t> os_random_seed() {
    std::vector<std::uint8_t> seed(kSeedBytes);
    if (std::FILE* f = std::fopen("/dev/urandom", "rb")) {
        const std::size_t got = std::fread(seed.data(), 1, seed.size(), f);
        std::fclose(f);
        if (got == seed.size()) {
            return seed;
        }
    }
    std::random_device rd;
    for (std::size_t i = 0; i < seed.size(); i += 4) {
        const std::uint32_t w = rd();
        for (std::size_t k = 0; k < 4 && i + k < seed.size(); ++k) {
            seed[i + k] = static_cast<std::uint8_t>(w >> (8 * k));
        }
    }
    return seed;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> bytes) {
    std::filesystem::path dir = path.parent_path();
    if (dir.empty()) {
        dir = ".";
    }
    const std::filesystem::path tmp =
        dir / (path.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot create " + tmp.string());
        }
        if (!bytes.empty()) {
            out.write(reinterpret_cast<const char*>(bytes.data()),
                      static_cast<std::streamsize>(bytes.size()));
        }
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write error on " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " +
                                 path.string() + ": " + ec.message());
    }
}

}  // namespace qpp
