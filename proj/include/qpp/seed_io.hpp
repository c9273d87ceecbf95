#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace qpp {

// Reads a seed file: either exactly 16384 raw bytes, or a hex encoding that
// is 32768 digits after stripping ASCII whitespace. Throws std::runtime_error
// with a message naming the expected sizes otherwise.
std::vector<std::uint8_t> load_seed_file(const std::filesystem::path& path);

// 16384 bytes from the operating system's entropy facility
// (/dev/urandom, falling back to std::random_device).
std::vector<std::uint8_t> os_random_seed();

// Writes via a temporary file in the same directory plus rename, so a failed
// write never leaves a partial file at `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

}  // namespace qpp
