#pragma once

#include <filesystem>
#include <string>

namespace hfd {

/// Hex-encoded SHA-256 of a file's contents (OpenSSL-backed).
std::string sha256_file(const std::filesystem::path& path);

/// Hex-encoded SHA-256 of a byte string.
std::string sha256_bytes(const void* data, std::size_t len);

} // namespace hfd
