#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace hfd {

/// Writes an 8-bit grayscale PNG. No ancillary chunks (no timestamps), so
/// identical pixels produce identical files.
void write_gray_png(const std::filesystem::path& path, const std::uint8_t* pixels,
                    int width, int height);

} // namespace hfd
