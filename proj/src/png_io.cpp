#include "hfd/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>

#include "hfd/errors.hpp"

namespace hfd {

void write_gray_png(const std::filesystem::path& path, const std::uint8_t* pixels,
                    int width, int height) {
    if (width <= 0 || height <= 0) throw ArgumentError("png dimensions must be positive");
    std::unique_ptr<std::FILE, decltype(&std::fclose)> fp(
        std::fopen(path.string().c_str(), "wb"), std::fclose);
    if (!fp) throw Error("cannot open " + path.string() + " for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                              nullptr);
    if (!png) throw Error("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error("libpng error while writing " + path.string());
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(static_cast<size_t>(height));
    for (int y = 0; y < height; ++y)
        rows[static_cast<size_t>(y)] =
            const_cast<png_bytep>(pixels + static_cast<size_t>(y) * static_cast<size_t>(width));
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

} // namespace hfd
