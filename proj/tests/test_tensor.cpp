#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hfd/rng.hpp"
#include "hfd/tensor.hpp"

using namespace hfd;
namespace fs = std::filesystem;

namespace {
fs::path temp_file(const std::string& name) {
    auto dir = fs::temp_directory_path() / "hfd_tensor_tests";
    fs::create_directories(dir);
    return dir / name;
}
} // namespace

TEST_CASE("hfdt roundtrip preserves dtype, dims and payload") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Tensor t = Tensor::make(Dtype::F64, {1 + rng.below(5), 1 + rng.below(7)});
        auto* p = t.as<double>();
        for (std::uint64_t i = 0; i < t.element_count(); ++i) p[i] = rng.normal();
        auto path = temp_file("roundtrip.hfdt");
        write_hfdt(path, t);
        CHECK(read_hfdt(path) == t);
    }
}

TEST_CASE("u8 image-shaped tensor roundtrip") {
    std::vector<std::uint8_t> pixels(3 * 4 * 5);
    for (size_t i = 0; i < pixels.size(); ++i) pixels[i] = static_cast<std::uint8_t>(i * 7);
    Tensor t = tensor_from_u8(pixels, {3, 4, 5});
    auto path = temp_file("u8.hfdt");
    write_hfdt(path, t);
    Tensor back = read_hfdt(path);
    CHECK(back.dtype == Dtype::U8);
    CHECK(back.dims == std::vector<std::uint64_t>{3, 4, 5});
    CHECK(back.data == t.data);
}

TEST_CASE("truncated file raises IntegrityError") {
    Tensor t = tensor_from_i32({1, 2, 3, 4, 5, 6}, {2, 3});
    auto path = temp_file("trunc.hfdt");
    write_hfdt(path, t);
    auto size = fs::file_size(path);
    fs::resize_file(path, size - 5);
    CHECK_THROWS_AS(read_hfdt(path), IntegrityError);
}

TEST_CASE("bad magic raises IntegrityError") {
    auto path = temp_file("magic.hfdt");
    std::ofstream(path, std::ios::binary) << "NOPE and then some bytes";
    CHECK_THROWS_AS(read_hfdt(path), IntegrityError);
}

TEST_CASE("unknown version raises VersionError") {
    Tensor t = tensor_from_u8({1, 2, 3}, {3});
    auto path = temp_file("version.hfdt");
    write_hfdt(path, t);
    std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(4);
    std::uint32_t bad = 99;
    f.write(reinterpret_cast<const char*>(&bad), 4);
    f.close();
    CHECK_THROWS_AS(read_hfdt(path), VersionError);
}
