#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hfd/errors.hpp"

namespace hfd {

/// Dtype codes of the .hfdt container.
enum class Dtype : std::uint32_t {
    U8 = 1,
    I32 = 2,
    I64 = 3,
    F32 = 4,
    F64 = 5,
};

std::size_t dtype_size(Dtype dt);
std::string dtype_name(Dtype dt);

/// A dense row-major tensor with its dtype and shape, as stored in .hfdt
/// files: magic "HFDT", u32 version, u32 dtype, u32 rank, u64 dims, payload.
/// All integers little-endian.
struct Tensor {
    Dtype dtype = Dtype::U8;
    std::vector<std::uint64_t> dims;
    std::vector<std::uint8_t> data; // raw payload

    std::uint64_t element_count() const;

    template <typename T>
    const T* as() const {
        return reinterpret_cast<const T*>(data.data());
    }
    template <typename T>
    T* as() {
        return reinterpret_cast<T*>(data.data());
    }

    static Tensor make(Dtype dt, std::vector<std::uint64_t> dims);

    bool operator==(const Tensor&) const = default;
};

/// Writes `t` to `path`. Throws Error on I/O failure.
void write_hfdt(const std::filesystem::path& path, const Tensor& t);

/// Reads a .hfdt file. Throws IntegrityError on truncation/bad magic and
/// VersionError on an unknown format version.
Tensor read_hfdt(const std::filesystem::path& path);

// Typed construction helpers.
Tensor tensor_from_u8(std::vector<std::uint8_t> values, std::vector<std::uint64_t> dims);
Tensor tensor_from_i32(const std::vector<std::int32_t>& values,
                       std::vector<std::uint64_t> dims);
Tensor tensor_from_f64(const std::vector<double>& values, std::vector<std::uint64_t> dims);

} // namespace hfd
