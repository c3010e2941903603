#include "hfd/tensor.hpp"

#include <cstring>
#include <fstream>

namespace hfd {

namespace {

constexpr char kMagic[4] = {'H', 'F', 'D', 'T'};
constexpr std::uint32_t kFormatVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::istream& is, const std::string& what) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4))
        throw IntegrityError("truncated .hfdt file while reading " + what);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& is, const std::string& what) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8))
        throw IntegrityError("truncated .hfdt file while reading " + what);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

} // namespace

std::size_t dtype_size(Dtype dt) {
    switch (dt) {
    case Dtype::U8: return 1;
    case Dtype::I32: return 4;
    case Dtype::I64: return 8;
    case Dtype::F32: return 4;
    case Dtype::F64: return 8;
    }
    throw ArgumentError("unknown dtype code");
}

std::string dtype_name(Dtype dt) {
    switch (dt) {
    case Dtype::U8: return "u8";
    case Dtype::I32: return "i32";
    case Dtype::I64: return "i64";
    case Dtype::F32: return "f32";
    case Dtype::F64: return "f64";
    }
    return "?";
}

std::uint64_t Tensor::element_count() const {
    std::uint64_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

Tensor Tensor::make(Dtype dt, std::vector<std::uint64_t> dims) {
    Tensor t;
    t.dtype = dt;
    t.dims = std::move(dims);
    t.data.assign(t.element_count() * dtype_size(dt), 0);
    return t;
}

void write_hfdt(const std::filesystem::path& path, const Tensor& t) {
    if (t.data.size() != t.element_count() * dtype_size(t.dtype))
        throw ArgumentError("tensor payload size does not match dims/dtype");
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open " + path.string() + " for writing");
    os.write(kMagic, 4);
    put_u32(os, kFormatVersion);
    put_u32(os, static_cast<std::uint32_t>(t.dtype));
    put_u32(os, static_cast<std::uint32_t>(t.dims.size()));
    for (auto d : t.dims) put_u64(os, d);
    os.write(reinterpret_cast<const char*>(t.data.data()),
             static_cast<std::streamsize>(t.data.size()));
    if (!os) throw Error("short write to " + path.string());
}

Tensor read_hfdt(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IntegrityError("cannot open " + path.string());
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw IntegrityError("bad magic in " + path.string());
    std::uint32_t version = get_u32(is, "version");
    if (version != kFormatVersion)
        throw VersionError("unknown .hfdt format version " + std::to_string(version) +
                           " in " + path.string());
    Tensor t;
    std::uint32_t dtype_code = get_u32(is, "dtype");
    switch (dtype_code) {
    case 1: t.dtype = Dtype::U8; break;
    case 2: t.dtype = Dtype::I32; break;
    case 3: t.dtype = Dtype::I64; break;
    case 4: t.dtype = Dtype::F32; break;
    case 5: t.dtype = Dtype::F64; break;
    default:
        throw IntegrityError("unknown dtype code " + std::to_string(dtype_code) + " in " +
                             path.string());
    }
    std::uint32_t rank = get_u32(is, "rank");
    if (rank > 16) throw IntegrityError("implausible tensor rank in " + path.string());
    t.dims.resize(rank);
    for (auto& d : t.dims) d = get_u64(is, "dims");
    std::uint64_t bytes = t.element_count() * dtype_size(t.dtype);
    t.data.resize(bytes);
    if (!is.read(reinterpret_cast<char*>(t.data.data()), static_cast<std::streamsize>(bytes)))
        throw IntegrityError("truncated payload in " + path.string());
    return t;
}

Tensor tensor_from_u8(std::vector<std::uint8_t> values, std::vector<std::uint64_t> dims) {
    Tensor t;
    t.dtype = Dtype::U8;
    t.dims = std::move(dims);
    t.data = std::move(values);
    if (t.data.size() != t.element_count())
        throw ArgumentError("u8 tensor size does not match dims");
    return t;
}

Tensor tensor_from_i32(const std::vector<std::int32_t>& values,
                       std::vector<std::uint64_t> dims) {
    Tensor t = Tensor::make(Dtype::I32, std::move(dims));
    if (values.size() != t.element_count())
        throw ArgumentError("i32 tensor size does not match dims");
    std::memcpy(t.data.data(), values.data(), values.size() * sizeof(std::int32_t));
    return t;
}

Tensor tensor_from_f64(const std::vector<double>& values, std::vector<std::uint64_t> dims) {
    Tensor t = Tensor::make(Dtype::F64, std::move(dims));
    if (values.size() != t.element_count())
        throw ArgumentError("f64 tensor size does not match dims");
    std::memcpy(t.data.data(), values.data(), values.size() * sizeof(double));
    return t;
}

} // namespace hfd
