#include "hfd/hash.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <memory>
#include <vector>

#include "hfd/errors.hpp"

namespace hfd {

namespace {

std::string hex(const unsigned char* digest, unsigned len) {
    static const char* k = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(k[digest[i] >> 4]);
        out.push_back(k[digest[i] & 0xF]);
    }
    return out;
}

} // namespace

std::string sha256_bytes(const void* data, std::size_t len) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned digest_len = 0;
    if (!EVP_Digest(data, len, digest, &digest_len, EVP_sha256(), nullptr))
        throw Error("sha256 computation failed");
    return hex(digest, digest_len);
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open " + path.string() + " for hashing");
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                EVP_MD_CTX_free);
    if (!ctx || !EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr))
        throw Error("sha256 init failed");
    std::vector<char> buf(1 << 16);
    while (is) {
        is.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        auto got = is.gcount();
        if (got > 0 && !EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<size_t>(got)))
            throw Error("sha256 update failed");
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned digest_len = 0;
    if (!EVP_DigestFinal_ex(ctx.get(), digest, &digest_len))
        throw Error("sha256 final failed");
    return hex(digest, digest_len);
}

} // namespace hfd
