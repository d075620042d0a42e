#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "stfv/common.hpp"

// Little-endian primitives shared by all binary file formats.

namespace stfv::binio {

inline void put_bytes(std::ostream& os, const void* p, std::size_t n) {
    os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

inline void write_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    put_bytes(os, b, 4);
}

inline void write_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    put_bytes(os, b, 8);
}

inline void write_f32(std::ostream& os, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    write_u32(os, bits);
}

inline void read_bytes(std::istream& is, void* p, std::size_t n, const char* what) {
    is.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(is.gcount()) != n)
        throw FormatError(std::string("truncated file while reading ") + what);
}

inline std::uint32_t read_u32(std::istream& is, const char* what) {
    unsigned char b[4];
    read_bytes(is, b, 4, what);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

inline std::uint64_t read_u64(std::istream& is, const char* what) {
    std::uint64_t v = 0;
    unsigned char b[8];
    read_bytes(is, b, 8, what);
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

inline float read_f32(std::istream& is, const char* what) {
    std::uint32_t bits = read_u32(is, what);
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
}

inline void write_magic(std::ostream& os, const char magic[4]) { put_bytes(os, magic, 4); }

inline void expect_magic(std::istream& is, const char magic[4], const char* format_name) {
    char got[4];
    read_bytes(is, got, 4, "magic");
    if (std::memcmp(got, magic, 4) != 0)
        throw FormatError(std::string("bad magic for ") + format_name + " file");
}

inline void expect_version(std::istream& is, std::uint32_t expected, const char* format_name) {
    std::uint32_t v = read_u32(is, "version");
    if (v != expected)
        throw FormatError(std::string("unsupported ") + format_name + " version " + std::to_string(v));
}

}  // namespace stfv::binio
