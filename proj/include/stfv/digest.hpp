#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace stfv {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

/// Digest of a canonically serialized configuration. Stamped into every
/// artifact a run produces so outputs can be traced back to their settings.
inline std::string config_digest(std::string_view canonical_config) {
    return hex64(fnv1a64(canonical_config));
}

}  // namespace stfv
