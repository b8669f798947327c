#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace koszul {

// FNV-1a over the raw bytes.
inline uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string digest_string(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    uint64_t h = fnv1a64(bytes);
    std::string out = "fnv1a64:";
    for (int k = 60; k >= 0; k -= 4) out += hex[(h >> k) & 0xF];
    return out;
}

}
