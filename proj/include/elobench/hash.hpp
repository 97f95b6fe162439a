#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace elobench::hash {

/// FNV-1a over bytes. Stable across platforms, unlike std::hash.
constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// splitmix64 finalizer; avalanche step used to derive independent seeds.
constexpr std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Counter-based seed split: mix(seed, i) and mix(seed, j) are independent
/// streams for i != j.
constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix(splitmix(a) ^ b);
}

/// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(std::string_view bytes);

/// SHA-256 of a file's contents, lowercase hex.
std::string file_sha256_hex(const std::filesystem::path& path);

}  // namespace elobench::hash
