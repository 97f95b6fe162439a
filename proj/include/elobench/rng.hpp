#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace elobench::rng {

/// Deterministic random engine. std::mt19937_64 output is pinned by the
/// standard; the draw helpers below avoid std distributions, whose results
/// are implementation-defined, so all derived randomness is portable.
class Engine {
public:
    explicit Engine(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

/// Unbiased draw in [0, n) via rejection sampling.
inline std::uint64_t below(Engine& engine, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine.next();
    while (x >= limit) x = engine.next();
    return x % n;
}

/// Uniform double in [0, 1) with 53 bits of precision.
inline double unit(Engine& engine) {
    return static_cast<double>(engine.next() >> 11) * 0x1.0p-53;
}

/// Fisher-Yates shuffle using the portable bounded draw.
template <typename T>
void shuffle(std::vector<T>& values, Engine& engine) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(below(engine, i));
        std::swap(values[i - 1], values[j]);
    }
}

inline std::vector<std::size_t> permutation(std::size_t n, Engine& engine) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    shuffle(p, engine);
    return p;
}

/// First k picks of a Fisher-Yates pass over 0..n-1. Drawing k and then
/// k+m with the same seed yields a common prefix, so a pair's question
/// stream can be extended without disturbing earlier draws.
inline std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k,
                                                           Engine& engine) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> picks;
    picks.reserve(k);
    for (std::size_t i = 0; i < k && i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(below(engine, n - i));
        std::swap(pool[i], pool[j]);
        picks.push_back(pool[i]);
    }
    return picks;
}

}  // namespace elobench::rng
