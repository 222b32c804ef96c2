#ifndef GIRTHKIT_RNG_HPP
#define GIRTHKIT_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace girthkit {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream tags for derive_seed. Values are part of the reproducibility
// contract; append new tags, never renumber.
enum class Stream : std::uint64_t {
    Generator = 1,
    HighGirth = 2,
    Landmarks = 3,
    SampleSet = 4,
    SampleDraw = 5,
    Coloring = 6,
    Recursion = 7,
    Bench = 8,
    Scale = 9,
};

// master seed + (stream, a, b, c) -> independent 64-bit seed.
inline std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                                 std::initializer_list<std::uint64_t> ids = {}) {
    std::uint64_t h = splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(stream)));
    for (std::uint64_t id : ids) h = splitmix64(h ^ splitmix64(id + 0x632be59bd9b4e019ULL));
    return h;
}

// mt19937_64 with portable bounded draws (std distributions are not
// bit-identical across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return p >= 1.0 || unit() < p; }

    // k distinct values of [0, n), in draw order. k is capped at n.
    std::vector<std::uint32_t> sample_indices(std::size_t n, std::size_t k) {
        k = std::min(k, n);
        std::vector<std::uint32_t> pool(n);
        std::iota(pool.begin(), pool.end(), 0u);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + below(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

    template <class T>
    std::vector<T> sample(const std::vector<T>& items, std::size_t k) {
        std::vector<T> out;
        for (auto idx : sample_indices(items.size(), k)) out.push_back(items[idx]);
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace girthkit

#endif  // GIRTHKIT_RNG_HPP
