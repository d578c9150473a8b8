#pragma once

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <random>
#include <vector>

namespace procopt {

// Every stochastic stage of a run draws its seed from the master seed via
// derive_seed(master, stream, index). Stream ids are fixed here so that one
// master seed reproduces an entire experiment.
namespace seed_stream {
inline constexpr std::uint64_t split = 1;
inline constexpr std::uint64_t synth = 2;
inline constexpr std::uint64_t forest = 3;
inline constexpr std::uint64_t tree = 4;
inline constexpr std::uint64_t grid_cv = 5;
inline constexpr std::uint64_t qnet_init = 6;
inline constexpr std::uint64_t explore = 7;
inline constexpr std::uint64_t replay = 8;
inline constexpr std::uint64_t env_init = 9;
inline constexpr std::uint64_t scenario = 10;
}  // namespace seed_stream

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index = 0) {
    return splitmix64(splitmix64(master ^ (stream * 0xd1342543de82ef95ULL)) +
                      index);
}

/// Seeded generator with portable sampling on top of std::mt19937_64.
/// The standard distributions are implementation-defined, so uniform and
/// normal draws are mapped here by hand: identical seeds give identical
/// streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n), unbiased via rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    double uniform_real(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Standard normal via Box-Muller; consumes two uniforms per call.
    double normal(double mean = 0.0, double sigma = 1.0) {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double z =
            std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mean + sigma * z;
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = uniform_below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Draws k distinct indices from [0, n), returned in ascending order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                        std::size_t k);

private:
    std::mt19937_64 engine_;
};

inline std::vector<std::size_t> Rng::sample_without_replacement(std::size_t n,
                                                                std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k && i < n; ++i) {
        const std::size_t j = i + uniform_below(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k < n ? k : n);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace procopt
