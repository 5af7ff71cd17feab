#pragma once

#include <cstdint>
#include <random>

namespace rashomon {

// splitmix64 finalizer; used to derive well-separated substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seedable 64-bit generator (mt19937_64, whose output sequence is fixed by
// the standard). Every sampling loop draws from a fresh substream keyed by
// (seed, stream id, sample index), so results do not depend on how indices
// are partitioned across workers.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    static RngStream substream(std::uint64_t seed, std::uint64_t stream_id,
                               std::uint64_t index) {
        return RngStream(mix64(seed ^ mix64(stream_id ^ mix64(index))));
    }

    std::uint64_t u64() { return gen_(); }

    // uniform in [0,1) with 53 random bits
    double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform in (0,1): rejects the exact zero draw
    double real01_open() {
        double r = real01();
        while (r == 0.0) r = real01();
        return r;
    }

    // unbiased uniform integer in [0, n)
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return static_cast<std::size_t>(v % n);
    }

private:
    std::mt19937_64 gen_;
};

// named stream ids, one per sampling purpose
namespace streams {
inline constexpr std::uint64_t proposal = 0xA1;
inline constexpr std::uint64_t target = 0xA2;
inline constexpr std::uint64_t folds = 0xA3;
inline constexpr std::uint64_t synthetic = 0xA4;
inline constexpr std::uint64_t rejection = 0xA5;
}  // namespace streams

// combines (outer seed, depth/degree, fold) into a per-slice seed
inline std::uint64_t slice_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix64(seed ^ mix64(0x511CEULL ^ mix64(a * 0x100000001b3ULL + b)));
}

}  // namespace rashomon
