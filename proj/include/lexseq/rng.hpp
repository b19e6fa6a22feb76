#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lexseq/common.hpp"

namespace lexseq {

// SplitMix64 (Steele/Lea/Flood 2014). Chosen over std::mt19937_64 because
// the whole pipeline promises reproducible streams across implementations,
// so the generator must be pinned down to its constants:
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ z>>30) * 0xbf58476d1ce4e5b9
//   z = (z ^ z>>27) * 0x94d049bb133111eb; return z ^ z>>31
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n). Multiply-shift bound (Lemire); the modulo
    // bias is below 2^-64 * n which is irrelevant at corpus scale.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // In-place Fisher-Yates, iterating from the back.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::uint64_t state_;
};

// Deterministic sub-stream seeds: hash the base seed together with a tag
// (stage name, trial index, ...). Stages and parallel trials each own a
// stream so their draws never interleave.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((base >> (8 * i)) & 0xff);
    std::uint64_t h = fnv1a64(std::string_view(bytes, 8));
    return fnv1a64(tag, h);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    char bytes[16];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((base >> (8 * i)) & 0xff);
    for (int i = 0; i < 8; ++i) bytes[8 + i] = static_cast<char>((index >> (8 * i)) & 0xff);
    return fnv1a64(std::string_view(bytes, 16));
}

}  // namespace lexseq
