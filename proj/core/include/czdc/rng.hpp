#pragma once

#include <cstdint>

namespace czdc {

/**
 * @brief Deterministic 64-bit generator in the splitmix64 family.
 *
 * The state advances by the 64-bit golden-ratio increment and each output
 * is finalized with the Stafford mix13 constants, so a seed fully determines
 * the stream on every platform. Doubles are built from the top 53 bits.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// @brief Uniform draw from [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// @brief Uniform draw from [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// @brief Uniform integer from {0, ..., n-1}; n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/**
 * @brief Stateless mix of a master seed and a stream index.
 *
 * Used to derive independent per-run seeds: two streams with different
 * indices never share state even though they come from one master seed.
 */
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace czdc
