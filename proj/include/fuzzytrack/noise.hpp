#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fuzzytrack {

/// SplitMix64 (Steele, Lea, Flood 2014), Vigna's reference constants.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  std::uint64_t state_;
};

/// Standard normals from a SplitMix64 stream by the Box-Muller transform.
///
/// Each pair consumes two words: u1 = ((w1 >> 11) + 1) * 2^-53 in (0, 1],
/// u2 = (w2 >> 11) * 2^-53 in [0, 1). The cosine variate is returned first,
/// the sine variate second. The sequence is fixed for a given seed.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double operator()();

 private:
  SplitMix64 rng_;
  std::optional<double> spare_;
};

/// Additive measurement noise with variance in [0, 0.5).
struct NoiseSpec {
  double variance = 0.25;
  std::uint64_t seed = 0;

  /// Throws InvalidParameter when variance is negative, not finite or >= 0.5.
  void validate() const;
};

/// truth[k] + sqrt(variance) * N(0, 1), drawn from GaussianStream(seed).
std::vector<double> add_noise(std::span<const double> truth,
                              const NoiseSpec& noise);

}  // namespace fuzzytrack
