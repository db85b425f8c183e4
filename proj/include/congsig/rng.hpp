#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace congsig {

/// Seeded 64-bit Mersenne Twister with platform-independent real and index draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  /// Independent stream derived from a master seed, a consumer name and an index.
  static Rng substream(std::uint64_t master_seed, std::string_view name, std::uint64_t index = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform on {0, ..., n-1}; n must be positive.
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace congsig
