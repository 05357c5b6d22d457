#pragma once

#include <cstdint>
#include <random>

namespace zagreb {

// Platform-stable pseudorandom stream: std::mt19937_64 (whose output sequence
// is fixed by the C++ standard) with unbiased rejection sampling for bounded
// integers. std::uniform_int_distribution is avoided because its algorithm is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  /// Uniform double in [0, 1) built from the top 53 bits of one draw.
  double unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace zagreb
