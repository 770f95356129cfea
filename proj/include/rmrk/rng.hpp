#pragma once

#include <array>
#include <cstdint>

namespace rmrk {

/// xoshiro256** seeded through splitmix64. Chosen over std::mt19937 plus
/// std::normal_distribution because the standard distributions are not
/// specified bit-for-bit across library implementations; instances must be
/// reproducible anywhere.
///
/// Gaussian draws use Box-Muller on two consecutive uniforms and hand out
/// both outputs (cosine branch first) before consuming more uniforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal.
  double normal();

 private:
  std::array<std::uint64_t, 4> state_{};
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rmrk
