#pragma once

#include <cstdint>
#include <random>

#include "squeezekit/complex_vector.hpp"

namespace squeezekit {

/// Identifies one reproducible random stream.
struct RngSeed {
  std::uint64_t seed = 42;
  std::uint64_t stream = 0;

  /// Deterministic child stream, used to partition Monte-Carlo work.
  RngSeed substream(std::uint64_t index) const;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

/// Random source with platform-independent output: mt19937_64 plus
/// hand-rolled conversions (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(RngSeed seed);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Uniform on the open unit disc scaled by `radius`.
  Complex uniform_disc(double radius = 1.0);
  /// Standard complex Gaussian vector; its direction is uniform on the sphere.
  ComplexVector gaussian_vector(std::size_t dim);
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace squeezekit
