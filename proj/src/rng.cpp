#include "squeezekit/rng.hpp"

#include <cmath>
#include <numbers>

namespace squeezekit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RngSeed RngSeed::substream(std::uint64_t index) const {
  return RngSeed{seed, splitmix64(stream ^ splitmix64(index + 0x5851F42D4C957F2DULL))};
}

Rng::Rng(RngSeed seed) : engine_(splitmix64(seed.seed) ^ splitmix64(~seed.stream)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::uniform_disc(double radius) {
  for (;;) {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    if (x * x + y * y < 1.0) return {radius * x, radius * y};
  }
}

ComplexVector Rng::gaussian_vector(std::size_t dim) {
  std::vector<Complex> v(dim);
  for (auto& c : v) {
    const double re = normal();
    const double im = normal();
    c = {re, im};
  }
  return ComplexVector(std::move(v));
}

std::uint64_t Rng::below(std::uint64_t n) {
  // rejection removes modulo bias
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

}  // namespace squeezekit
