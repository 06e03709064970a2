#pragma once

// Monte-Carlo check of the Schwarz-type inclusion
// alpha(s, h(F(0))) D  ⊂  F^{-1}(s D) for automorphisms F of a model domain.

#include <cstddef>
#include <string>

#include "squeezekit/automorphisms.hpp"
#include "squeezekit/geometry.hpp"
#include "squeezekit/minkowski.hpp"
#include "squeezekit/rng.hpp"

namespace squeezekit {

struct InclusionReport {
  BalancedDomain domain;
  Automorphism automorphism;
  double s;
  double h_F0;
  double alpha_s;
  std::size_t samples;
  std::size_t violations;
  /// max over samples of gauge(F(z)) - s.
  double max_excess;
  double tolerance;
  RngSeed seed;

  bool passed() const { return violations == 0; }
};

struct InclusionOptions {
  std::size_t samples = 100000;
  RngSeed seed{};
  double tolerance = 1e-12;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
  std::size_t threads = 0;
};

/// Samples alpha_s * D and counts images with gauge(F(z)) > s + tol.
/// Throws PreconditionError unless h(F(0)) < s < 1.
InclusionReport verify_inclusion(const BalancedDomain& domain, const Automorphism& f, double s,
                                 const InclusionOptions& options = {});

struct SharpnessProbe {
  double z;
  double image_gauge;
};

/// In dimension one with F(z) = (z + h_a) / (1 + h_a z), evaluates F at
/// z = alpha(s, h_a), where |F(z)| = s.
SharpnessProbe sharpness_probe(double h_a, double s);

struct PickCheck {
  /// |L(F(lambda y))| for L normalized to dual norm 1.
  double lhs;
  /// (|lambda| + h(F(0))) / (1 + h(F(0)) |lambda|).
  double rhs;
  bool holds(double tol) const { return lhs <= rhs + tol; }
};

/// Schwarz-Pick bound for the scalar function lambda -> L(F(lambda y)) with
/// gauge(y) < 1 and |lambda| < 1.
PickCheck functional_pick_check(const BalancedDomain& domain, const Automorphism& f,
                                const LinearFunctional& functional, const ComplexVector& y,
                                Complex lambda);

}  // namespace squeezekit
