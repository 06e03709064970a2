#pragma once

// Explicit automorphisms of the unit polydisc and unit ball, and the scalar
// Mobius shrink factor alpha.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "squeezekit/complex_vector.hpp"
#include "squeezekit/geometry.hpp"
#include "squeezekit/rng.hpp"

namespace squeezekit {

struct IdentityAutomorphism {
  std::size_t dim;
};

/// z -> (e^{i theta_i} (a_i - z_{sigma(i)}) / (1 - conj(a_i) z_{sigma(i)}))_i.
/// `permutation` is zero-based: output coordinate i reads input sigma(i).
struct PolydiscAutomorphism {
  std::vector<Complex> centers;
  std::vector<double> phases;
  std::vector<std::size_t> permutation;
};

/// z -> U phi_a(z) with the involutive ball Mobius map
/// phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z, a>), s_a = sqrt(1 - |a|^2).
/// `unitary` is row-major n x n.
struct BallAutomorphism {
  std::vector<Complex> center;
  std::vector<Complex> unitary;
};

using AutomorphismSpec = std::variant<IdentityAutomorphism, PolydiscAutomorphism, BallAutomorphism>;

/// Validated automorphism spec.
class Automorphism {
 public:
  static Automorphism identity(std::size_t dim);
  /// Throws ArgumentError on |a_i| >= 1, a non-permutation or size mismatch.
  static Automorphism polydisc(std::vector<Complex> centers, std::vector<double> phases,
                               std::vector<std::size_t> permutation);
  /// Throws ArgumentError on ||a|| >= 1 or when U*U deviates from I by more than 1e-12.
  static Automorphism ball(std::vector<Complex> center, std::vector<Complex> unitary);

  const AutomorphismSpec& spec() const { return spec_; }
  std::size_t dim() const;
  std::string kind() const;

 private:
  explicit Automorphism(AutomorphismSpec spec) : spec_(std::move(spec)) {}
  AutomorphismSpec spec_;
};

/// True when `f` is an automorphism of `domain` (identity acts on everything).
bool acts_on(const Automorphism& f, const BalancedDomain& domain);

/// Throws DomainError when z is outside the automorphism's model domain.
ComplexVector apply(const Automorphism& f, const ComplexVector& z);
Automorphism inverse(const Automorphism& f);
/// Complex derivative df_z(v).
ComplexVector differential(const Automorphism& f, const ComplexVector& z, const ComplexVector& v);

/// F in Aut(domain) with F(a) = 0 (and F(0) = a); the identity when a = 0.
/// Only the unit polydisc and unit ball are supported.
Automorphism transport_to_origin(const BalancedDomain& domain, const ComplexVector& a);

/// (x - h_a) / (1 - x h_a) for x, h_a in [0, 1).
double alpha(double x, double h_a);

struct AutomorphismReport {
  double max_roundtrip_error;
  /// max over samples of gauge(F(z)) - 1; negative when every image is interior.
  double max_gauge_excess;
  std::size_t samples;
};

AutomorphismReport verify_automorphism(const BalancedDomain& domain, const Automorphism& f,
                                       std::size_t samples, RngSeed seed);

/// Haar-ish random unitary from Gram-Schmidt on a complex Gaussian matrix.
std::vector<Complex> random_unitary(std::size_t dim, Rng& rng);

/// A random automorphism of the unit polydisc or ball with |F(0)| <= max_center.
Automorphism random_automorphism(const BalancedDomain& domain, Rng& rng, double max_center);

}  // namespace squeezekit
