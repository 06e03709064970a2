#pragma once

// Lower bounds for squeezing functions from explicit injective embeddings
// f: Omega -> D with f(z) = 0, via the inner radius of f(Omega).

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "squeezekit/automorphisms.hpp"
#include "squeezekit/geometry.hpp"
#include "squeezekit/rng.hpp"

namespace squeezekit {

/// z -> c z.
struct IdentityScale {
  double factor;
};

/// z -> c F(z).
struct AutomorphismCompose {
  Automorphism automorphism;
  double factor;
};

/// z -> diag(scales) z + translation. Nonzero scales keep it injective.
struct CoordinateAffine {
  std::vector<Complex> scales;
  ComplexVector translation;
};

using EmbeddingMap = std::variant<IdentityScale, AutomorphismCompose, CoordinateAffine>;

struct Embedding {
  EmbeddingMap map;
  BalancedDomain source;
  BalancedDomain target;
  /// The point sent to 0.
  ComplexVector base;

  std::string id() const;
};

/// Validates dimensions and parameters; does not check the image.
Embedding make_embedding(EmbeddingMap map, BalancedDomain source, BalancedDomain target, ComplexVector base);

ComplexVector embed(const Embedding& f, const ComplexVector& z);
/// Preimage under the map, or nullopt when w lies outside the map's range of definition.
std::optional<ComplexVector> preimage(const Embedding& f, const ComplexVector& w);

/// A region containing 0 (typically f(Omega)), optionally known as a balanced domain.
struct ImageRegion {
  std::optional<BalancedDomain> balanced;
  std::function<bool(const ComplexVector&)> membership;
  std::size_t dim;
  std::string label;

  static ImageRegion of(const BalancedDomain& domain);
  bool contains(const ComplexVector& w) const { return membership(w); }
  ImageRegion scaled(double factor) const;
};

ImageRegion image_of(const Embedding& f);

struct InnerRadiusOptions {
  /// Points on the sphere {h_D = r} used by the sampled containment check.
  std::size_t samples = 10000;
  RngSeed seed{};
  /// Bisection stops once the bracket is narrower than this.
  double tolerance = 1e-12;
};

enum class RadiusMethod { closed_form, sampled };

std::string to_string(RadiusMethod method);

struct InnerRadius {
  double value;
  RadiusMethod method;
  std::size_t samples;
};

/// Largest r with D(r) contained in the image. Closed form when the image is a
/// balanced non-custom domain; otherwise bisection against a sampled sphere,
/// which can only overestimate. Throws ArgumentError when 0 is not in the image.
InnerRadius inner_radius(const BalancedDomain& target, const ImageRegion& image,
                         const InnerRadiusOptions& options = {});

/// Number of `samples` points of D(r) falling outside the image.
std::size_t containment_failures(const BalancedDomain& target, const ImageRegion& image, double r,
                                 std::size_t samples, RngSeed seed);

struct SqueezeRecord {
  ComplexVector base;
  Embedding embedding;
  double radius;
  std::string target;
  RadiusMethod method;
  std::size_t samples;
};

/// T^D_Omega(z) >= r certified by f. Throws ArgumentError when f(z) != 0 or f's
/// declared domains differ, CertificateError when f(Omega) is not inside D.
SqueezeRecord squeeze_lower_bound(const BalancedDomain& omega, const BalancedDomain& target,
                                  const ComplexVector& z, const Embedding& f,
                                  const InnerRadiusOptions& options = {});

using EmbeddingFamily = std::function<Embedding(const ComplexVector&)>;

/// f_q = c * transport_to_origin(Omega, q) with the largest c keeping c Omega inside D.
/// Omega must be the unit polydisc or ball.
EmbeddingFamily transport_family(const BalancedDomain& omega, const BalancedDomain& target);

std::vector<SqueezeRecord> squeeze_along_sequence(const BalancedDomain& omega, const BalancedDomain& target,
                                                  const std::vector<ComplexVector>& points,
                                                  const EmbeddingFamily& family,
                                                  const InnerRadiusOptions& options = {});

}  // namespace squeezekit
