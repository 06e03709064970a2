#pragma once

// Domain representations, membership, boundary distance and interior sampling.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "squeezekit/complex_vector.hpp"
#include "squeezekit/rng.hpp"

namespace squeezekit {

/// Unit polydisc D^n, gauge max_i |z_i|.
struct Polydisc {
  std::size_t dim;
};

/// Unit ball B^n, gauge ||z||_2.
struct EuclideanBall {
  std::size_t dim;
};

/// Unit ball of the l^p norm, p >= 1.
struct PNormBall {
  std::size_t dim;
  double p;
};

/// Product of discs with radii r_i, gauge max_i |z_i| / r_i.
struct WeightedPolydisc {
  std::vector<double> radii;
};

/// Domain given by a membership oracle whose sublevel gauge is a norm.
///
/// `coercivity` is kappa with gauge(z) >= kappa ||z||_2; `lipschitz` is L with
/// |gauge(z) - gauge(w)| <= L ||z - w||_2. Operations needing either constant
/// throw ConfigurationError when it is absent.
struct CustomGauge {
  std::size_t dim;
  std::function<bool(const ComplexVector&)> membership;
  std::optional<double> coercivity;
  std::optional<double> lipschitz;
  std::string label = "custom";
};

using DomainShape = std::variant<Polydisc, EuclideanBall, PNormBall, WeightedPolydisc, CustomGauge>;

/// A bounded balanced convex domain `scale * shape`.
///
/// Sublevel sets D(r) = rD are represented through `scale`, so every
/// operation below works for them unchanged.
class BalancedDomain {
 public:
  static BalancedDomain polydisc(std::size_t dim);
  static BalancedDomain ball(std::size_t dim);
  static BalancedDomain pnorm_ball(std::size_t dim, double p);
  static BalancedDomain weighted_polydisc(std::vector<double> radii);
  static BalancedDomain custom(CustomGauge gauge);

  const DomainShape& shape() const { return shape_; }
  double scale() const { return scale_; }
  std::size_t dim() const;

  /// `factor * this`; factor must be positive.
  BalancedDomain scaled(double factor) const;

  bool is_polydisc() const { return std::holds_alternative<Polydisc>(shape_); }
  bool is_ball() const { return std::holds_alternative<EuclideanBall>(shape_); }
  bool is_custom() const { return std::holds_alternative<CustomGauge>(shape_); }
  /// True for the unscaled unit polydisc or unit ball.
  bool is_homogeneous_model() const { return scale_ == 1.0 && (is_polydisc() || is_ball()); }

  std::string name() const;

  /// Structural equality; custom gauges compare by label and dimension.
  bool same_as(const BalancedDomain& other) const;

 private:
  explicit BalancedDomain(DomainShape shape) : shape_(std::move(shape)) {}

  DomainShape shape_;
  double scale_ = 1.0;
};

/// prod_i |z_i|^{exponents_i} < bound.
struct MonomialConstraint {
  std::vector<double> exponents;
  double bound;
};

/// Reinhardt domain cut out of the box {||z||_inf < box_radius} by monomial inequalities.
class ReinhardtDomain {
 public:
  ReinhardtDomain(std::size_t dim, std::vector<MonomialConstraint> constraints, double box_radius);

  std::size_t dim() const { return dim_; }
  const std::vector<MonomialConstraint>& constraints() const { return constraints_; }
  double box_radius() const { return box_radius_; }

 private:
  std::size_t dim_;
  std::vector<MonomialConstraint> constraints_;
  double box_radius_;
};

bool contains(const BalancedDomain& domain, const ComplexVector& z);
bool contains(const ReinhardtDomain& domain, const ComplexVector& z);

struct BoundaryDistance {
  double value;
  /// False when `value` is the exact Euclidean distance, true when it is only a lower bound.
  bool lower_bound;
};

BoundaryDistance boundary_distance(const BalancedDomain& domain, const ComplexVector& z);

/// kappa with gauge(z) >= kappa ||z||_2.
double coercivity(const BalancedDomain& domain);
/// Lipschitz constant of the gauge with respect to ||.||_2.
double lipschitz(const BalancedDomain& domain);
/// Half-widths of the bounding box, one per complex coordinate (applies to re and im).
std::vector<double> bounding_box(const BalancedDomain& domain);

/// Points drawn uniformly from the domain by rejection from its bounding box.
/// Throws SamplingFailure when the acceptance rate falls below 1e-6.
std::vector<ComplexVector> sample_interior(const BalancedDomain& domain, std::size_t count,
                                           RngSeed seed);
std::vector<ComplexVector> sample_interior(const ReinhardtDomain& domain, std::size_t count,
                                           RngSeed seed);

}  // namespace squeezekit
