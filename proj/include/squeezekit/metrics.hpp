#pragma once

// Invariant metrics: Poincare distance, Kobayashi distance on balanced convex
// domains, Lempert/Kobayashi upper bounds from analytic discs, lower bounds
// from supporting functionals, the infinitesimal metric and curve lengths.

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "squeezekit/complex_vector.hpp"
#include "squeezekit/geometry.hpp"
#include "squeezekit/minkowski.hpp"
#include "squeezekit/rng.hpp"

namespace squeezekit {

/// Polynomial disc phi(zeta) = sum_k c_k zeta^k with phi(zeta0) = z, phi(zeta1) = w.
struct AnalyticDiscPoly {
  std::vector<ComplexVector> coefficients;
  Complex zeta0;
  Complex zeta1;
  /// 1 - max gauge(phi) over the boundary grid of `grid` points.
  double margin = 0.0;
  std::size_t grid = 0;

  std::size_t degree() const { return coefficients.size() - 1; }
  ComplexVector operator()(Complex zeta) const;
};

/// max over `grid` equispaced points of |zeta| = radius of gauge(phi(zeta)).
double max_gauge_on_circle(const BalancedDomain& domain,
                           const std::function<ComplexVector(Complex)>& phi, double radius,
                           std::size_t grid);

struct DiscCheck {
  double margin;
  double interpolation_error;
  bool admissible() const { return margin > 0.0; }
};

/// Re-checks a disc certificate: boundary-grid margin and interpolation of (z, w).
DiscCheck check_disc(const BalancedDomain& domain, const std::function<ComplexVector(Complex)>& phi,
                     Complex zeta0, Complex zeta1, const ComplexVector& z, const ComplexVector& w,
                     std::size_t grid = 512);

enum class BoundKind { upper, lower, exact };

std::string to_string(BoundKind kind);

/// Closed-form tag, disc, functional, or a chain of discs.
using Certificate =
    std::variant<std::string, AnalyticDiscPoly, LinearFunctional, std::vector<AnalyticDiscPoly>>;

struct MetricBound {
  double value;
  BoundKind kind;
  Certificate certificate;
};

/// Poincare distance on the unit disc, atanh(|z0 - z1| / |1 - conj(z0) z1|).
double poincare(Complex zeta0, Complex zeta1);

/// K_D(0, z) = 1/2 log((1 + h(z)) / (1 - h(z))). Gauges within 1e-12 of 1 are rejected.
MetricBound kobayashi_balanced(const BalancedDomain& domain, const ComplexVector& z);

/// K_D(z, w) for the unit polydisc or ball, via transport of w to the origin.
MetricBound kobayashi_homogeneous(const BalancedDomain& domain, const ComplexVector& z,
                                  const ComplexVector& w);

struct LempertOptions {
  std::size_t degree = 1;
  /// Random restarts after the local search from the best initial disc.
  std::size_t restarts = 2;
  RngSeed seed{};
  /// Optimizer tolerance on the objective.
  double tolerance = 1e-12;
  std::size_t max_evaluations = 600;
  /// Run the local search at all; without it only the initial discs are scored.
  bool polish = true;
  /// Grid used to certify the returned disc.
  std::size_t grid = 512;
  /// Grid used inside the search loop.
  std::size_t search_grid = 128;
  /// Required 1 - max gauge on the certificate grid.
  double margin = 1e-12;
  /// Extra initial discs (e.g. pushed-forward certificates).
  std::vector<AnalyticDiscPoly> warm_starts;
};

/// Upper bound for the Lempert function delta_D(z, w) over polynomial discs of
/// the given degree. The affine disc through z and w is always a candidate.
MetricBound lempert_upper(const BalancedDomain& domain, const ComplexVector& z,
                          const ComplexVector& w, const LempertOptions& options = {});

struct ChainOptions {
  LempertOptions lempert{};
  /// Evaluation budget of each link's local search while moving chain points.
  std::size_t search_evaluations = 120;
  /// Run the local disc search for every trial move; off scores moves by the initial discs.
  bool polish_search = false;
  std::size_t max_sweeps = 12;
  double initial_step = 0.05;
  double min_step = 1e-6;
};

/// Upper bound for K_D(z, w) over chains z = z_0, ..., z_k = w of Lempert
/// upper bounds. Never exceeds the k = 1 value computed with the same options.
MetricBound kobayashi_upper_chain(const BalancedDomain& domain, const ComplexVector& z,
                                  const ComplexVector& w, std::size_t chain_length,
                                  const ChainOptions& options = {});

/// rho(0, h(z)) certified by a supporting functional L: |L| < 1 on D and L(z) = h(z).
MetricBound kobayashi_lower_functional(const BalancedDomain& domain, const ComplexVector& z);

enum class DiscFamily {
  /// zeta -> z + zeta v, largest admissible radius by bisection.
  affine,
  /// The affine disc at the origin carried back by transport_to_origin(z);
  /// exact on the unit polydisc and ball.
  transported,
};

struct InfinitesimalOptions {
  DiscFamily family = DiscFamily::affine;
  std::size_t grid = 512;
  double relative_tolerance = 1e-14;
};

/// 1/R* for the largest R* such that a disc of the family through z with
/// derivative v stays in the domain on |zeta| < R*. Upper bound for F_D(z, v).
double infinitesimal_upper(const BalancedDomain& domain, const ComplexVector& z,
                           const ComplexVector& v, const InfinitesimalOptions& options = {});

struct CurveLength {
  /// Composite trapezoid with q nodes per segment.
  double value;
  /// Same with 2q - 1 nodes per segment.
  double refined_value;
  /// refined_value - value.
  double richardson_residual;
  std::size_t nodes_per_segment;
};

/// Trapezoidal estimate of the Kobayashi length of a polyline,
/// integrating infinitesimal_upper along each segment.
CurveLength curve_length_upper(const BalancedDomain& domain, const std::vector<ComplexVector>& path,
                               std::size_t quadrature_points,
                               const InfinitesimalOptions& options = {DiscFamily::transported});

struct GrowthRow {
  int j;
  double dist;
  bool dist_lower_bound;
  double kobayashi;
  double compensated_full;  // K + log dist
  double compensated_half;  // K + 1/2 log dist
};

/// K_D(0, z_j) against dist(z_j, boundary) at z_j = (1 - 2^-j) u, j = 1..J.
/// Requires gauge(u) = 1 within 1e-9 and J >= 3.
std::vector<GrowthRow> boundary_growth_scan(const BalancedDomain& domain, const ComplexVector& u, int J);

}  // namespace squeezekit
