#pragma once

// Boundary scan: squeezing lower bounds T_j along a sequence q_j -> boundary,
// eps_j = (1 - T_j) / dist_j^e, the constant c from K(z0, q_j) <= c - (e/2) log dist_j,
// and the scalar inequality chain that turns these into a containment
// D(1 - 3 e^{2c} eps_j) inside the transported image.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "squeezekit/complex_vector.hpp"
#include "squeezekit/geometry.hpp"
#include "squeezekit/squeezing.hpp"

namespace squeezekit {

/// eps_j = (1 - T_j) / dist_j^exponent.
std::vector<double> epsilon_sequence(const std::vector<double>& T, const std::vector<double>& dist,
                                     int exponent = 2);

/// True when eps[tail_start..] is nonincreasing and ends below `threshold`.
/// An empty tail is consistent.
bool hypothesis_consistent(const std::vector<double>& eps, std::size_t tail_start, double threshold);

/// Upper bound for K_Omega(z0, q): closed form on the unit polydisc and ball,
/// the balanced closed form when z0 = 0, a Lempert disc otherwise.
double kobayashi_upper(const BalancedDomain& omega, const ComplexVector& z0, const ComplexVector& q);

/// max_j (K_upper(z0, q_j) + (exponent / 2) log dist_j). May be negative.
double estimate_c(const BalancedDomain& omega, const ComplexVector& z0, const std::vector<ComplexVector>& q,
                  int exponent = 2);

/// 1 - dist^exponent / e^{2c}.
double base_image_threshold(double c, double dist, int exponent = 2);

/// h_val < base_image_threshold(c, dist) (strict).
bool base_image_check(double c, double dist, double h_val, int exponent = 2);

/// sqrt(1 - 4x) > 1 - 3x, which holds exactly for 0 < x < 2/9; x = 0 counts as holding.
bool sqrt_step_holds(double x);

struct RadiusChainRecord {
  /// ((s - b) / (1 - b s))^2
  double identity_lhs;
  /// 1 + (s^2 - 1)(1 - b^2) / (1 - b s)^2
  double identity_rhs;
  /// x = e^{2c} eps
  double x;
  /// 1 - 4x
  double lower_bound_1m4;
  bool lower_bound_ok;
  /// sqrt(identity_lhs) > 1 - 3x (identity_lhs >= 1 when x = 0).
  bool sqrt_vs_linear_ok;
  /// x < 2/9
  bool gate_ok;
  /// sqrt_step_holds(x): the bound-only route from 1 - 4x to 1 - 3x.
  bool bound_route_ok;

  bool identity_ok(double tol = 1e-12) const;
  bool passed(double tol = 1e-12) const;
};

/// Requires 0 <= b < s <= 1; throws PreconditionError when b >= s.
RadiusChainRecord radius_chain(double s, double b, double c, double eps);

struct ScanConfig {
  /// Base point z0; the origin when empty.
  std::optional<ComplexVector> base;
  /// Compensating exponent e in dist^e, 1 or 2.
  int exponent = 2;
  /// Rows with j <= skip are reported but do not gate the verdict.
  std::size_t skip = 0;
  /// Tail threshold for hypothesis_consistent.
  double eps_threshold = 1e-3;
  InnerRadiusOptions inner{};
};

struct ScanRecord {
  std::size_t j;
  ComplexVector q;
  double dist = 0.0;
  bool dist_lower_bound = false;
  double T = 0.0;
  double eps = 0.0;
  double c = 0.0;
  double threshold32 = 0.0;
  double s = 0.0;
  double b = 0.0;
  bool base_image_ok = false;
  std::optional<RadiusChainRecord> radius_chain{};
  /// Inner radius of D in Psi_j(f_j(Omega)), Psi_j moving f_j(z0) to 0.
  std::optional<double> final_radius{};
  std::optional<RadiusMethod> final_method{};
  /// 1 - 3 e^{2c} eps_j
  double required_radius = 0.0;
  bool gating = true;
  bool passed = false;
  /// "ok" or a ';'-separated list of failed checks.
  std::string flags{};
  /// "pass", "fail" or "skipped".
  std::string verdict{};
};

struct ScanResult {
  std::vector<ScanRecord> rows;
  std::optional<double> c;
  bool hypothesis_consistent = true;
  /// "theorem-chain-verified", "chain-not-verified" or "vacuous".
  std::string verdict;
};

/// Assembles one record per q_j. Component failures are recorded in the row's flags.
ScanResult run_scan(const BalancedDomain& omega, const BalancedDomain& target, const std::vector<ComplexVector>& q,
                    const EmbeddingFamily& family, const ScanConfig& config = {});

/// q_j = (1 - 2^-j) u for j = 1..J.
std::vector<ComplexVector> ray_sequence(const ComplexVector& u, std::size_t J);

}  // namespace squeezekit
