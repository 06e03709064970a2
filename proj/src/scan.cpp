#include "squeezekit/scan.hpp"

#include <algorithm>
#include <cmath>

#include "squeezekit/automorphisms.hpp"
#include "squeezekit/errors.hpp"
#include "squeezekit/metrics.hpp"
#include "squeezekit/minkowski.hpp"

namespace squeezekit {

namespace {

constexpr double kTol = 1e-12;

void require_exponent(int exponent) {
  if (exponent != 1 && exponent != 2) throw ArgumentError("scan exponent must be 1 or 2");
}

ImageRegion transported_image(const Embedding& f, const Automorphism& psi) {
  const ImageRegion inner = image_of(f);
  const Automorphism back = inverse(psi);
  ImageRegion out;
  out.membership = [inner, back](const ComplexVector& w) {
    try {
      return inner.contains(apply(back, w));
    } catch (const DomainError&) {
      return false;
    }
  };
  out.dim = inner.dim;
  out.label = "transported " + inner.label;
  return out;
}

void add_flag(std::string& flags, const std::string& flag) {
  if (!flags.empty()) flags += ';';
  flags += flag;
}

}  // namespace

std::vector<double> epsilon_sequence(const std::vector<double>& T, const std::vector<double>& dist, int exponent) {
  require_exponent(exponent);
  if (T.size() != dist.size()) throw ArgumentError("epsilon_sequence: length mismatch");
  std::vector<double> eps(T.size());
  for (std::size_t j = 0; j < T.size(); ++j) {
    if (!(dist[j] > 0.0)) throw ArgumentError("epsilon_sequence: distances must be positive");
    if (!(T[j] > 0.0 && T[j] <= 1.0)) throw ArgumentError("epsilon_sequence: T must lie in (0, 1]");
    eps[j] = (1.0 - T[j]) / std::pow(dist[j], exponent);
  }
  return eps;
}

bool hypothesis_consistent(const std::vector<double>& eps, std::size_t tail_start, double threshold) {
  if (tail_start >= eps.size()) return true;
  for (std::size_t j = tail_start + 1; j < eps.size(); ++j)
    if (eps[j] > eps[j - 1] + kTol) return false;
  return eps.back() < threshold;
}

double kobayashi_upper(const BalancedDomain& omega, const ComplexVector& z0, const ComplexVector& q) {
  if (omega.is_homogeneous_model()) return kobayashi_homogeneous(omega, z0, q).value;
  if (z0.is_zero()) return kobayashi_balanced(omega, q).value;
  return lempert_upper(omega, z0, q).value;
}

double estimate_c(const BalancedDomain& omega, const ComplexVector& z0, const std::vector<ComplexVector>& q,
                  int exponent) {
  require_exponent(exponent);
  if (q.empty()) throw ArgumentError("estimate_c: empty sequence");
  double c = -HUGE_VAL;
  for (const auto& p : q) {
    const double dist = boundary_distance(omega, p).value;
    c = std::max(c, kobayashi_upper(omega, z0, p) + 0.5 * exponent * std::log(dist));
  }
  return c;
}

double base_image_threshold(double c, double dist, int exponent) {
  require_exponent(exponent);
  return 1.0 - std::pow(dist, exponent) / std::exp(2.0 * c);
}

bool base_image_check(double c, double dist, double h_val, int exponent) {
  return h_val < base_image_threshold(c, dist, exponent);
}

bool sqrt_step_holds(double x) {
  if (x == 0.0) return true;
  if (!(x <= 0.25)) return false;
  return std::sqrt(1.0 - 4.0 * x) > 1.0 - 3.0 * x;
}

bool RadiusChainRecord::identity_ok(double tol) const { return std::abs(identity_lhs - identity_rhs) <= tol; }

bool RadiusChainRecord::passed(double tol) const {
  return identity_ok(tol) && lower_bound_ok && sqrt_vs_linear_ok && gate_ok && bound_route_ok;
}

RadiusChainRecord radius_chain(double s, double b, double c, double eps) {
  if (!(b >= 0.0) || !(s <= 1.0)) throw ArgumentError("radius_chain: need 0 <= b and s <= 1");
  if (!(eps >= 0.0) || !std::isfinite(c)) throw ArgumentError("radius_chain: need eps >= 0 and finite c");
  if (!(b < s)) throw PreconditionError("radius_chain: b must be below s");
  const double den = 1.0 - b * s;
  const double ratio = (s - b) / den;
  RadiusChainRecord r{};
  r.identity_lhs = ratio * ratio;
  r.identity_rhs = 1.0 + (s * s - 1.0) * (1.0 - b * b) / (den * den);
  r.x = std::exp(2.0 * c) * eps;
  r.lower_bound_1m4 = 1.0 - 4.0 * r.x;
  r.lower_bound_ok = r.identity_lhs >= r.lower_bound_1m4 - kTol;
  r.sqrt_vs_linear_ok = r.x == 0.0 ? r.identity_lhs >= 1.0 - kTol : std::sqrt(r.identity_lhs) > 1.0 - 3.0 * r.x;
  r.gate_ok = r.x < 2.0 / 9.0;
  r.bound_route_ok = sqrt_step_holds(r.x);
  return r;
}

ScanResult run_scan(const BalancedDomain& omega, const BalancedDomain& target, const std::vector<ComplexVector>& q,
                    const EmbeddingFamily& family, const ScanConfig& config) {
  require_exponent(config.exponent);
  ScanResult result;
  if (q.empty()) {
    result.verdict = "vacuous";
    return result;
  }
  const ComplexVector z0 = config.base.value_or(ComplexVector::zeros(omega.dim()));
  require_dim(z0, omega.dim(), "run_scan base point");

  std::string c_error;
  try {
    result.c = estimate_c(omega, z0, q, config.exponent);
  } catch (const Error& e) {
    c_error = e.what();
  }

  std::vector<double> eps_values;
  for (std::size_t idx = 0; idx < q.size(); ++idx) {
    ScanRecord row{idx + 1, q[idx]};
    row.gating = row.j > config.skip;
    std::string flags;
    try {
      if (!result.c) throw Error("estimate_c: " + c_error);
      row.c = *result.c;
      const auto dist = boundary_distance(omega, row.q);
      row.dist = dist.value;
      row.dist_lower_bound = dist.lower_bound;
      const Embedding f = family(row.q);
      const SqueezeRecord squeeze = squeeze_lower_bound(omega, target, row.q, f, config.inner);
      row.T = squeeze.radius;
      const double scale = std::pow(row.dist, config.exponent);
      row.eps = epsilon_sequence({row.T}, {row.dist}, config.exponent).front();
      eps_values.push_back(row.eps);
      row.s = 1.0 - row.eps * scale;
      row.threshold32 = base_image_threshold(row.c, row.dist, config.exponent);
      const ComplexVector image_base = embed(f, z0);
      row.b = gauge_value(target, image_base);
      row.base_image_ok = row.b < row.threshold32;
      if (!row.base_image_ok) add_flag(flags, "base-image");

      if (row.b < row.s) {
        row.radius_chain = radius_chain(row.s, row.b, row.c, row.eps);
        const auto& l = *row.radius_chain;
        if (!l.identity_ok()) add_flag(flags, "identity");
        if (!l.lower_bound_ok) add_flag(flags, "lower-bound");
        if (!l.sqrt_vs_linear_ok) add_flag(flags, "sqrt-step");
        if (!l.gate_ok) add_flag(flags, "gate");
        if (!l.bound_route_ok) add_flag(flags, "bound-route");
      } else {
        add_flag(flags, "b>=s");
      }

      row.required_radius = 1.0 - 3.0 * std::exp(2.0 * row.c) * row.eps;
      if (target.is_homogeneous_model()) {
        const Automorphism psi = transport_to_origin(target, image_base);
        const ImageRegion image = image_of(f);
        if (image.balanced && image.balanced->same_as(target)) {
          row.final_radius = 1.0;
          row.final_method = RadiusMethod::closed_form;
        } else {
          const InnerRadius r = inner_radius(target, transported_image(f, psi), config.inner);
          row.final_radius = r.value;
          row.final_method = r.method;
        }
        if (*row.final_radius < row.required_radius - kTol) add_flag(flags, "final-containment");
      } else {
        add_flag(flags, "no-transport");
      }
    } catch (const Error& e) {
      add_flag(flags, std::string("error: ") + e.what());
    }
    row.passed = flags.empty();
    row.flags = flags.empty() ? "ok" : flags;
    row.verdict = !row.gating ? "skipped" : (row.passed ? "pass" : "fail");
    result.rows.push_back(std::move(row));
  }

  result.hypothesis_consistent = hypothesis_consistent(eps_values, std::min(config.skip, eps_values.size()),
                                                       config.eps_threshold);
  const bool ok = std::all_of(result.rows.begin(), result.rows.end(),
                              [](const ScanRecord& r) { return !r.gating || r.passed; });
  result.verdict = ok ? "theorem-chain-verified" : "chain-not-verified";
  return result;
}

std::vector<ComplexVector> ray_sequence(const ComplexVector& u, std::size_t J) {
  std::vector<ComplexVector> out;
  for (std::size_t j = 1; j <= J; ++j) out.push_back(u * (1.0 - std::ldexp(1.0, -static_cast<int>(j))));
  return out;
}

}  // namespace squeezekit
