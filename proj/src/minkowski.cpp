#include "squeezekit/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "squeezekit/errors.hpp"

namespace squeezekit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lp_norm(const ComplexVector& z, double p) {
  if (p == 1.0) {
    double s = 0.0;
    for (const auto& c : z) s += std::abs(c);
    return s;
  }
  if (p == 2.0) return z.norm2();
  if (std::isinf(p)) return z.norm_inf();
  // scale by the largest modulus so that large p cannot overflow
  const double m = z.norm_inf();
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& c : z) s += std::pow(std::abs(c) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double lp_norm(const std::vector<double>& v, double p) {
  if (std::isinf(p)) return *std::max_element(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

/// Exponent p of the l^p shape, or nullopt for weighted / custom shapes.
std::optional<double> lp_exponent(const BalancedDomain& domain) {
  if (domain.is_polydisc()) return kInf;
  if (domain.is_ball()) return 2.0;
  if (const auto* s = std::get_if<PNormBall>(&domain.shape())) return s->p;
  return std::nullopt;
}

double inverse_exponent(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

double conjugate_exponent(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

std::size_t argmax_weighted(const ComplexVector& w, const std::vector<double>* radii) {
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const double v = std::abs(w[i]) / (radii ? (*radii)[i] : 1.0);
    if (v > best_value) {  // strict: ties go to the lowest index
      best_value = v;
      best = i;
    }
  }
  return best;
}

GaugeValue bisect_custom(const BalancedDomain& domain, const ComplexVector& z, double tol) {
  const double kappa = coercivity(domain);
  const double norm = z.norm2();
  double lo = kappa * norm;
  double hi = norm / kappa;
  int grow = 0;
  while (!contains(domain, z / hi)) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 64)
      throw ConfigurationError("gauge: membership oracle rejects every dilate of the point");
  }
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (contains(domain, z / mid))
      hi = mid;
    else
      lo = mid;
  }
  return {0.5 * (lo + hi), GaugeMethod::bisection, hi - lo};
}

}  // namespace

std::string to_string(GaugeMethod method) {
  return method == GaugeMethod::closed_form ? "closed-form" : "bisection";
}

std::string to_string(DualNormMethod method) {
  return method == DualNormMethod::closed_form ? "closed-form" : "sampled-lower-bound";
}

GaugeValue gauge(const BalancedDomain& domain, const ComplexVector& z, double tol) {
  require_dim(z, domain.dim(), "gauge");
  if (!(tol >= 1e-14)) throw ArgumentError("gauge: tolerance must be at least 1e-14");
  if (z.is_zero()) return {0.0, domain.is_custom() ? GaugeMethod::bisection : GaugeMethod::closed_form, 0.0};
  if (domain.is_custom()) return bisect_custom(domain, z, tol);

  double base = 0.0;
  if (const auto p = lp_exponent(domain)) {
    base = lp_norm(z, *p);
  } else {
    const auto& radii = std::get<WeightedPolydisc>(domain.shape()).radii;
    for (std::size_t i = 0; i < z.dim(); ++i) base = std::max(base, std::abs(z[i]) / radii[i]);
  }
  return {domain.scale() == 1.0 ? base : base / domain.scale(), GaugeMethod::closed_form, 0.0};
}

double gauge_value(const BalancedDomain& domain, const ComplexVector& z) {
  return gauge(domain, z).value;
}

BalancedDomain sublevel(const BalancedDomain& domain, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw ArgumentError("sublevel: r must lie in (0, 1]");
  if (r == 1.0) return domain;
  return domain.scaled(r);
}

Complex LinearFunctional::operator()(const ComplexVector& z) const {
  require_dim(z, coefficients.dim(), "LinearFunctional");
  Complex s{};
  for (std::size_t i = 0; i < z.dim(); ++i) s += coefficients[i] * z[i];
  return s;
}

DualNorm dual_norm(const BalancedDomain& domain, const LinearFunctional& functional,
                   const DualNormOptions& options) {
  const auto& c = functional.coefficients;
  require_dim(c, domain.dim(), "dual_norm");
  if (const auto p = lp_exponent(domain)) {
    return {domain.scale() * lp_norm(c, conjugate_exponent(*p)), DualNormMethod::closed_form, 0};
  }
  if (const auto* w = std::get_if<WeightedPolydisc>(&domain.shape())) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.dim(); ++i) s += w->radii[i] * std::abs(c[i]);
    return {domain.scale() * s, DualNormMethod::closed_form, 0};
  }
  if (options.samples == 0) throw ArgumentError("dual_norm: sample count must be positive");
  Rng rng(options.seed);
  double best = 0.0;
  for (std::size_t k = 0; k < options.samples; ++k) {
    const ComplexVector x = rng.gaussian_vector(domain.dim());
    const double h = gauge_value(domain, x);
    if (h > 0.0) best = std::max(best, std::abs(functional(x)) / h);
  }
  return {best, DualNormMethod::sampled_lower_bound, options.samples};
}

LinearFunctional supporting_functional(const BalancedDomain& domain, const ComplexVector& w) {
  require_dim(w, domain.dim(), "supporting_functional");
  if (w.is_zero()) throw ArgumentError("supporting_functional: no supporting functional at the origin");
  const double inv_scale = 1.0 / domain.scale();
  std::vector<Complex> coeffs(w.dim());

  if (domain.is_polydisc() || std::holds_alternative<WeightedPolydisc>(domain.shape())) {
    const auto* weighted = std::get_if<WeightedPolydisc>(&domain.shape());
    const std::vector<double>* radii = weighted ? &weighted->radii : nullptr;
    const std::size_t i = argmax_weighted(w, radii);
    const double r = radii ? (*radii)[i] : 1.0;
    coeffs[i] = std::conj(w[i]) / (std::abs(w[i]) * r) * inv_scale;
    return {ComplexVector(std::move(coeffs))};
  }
  if (domain.is_ball()) {
    const double norm = w.norm2();
    for (std::size_t i = 0; i < w.dim(); ++i) coeffs[i] = std::conj(w[i]) / norm * inv_scale;
    return {ComplexVector(std::move(coeffs))};
  }
  if (const auto* s = std::get_if<PNormBall>(&domain.shape())) {
    const double norm = lp_norm(w, s->p);
    for (std::size_t i = 0; i < w.dim(); ++i) {
      const double m = std::abs(w[i]);
      if (m == 0.0) continue;
      coeffs[i] = std::conj(w[i]) / m * std::pow(m / norm, s->p - 1.0) * inv_scale;
    }
    return {ComplexVector(std::move(coeffs))};
  }
  throw UnsupportedVariant("supporting_functional: no explicit construction for " + domain.name());
}

std::optional<double> norm_ratio(const BalancedDomain& from, const BalancedDomain& to) {
  if (from.dim() != to.dim()) throw ArgumentError("norm_ratio: dimension mismatch");
  if (from.is_custom() || to.is_custom()) return std::nullopt;
  const double n = static_cast<double>(from.dim());
  const auto p_from = lp_exponent(from);
  const auto p_to = lp_exponent(to);
  const auto* w_from = std::get_if<WeightedPolydisc>(&from.shape());
  const auto* w_to = std::get_if<WeightedPolydisc>(&to.shape());

  double base = 0.0;
  if (p_from && p_to) {
    base = std::pow(n, std::max(0.0, inverse_exponent(*p_to) - inverse_exponent(*p_from)));
  } else if (w_from && p_to) {
    base = lp_norm(w_from->radii, *p_to);
  } else if (p_from && w_to) {
    base = 1.0 / *std::min_element(w_to->radii.begin(), w_to->radii.end());
  } else {
    for (std::size_t i = 0; i < w_from->radii.size(); ++i)
      base = std::max(base, w_from->radii[i] / w_to->radii[i]);
  }
  return base * from.scale() / to.scale();
}

}  // namespace squeezekit
