#pragma once

// Minkowski functionals, sublevel scaling, dual norms and supporting functionals.

#include <cstddef>
#include <optional>
#include <string>

#include "squeezekit/complex_vector.hpp"
#include "squeezekit/geometry.hpp"
#include "squeezekit/rng.hpp"

namespace squeezekit {

enum class GaugeMethod { closed_form, bisection };

std::string to_string(GaugeMethod method);

struct GaugeValue {
  double value;
  GaugeMethod method;
  /// Width of the final bisection bracket; 0 for closed forms.
  double tolerance;
};

/// h_D(z) = inf{t > 0 : z/t in D}.
///
/// Closed form for the model variants. Custom gauges are bisected over the
/// membership oracle starting from [kappa ||z||, ||z|| / kappa] until the
/// bracket is narrower than `tol`. gauge(0) is 0.
GaugeValue gauge(const BalancedDomain& domain, const ComplexVector& z, double tol = 1e-12);

/// Shorthand for gauge(domain, z).value.
double gauge_value(const BalancedDomain& domain, const ComplexVector& z);

/// D(r) = {h_D < r} = rD, for 0 < r <= 1.
BalancedDomain sublevel(const BalancedDomain& domain, double r);

/// z -> sum_i c_i z_i.
struct LinearFunctional {
  ComplexVector coefficients;

  Complex operator()(const ComplexVector& z) const;
};

enum class DualNormMethod { closed_form, sampled_lower_bound };

std::string to_string(DualNormMethod method);

struct DualNorm {
  double value;
  DualNormMethod method;
  std::size_t samples;
};

struct DualNormOptions {
  std::size_t samples = 10000;
  RngSeed seed{};
};

/// ||L||_h = sup{|L(x)| : h(x) <= 1}. For custom gauges this is a lower
/// bound: the maximum over sampled points of the unit gauge sphere.
DualNorm dual_norm(const BalancedDomain& domain, const LinearFunctional& functional,
                   const DualNormOptions& options = {});

/// A functional with ||L||_h = 1 and L(w) = h(w) > 0.
///
/// Polydisc-type domains support on the coordinate of largest (weighted)
/// modulus, breaking ties toward the lowest index.
LinearFunctional supporting_functional(const BalancedDomain& domain, const ComplexVector& w);

/// sup{h_to(x) : h_from(x) <= 1}, i.e. the smallest c with from ⊂ c * to.
/// Available in closed form when neither domain is a custom gauge.
std::optional<double> norm_ratio(const BalancedDomain& from, const BalancedDomain& to);

}  // namespace squeezekit
