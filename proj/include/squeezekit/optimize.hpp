#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace squeezekit {

struct NelderMeadOptions {
  std::size_t max_evaluations = 2000;
  /// Stop once the simplex values spread by less than this.
  double f_tolerance = 1e-12;
  /// ... and the simplex diameter (max-norm) is below this.
  double x_tolerance = 1e-10;
  double initial_step = 0.1;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  std::size_t evaluations;
  bool converged;
};

/// Derivative-free minimization with dimension-adaptive Nelder-Mead
/// coefficients, which keep the method usable in higher dimensions.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace squeezekit
