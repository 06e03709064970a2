#pragma once

// Randomized property suite behind `squeezekit verify-all`.

#include <cstddef>
#include <string>
#include <vector>

#include "squeezekit/rng.hpp"

namespace squeezekit {

struct PropertyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Largest violation observed (in the property's own units); 0 when none.
  double worst = 0.0;
  std::string detail;

  bool passed() const { return failures == 0 && checks > 0; }
};

struct SuiteOptions {
  /// Random draws per property.
  std::size_t samples = 1000;
  /// Monte-Carlo samples per Schwarz inclusion triple.
  std::size_t inclusion_samples = 20000;
  RngSeed seed{};
};

std::vector<PropertyResult> run_property_suite(const SuiteOptions& options = {});

}  // namespace squeezekit
