#include "squeezekit/schwarz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "squeezekit/errors.hpp"

namespace squeezekit {

namespace {

constexpr std::size_t kBatch = 8192;

struct BatchResult {
  std::size_t violations = 0;
  double max_excess = -HUGE_VAL;
};

}  // namespace

InclusionReport verify_inclusion(const BalancedDomain& domain, const Automorphism& f, double s,
                                 const InclusionOptions& options) {
  if (options.samples == 0) throw ArgumentError("verify_inclusion: samples must be at least 1");
  if (!(options.tolerance >= 0.0)) throw ArgumentError("verify_inclusion: tolerance must be nonnegative");
  if (!acts_on(f, domain))
    throw ArgumentError("verify_inclusion: " + f.kind() + " automorphism does not act on " + domain.name());
  if (!(s < 1.0)) throw PreconditionError("verify_inclusion: s must be below 1");

  const double h0 = gauge_value(domain, apply(f, ComplexVector::zeros(domain.dim())));
  if (!(s > h0))
    throw PreconditionError("verify_inclusion: s = " + std::to_string(s) + " does not exceed h(F(0)) = " +
                            std::to_string(h0));
  const double a = alpha(s, h0);

  const std::size_t batches = (options.samples + kBatch - 1) / kBatch;
  std::vector<BatchResult> results(batches);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < batches; b = next++) {
      const std::size_t count = std::min(kBatch, options.samples - b * kBatch);
      BatchResult r;
      for (const auto& z : sample_interior(domain, count, options.seed.substream(b))) {
        const double excess = gauge_value(domain, apply(f, z * a)) - s;
        r.max_excess = std::max(r.max_excess, excess);
        if (excess > options.tolerance) ++r.violations;
      }
      results[b] = r;
    }
  };
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, batches);
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  InclusionReport report{domain, f, s, h0, a, options.samples, 0, -HUGE_VAL, options.tolerance, options.seed};
  for (const auto& r : results) {
    report.violations += r.violations;
    report.max_excess = std::max(report.max_excess, r.max_excess);
  }
  return report;
}

SharpnessProbe sharpness_probe(double h_a, double s) {
  if (!(h_a >= 0.0 && h_a < 1.0)) throw ArgumentError("sharpness_probe: h_a must lie in [0, 1)");
  if (!(s > h_a && s < 1.0)) throw ArgumentError("sharpness_probe: s must lie in (h_a, 1)");
  const double z = alpha(s, h_a);
  return {z, std::abs((z + h_a) / (1.0 + h_a * z))};
}

PickCheck functional_pick_check(const BalancedDomain& domain, const Automorphism& f,
                                const LinearFunctional& functional, const ComplexVector& y,
                                Complex lambda) {
  if (!(std::abs(lambda) < 1.0)) throw ArgumentError("functional_pick_check: |lambda| must be below 1");
  if (!(gauge_value(domain, y) < 1.0)) throw ArgumentError("functional_pick_check: y must lie in the domain");
  const DualNorm norm = dual_norm(domain, functional);
  if (norm.method != DualNormMethod::closed_form || !(norm.value > 0.0))
    throw UnsupportedVariant("functional_pick_check: needs a nonzero closed-form dual norm");
  const double h0 = gauge_value(domain, apply(f, ComplexVector::zeros(domain.dim())));
  const double r = std::abs(lambda);
  return {std::abs(functional(apply(f, y * lambda))) / norm.value, (r + h0) / (1.0 + h0 * r)};
}

}  // namespace squeezekit
