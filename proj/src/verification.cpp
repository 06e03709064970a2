#include "squeezekit/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "squeezekit/automorphisms.hpp"
#include "squeezekit/errors.hpp"
#include "squeezekit/geometry.hpp"
#include "squeezekit/metrics.hpp"
#include "squeezekit/minkowski.hpp"
#include "squeezekit/scan.hpp"
#include "squeezekit/schwarz.hpp"
#include "squeezekit/squeezing.hpp"

namespace squeezekit {

namespace {

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  /// Counts one check; any positive `excess` is a failure of that size.
  void record(double excess) {
    ++result_.checks;
    if (excess > 0.0 || std::isnan(excess)) {
      ++result_.failures;
      result_.worst = std::isnan(excess) ? HUGE_VAL : std::max(result_.worst, excess);
    }
  }
  void expect(bool ok) { record(ok ? 0.0 : 1.0); }
  void note(std::string detail) { result_.detail = std::move(detail); }
  PropertyResult done() && { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::vector<BalancedDomain> gauge_domains() {
  std::vector<BalancedDomain> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    out.push_back(BalancedDomain::polydisc(n));
    out.push_back(BalancedDomain::ball(n));
    out.push_back(BalancedDomain::pnorm_ball(n, 1.5));
    out.push_back(BalancedDomain::pnorm_ball(n, 3.0));
    std::vector<double> radii;
    for (std::size_t i = 0; i < n; ++i) radii.push_back(0.5 + 0.25 * static_cast<double>(i));
    out.push_back(BalancedDomain::weighted_polydisc(radii));
  }
  return out;
}

std::vector<BalancedDomain> models(std::size_t max_dim) {
  std::vector<BalancedDomain> out;
  for (std::size_t n = 1; n <= max_dim; ++n) {
    out.push_back(BalancedDomain::polydisc(n));
    out.push_back(BalancedDomain::ball(n));
  }
  return out;
}

/// A point with gauge uniform in [0, max_gauge).
ComplexVector random_point(const BalancedDomain& domain, Rng& rng, double max_gauge) {
  for (;;) {
    const ComplexVector g = rng.gaussian_vector(domain.dim());
    const double h = gauge_value(domain, g);
    if (h > 0.0) return g * (max_gauge * rng.uniform() / h);
  }
}

BalancedDomain oracle_copy(const BalancedDomain& model) {
  CustomGauge g{model.dim(), [model](const ComplexVector& z) { return contains(model, z); }, coercivity(model),
                lipschitz(model), "oracle-" + model.name()};
  return BalancedDomain::custom(std::move(g));
}

PropertyResult gauge_homogeneity(const SuiteOptions& o) {
  Property p("gauge-homogeneity");
  Rng rng(o.seed.substream(1));
  for (const auto& d : gauge_domains())
    for (std::size_t k = 0; k < o.samples; ++k) {
      const ComplexVector z = rng.gaussian_vector(d.dim());
      const Complex lambda = rng.uniform_disc(3.0);
      const double h = gauge_value(d, z);
      p.record(std::abs(gauge_value(d, z * lambda) - std::abs(lambda) * h) - 1e-9 * (1.0 + h));
    }
  return std::move(p).done();
}

PropertyResult gauge_triangle(const SuiteOptions& o) {
  Property p("gauge-triangle");
  Rng rng(o.seed.substream(2));
  for (const auto& d : gauge_domains())
    for (std::size_t k = 0; k < o.samples; ++k) {
      const ComplexVector x = rng.gaussian_vector(d.dim());
      const ComplexVector y = rng.gaussian_vector(d.dim());
      p.record(gauge_value(d, x + y) - gauge_value(d, x) - gauge_value(d, y) - 1e-9);
    }
  return std::move(p).done();
}

PropertyResult membership_consistency(const SuiteOptions& o) {
  Property p("gauge-membership-consistency");
  Rng rng(o.seed.substream(3));
  const double tol = 1e-12;
  for (const auto& d : gauge_domains())
    for (std::size_t k = 0; k < o.samples; ++k) {
      const ComplexVector z = random_point(d, rng, 2.0);
      const double h = gauge_value(d, z);
      if (h < 1.0 - 10 * tol) p.expect(contains(d, z));
      if (h > 1.0 + 10 * tol) p.expect(!contains(d, z));
    }
  return std::move(p).done();
}

PropertyResult duality_certificate(const SuiteOptions& o) {
  Property p("duality-certificate");
  Rng rng(o.seed.substream(4));
  for (const auto& d : gauge_domains())
    for (std::size_t k = 0; k < o.samples; ++k) {
      const LinearFunctional l{rng.gaussian_vector(d.dim())};
      const ComplexVector w = rng.gaussian_vector(d.dim());
      p.record(std::abs(l(w)) - dual_norm(d, l).value * gauge_value(d, w) - 1e-9);
    }
  return std::move(p).done();
}

PropertyResult supporting_exactness(const SuiteOptions& o) {
  Property p("supporting-functional-exactness");
  Rng rng(o.seed.substream(5));
  for (const auto& d : gauge_domains())
    for (std::size_t k = 0; k < o.samples; ++k) {
      const ComplexVector w = rng.gaussian_vector(d.dim());
      const LinearFunctional l = supporting_functional(d, w);
      p.record(std::abs(dual_norm(d, l).value - 1.0) - 1e-9);
      p.record(std::abs(l(w) - gauge_value(d, w)) - 1e-12 * std::max(1.0, gauge_value(d, w)));
    }
  return std::move(p).done();
}

PropertyResult sublevel_law(const SuiteOptions& o) {
  Property p("sublevel-law");
  Rng rng(o.seed.substream(6));
  for (const auto& d : gauge_domains())
    for (std::size_t k = 0; k < o.samples; ++k) {
      const double r = 0.01 + 0.99 * rng.uniform();
      const ComplexVector z = random_point(d, rng, 1.0);
      p.record(std::abs(gauge_value(sublevel(d, r), z) * r - gauge_value(d, z)) - 1e-12);
    }
  return std::move(p).done();
}

PropertyResult bisection_matches_closed_form(const SuiteOptions& o) {
  Property p("bisection-vs-closed-form");
  Rng rng(o.seed.substream(7));
  const std::size_t draws = std::max<std::size_t>(1, o.samples / 10);
  for (const auto& d : gauge_domains()) {
    const BalancedDomain oracle = oracle_copy(d);
    for (std::size_t k = 0; k < draws; ++k) {
      const ComplexVector z = rng.gaussian_vector(d.dim());
      p.record(std::abs(gauge(oracle, z).value - gauge_value(d, z)) - 1e-10);
    }
  }
  return std::move(p).done();
}

PropertyResult reinhardt_rotation(const SuiteOptions& o) {
  Property p("reinhardt-rotation-invariance");
  Rng rng(o.seed.substream(8));
  const ReinhardtDomain d(2, {{{1.0, 1.0}, 0.25}, {{2.0, 0.0}, 0.81}}, 1.0);
  for (std::size_t k = 0; k < o.samples; ++k) {
    ComplexVector z({rng.uniform_disc(1.0), rng.uniform_disc(1.0)});
    ComplexVector rotated = z;
    for (std::size_t i = 0; i < rotated.dim(); ++i)
      rotated[i] *= std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    p.expect(contains(d, z) == contains(d, rotated));
  }
  return std::move(p).done();
}

PropertyResult balancedness(const SuiteOptions& o) {
  Property p("balancedness");
  Rng rng(o.seed.substream(9));
  for (const auto& d : gauge_domains())
    for (std::size_t k = 0; k < o.samples; ++k) {
      const ComplexVector z = random_point(d, rng, 1.0);
      p.expect(contains(d, z * rng.uniform_disc(1.0)));
    }
  return std::move(p).done();
}

PropertyResult alpha_monotone(const SuiteOptions&) {
  Property p("alpha-monotonicity");
  for (int hi = 0; hi < 10; ++hi) {
    const double h = 0.1 * hi;
    for (int k = 0; k + 1 < 100; ++k) p.expect(alpha(k / 100.0, h) < alpha((k + 1) / 100.0, h));
  }
  for (int bi = 0; bi < 10; ++bi) {
    const double beta = 0.1 * bi;
    auto f = [&](double x) { return (beta + x) / (1.0 + beta * x); };
    for (int k = 0; k + 1 < 100; ++k) p.expect(f(k / 100.0) < f((k + 1) / 100.0));
  }
  return std::move(p).done();
}

PropertyResult automorphism_roundtrip(const SuiteOptions& o) {
  Property p("automorphism-roundtrip");
  Rng rng(o.seed.substream(10));
  for (const auto& d : models(3)) {
    for (int k = 0; k < 5; ++k) {
      const Automorphism f = random_automorphism(d, rng, 0.9);
      p.expect(gauge_value(d, apply(f, ComplexVector::zeros(d.dim()))) < 1.0);
      const auto report = verify_automorphism(d, f, o.samples / 5 + 1, o.seed.substream(100 + k));
      p.record(report.max_roundtrip_error - 1e-12);
      p.record(report.max_gauge_excess);
    }
    for (std::size_t k = 0; k < o.samples / 10 + 1; ++k) {
      const ComplexVector a = random_point(d, rng, 0.95);
      const Automorphism t = transport_to_origin(d, a);
      p.record(apply(t, a).norm2() - 1e-12);
      const ComplexVector z = random_point(d, rng, 0.95);
      p.record(distance2(apply(inverse(t), apply(t, z)), z) - 1e-12);
    }
  }
  return std::move(p).done();
}

PropertyResult closed_form_sandwich(const SuiteOptions& o) {
  Property p("closed-form-sandwich");
  Rng rng(o.seed.substream(11));
  LempertOptions opts;
  opts.polish = false;
  std::vector<BalancedDomain> domains;
  for (std::size_t n = 1; n <= 4; ++n)
    for (double q : {1.5, 2.0, 3.0}) domains.push_back(BalancedDomain::pnorm_ball(n, q));
  for (const auto& m : models(4)) domains.push_back(m);
  const std::size_t draws = std::max<std::size_t>(1, o.samples / 10);
  for (const auto& d : domains) {
    const ComplexVector origin = ComplexVector::zeros(d.dim());
    for (std::size_t k = 0; k < draws; ++k) {
      const ComplexVector z = random_point(d, rng, 0.99);
      const double exact = kobayashi_balanced(d, z).value;
      const double lower = kobayashi_lower_functional(d, z).value;
      const double upper = lempert_upper(d, origin, z, opts).value;
      p.record(lower - exact - 1e-12);
      p.record(exact - upper - 1e-12);
      p.record(upper - lower - 1e-6);
    }
  }
  return std::move(p).done();
}

PropertyResult homogeneous_triangle(const SuiteOptions& o) {
  Property p("kobayashi-triangle");
  Rng rng(o.seed.substream(12));
  for (const auto& d : models(3))
    for (std::size_t k = 0; k < o.samples / 6 + 1; ++k) {
      const ComplexVector x = random_point(d, rng, 0.9);
      const ComplexVector y = random_point(d, rng, 0.9);
      const ComplexVector z = random_point(d, rng, 0.9);
      p.record(kobayashi_homogeneous(d, x, z).value - kobayashi_homogeneous(d, x, y).value -
               kobayashi_homogeneous(d, y, z).value - 1e-9);
    }
  return std::move(p).done();
}

PropertyResult inclusion_monotone(const SuiteOptions&) {
  Property p("inclusion-monotonicity");
  for (int si = 1; si < 20; ++si) {
    const double s = si / 20.0;
    for (int hi = 0; hi < 20; ++hi) {
      const double h = s * hi / 20.0;
      p.record(std::atanh(h) - std::atanh(h / s));
    }
  }
  return std::move(p).done();
}

PropertyResult schwarz_inclusion(const SuiteOptions& o) {
  Property p("schwarz-inclusion");
  Rng rng(o.seed.substream(13));
  std::uint64_t stream = 0;
  for (const auto& d : models(2))
    for (int k = 0; k < 2; ++k) {
      const Automorphism f = random_automorphism(d, rng, 0.7);
      const double h0 = gauge_value(d, apply(f, ComplexVector::zeros(d.dim())));
      for (int si = 0; si < 3; ++si) {
        const double lo = h0 + 0.05;
        const double s = lo + (0.98 - lo) * (si + 0.5) / 3.0;
        InclusionOptions opts;
        opts.samples = o.inclusion_samples;
        opts.seed = o.seed.substream(1000 + stream++);
        const auto report = verify_inclusion(d, f, s, opts);
        p.record(static_cast<double>(report.violations));
      }
    }
  return std::move(p).done();
}

PropertyResult pick_functional(const SuiteOptions& o) {
  Property p("schwarz-pick-functional");
  Rng rng(o.seed.substream(14));
  for (const auto& d : models(3)) {
    for (std::size_t k = 0; k < o.samples / 6 + 1; ++k) {
      const Automorphism f = random_automorphism(d, rng, 0.8);
      const LinearFunctional l{rng.gaussian_vector(d.dim())};
      const ComplexVector y = random_point(d, rng, 0.999);
      const auto c = functional_pick_check(d, f, l, y, rng.uniform_disc(1.0));
      p.record(c.lhs - c.rhs - 1e-9);
    }
  }
  return std::move(p).done();
}

PropertyResult sharpness(const SuiteOptions& o) {
  Property p("sharpness-probe");
  Rng rng(o.seed.substream(15));
  for (int k = 0; k < 100; ++k) {
    const double h = 0.95 * rng.uniform();
    const double s = h + (1.0 - h) * (0.01 + 0.98 * rng.uniform());
    p.record(std::abs(sharpness_probe(h, s).image_gauge - s) - 1e-12);
  }
  return std::move(p).done();
}

PropertyResult radius_identity(const SuiteOptions& o) {
  Property p("radius-identity");
  Rng rng(o.seed.substream(16));
  for (std::size_t k = 0; k < 10 * o.samples; ++k) {
    const double s = rng.uniform();
    const double b = s * rng.uniform();
    if (!(b < s)) continue;
    const auto r = radius_chain(s, b, 0.0, 0.0);
    p.record(std::abs(r.identity_lhs - r.identity_rhs) - 1e-12);
  }
  return std::move(p).done();
}

PropertyResult radius_bounds(const SuiteOptions& o) {
  Property p("radius-chain");
  Rng rng(o.seed.substream(17));
  for (std::size_t k = 0; k < 10 * o.samples; ++k) {
    const double c = rng.uniform(-2.0, 1.0);
    const double e2c = std::exp(2.0 * c);
    const double x = (2.0 / 9.0) * rng.uniform();
    const double eps = x / e2c;
    // b >= 0 forces d^2 < e^{2c}
    const double d = std::min(0.5, std::sqrt(e2c)) * (1e-6 + (1.0 - 1e-6) * rng.uniform());
    const double s = 1.0 - eps * d * d;
    const double b = std::max(0.0, 1.0 - d * d / e2c) * rng.uniform();
    if (!(b < s) || !(s <= 1.0)) continue;
    const auto r = radius_chain(s, b, c, eps);
    p.expect(r.lower_bound_ok && r.sqrt_vs_linear_ok && r.gate_ok && r.bound_route_ok);
  }
  for (int k = 1; k < 1000; ++k) p.expect(sqrt_step_holds((2.0 / 9.0) * k / 1000.0));
  // past the gate the bound-only route must fail somewhere
  p.expect(!sqrt_step_holds(0.24));
  p.note("sqrt(1 - 4x) > 1 - 3x fails at x = 0.24 > 2/9");
  return std::move(p).done();
}

PropertyResult growth(const SuiteOptions&) {
  Property p("boundary-growth");
  const auto poly = boundary_growth_scan(BalancedDomain::polydisc(2), ComplexVector({1.0, 0.5}), 15);
  p.record(std::abs(poly.back().compensated_half - 0.5 * std::log(2.0)) - 1e-3);
  const ComplexVector u = ComplexVector({1.0, 0.5}) * (1.0 / std::sqrt(1.25));
  for (const auto& row : boundary_growth_scan(BalancedDomain::ball(2), u, 15))
    p.record(std::abs(row.compensated_half) - 1.0);
  return std::move(p).done();
}

PropertyResult quadrature(const SuiteOptions&) {
  Property p("curve-quadrature");
  const BalancedDomain d = BalancedDomain::polydisc(2);
  const ComplexVector end({0.9, 0.45});
  const std::vector<ComplexVector> path{ComplexVector::zeros(2), end};
  InfinitesimalOptions opts;
  opts.family = DiscFamily::transported;
  const double exact = kobayashi_balanced(d, end).value;
  const auto fine = curve_length_upper(d, path, 2048, opts);
  p.record(std::abs(fine.value - exact) - 1e-4);
  const auto coarse = curve_length_upper(d, path, 65, opts);
  const double ratio = (coarse.value - exact) / (coarse.refined_value - exact);
  p.record(std::abs(ratio - 4.0) - 1.2);
  return std::move(p).done();
}

PropertyResult squeeze_models(const SuiteOptions& o) {
  Property p("squeeze-model-exactness");
  Rng rng(o.seed.substream(18));
  for (const auto& d : models(3)) {
    const auto family = transport_family(d, d);
    for (int k = 0; k < 20; ++k) {
      const ComplexVector z = random_point(d, rng, 0.99);
      p.record(std::abs(squeeze_lower_bound(d, d, z, family(z)).radius - 1.0));
    }
  }
  return std::move(p).done();
}

PropertyResult squeeze_certificates(const SuiteOptions& o) {
  Property p("squeeze-containment");
  const BalancedDomain poly = BalancedDomain::polydisc(2);
  const BalancedDomain ball = BalancedDomain::ball(2);
  const ComplexVector origin = ComplexVector::zeros(2);
  const double c = 1.0 / std::sqrt(2.0);
  const auto s = squeeze_lower_bound(poly, ball, origin, make_embedding(IdentityScale{c}, poly, ball, origin));
  const auto t = squeeze_lower_bound(ball, poly, origin, make_embedding(IdentityScale{1.0}, ball, poly, origin));
  for (const auto* r : {&s, &t}) {
    p.record(std::abs(r->radius - c) - 1e-12);
    const ImageRegion image = image_of(r->embedding);
    p.record(static_cast<double>(containment_failures(r->embedding.target, image, r->radius - 1e-9, 10000,
                                                      o.seed.substream(19))));
  }
  return std::move(p).done();
}

PropertyResult self_scan(const SuiteOptions&) {
  Property p("self-scan");
  const BalancedDomain d = BalancedDomain::polydisc(2);
  const auto result = run_scan(d, d, ray_sequence(ComplexVector({1.0, 0.0}), 12), transport_family(d, d));
  p.expect(result.verdict == "theorem-chain-verified");
  for (const auto& row : result.rows) p.record(row.eps);
  return std::move(p).done();
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const SuiteOptions& options) {
  if (options.samples == 0 || options.inclusion_samples == 0)
    throw ArgumentError("run_property_suite: sample counts must be positive");
  using Runner = PropertyResult (*)(const SuiteOptions&);
  struct Entry {
    const char* name;
    Runner run;
  };
  const Entry entries[] = {
      {"gauge-homogeneity", gauge_homogeneity},
      {"gauge-triangle", gauge_triangle},
      {"gauge-membership-consistency", membership_consistency},
      {"duality-certificate", duality_certificate},
      {"supporting-functional-exactness", supporting_exactness},
      {"sublevel-law", sublevel_law},
      {"bisection-vs-closed-form", bisection_matches_closed_form},
      {"reinhardt-rotation-invariance", reinhardt_rotation},
      {"balancedness", balancedness},
      {"alpha-monotonicity", alpha_monotone},
      {"automorphism-roundtrip", automorphism_roundtrip},
      {"closed-form-sandwich", closed_form_sandwich},
      {"kobayashi-triangle", homogeneous_triangle},
      {"inclusion-monotonicity", inclusion_monotone},
      {"schwarz-inclusion", schwarz_inclusion},
      {"schwarz-pick-functional", pick_functional},
      {"sharpness-probe", sharpness},
      {"radius-identity", radius_identity},
      {"radius-chain", radius_bounds},
      {"boundary-growth", growth},
      {"curve-quadrature", quadrature},
      {"squeeze-model-exactness", squeeze_models},
      {"squeeze-containment", squeeze_certificates},
      {"self-scan", self_scan}};
  std::vector<PropertyResult> out;
  for (const Entry& e : entries) {
    try {
      out.push_back(e.run(options));
    } catch (const Error& err) {
      PropertyResult r;
      r.name = e.name;
      r.checks = 1;
      r.failures = 1;
      r.detail = std::string("error: ") + err.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace squeezekit
