#include "squeezekit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "squeezekit/automorphisms.hpp"
#include "squeezekit/errors.hpp"
#include "squeezekit/optimize.hpp"

namespace squeezekit {

namespace {

constexpr double kGaugeGuard = 1.0 - 1e-12;
constexpr double kInfeasible = 1e6;

void require_interior(const BalancedDomain& domain, const ComplexVector& z, const char* what) {
  require_dim(z, domain.dim(), what);
  if (!contains(domain, z))
    throw DomainError(std::string(what) + ": point " + to_string(z) + " is outside " + domain.name());
}

ComplexVector horner(const std::vector<ComplexVector>& coeffs, Complex zeta) {
  ComplexVector out = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    out *= zeta;
    out += coeffs[k];
  }
  return out;
}

Complex unit_root(std::size_t k, std::size_t grid) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid));
}

/// Disc parameters: interpolation nodes plus the free coefficients c_2..c_d.
struct DiscParams {
  Complex zeta0;
  Complex zeta1;
  std::vector<ComplexVector> higher;
};

std::vector<double> flatten(const DiscParams& p) {
  std::vector<double> x{p.zeta0.real(), p.zeta0.imag(), p.zeta1.real(), p.zeta1.imag()};
  for (const auto& c : p.higher)
    for (const auto& e : c) {
      x.push_back(e.real());
      x.push_back(e.imag());
    }
  return x;
}

DiscParams unflatten(std::span<const double> x, std::size_t dim, std::size_t degree) {
  DiscParams p{{x[0], x[1]}, {x[2], x[3]}, {}};
  std::size_t at = 4;
  for (std::size_t k = 2; k <= degree; ++k) {
    std::vector<Complex> c(dim);
    for (auto& e : c) {
      e = {x[at], x[at + 1]};
      at += 2;
    }
    p.higher.emplace_back(std::move(c));
  }
  return p;
}

/// Solves for c_0, c_1 so that the polynomial interpolates z at zeta0 and w at zeta1.
std::vector<ComplexVector> interpolating_coefficients(const ComplexVector& z, const ComplexVector& w,
                                                      const DiscParams& p) {
  ComplexVector rz = z;
  ComplexVector rw = w;
  Complex p0 = p.zeta0 * p.zeta0;
  Complex p1 = p.zeta1 * p.zeta1;
  for (const auto& c : p.higher) {
    rz -= c * p0;
    rw -= c * p1;
    p0 *= p.zeta0;
    p1 *= p.zeta1;
  }
  ComplexVector c1 = (rw - rz) / (p.zeta1 - p.zeta0);
  ComplexVector c0 = rz - c1 * p.zeta0;
  std::vector<ComplexVector> coeffs{std::move(c0), std::move(c1)};
  coeffs.insert(coeffs.end(), p.higher.begin(), p.higher.end());
  return coeffs;
}

struct RadiusResult {
  bool feasible;
  double radius;
  double node_gauge;
};

/// Largest R with max gauge of psi on |zeta| = R below `target`, given that
/// the nodes must satisfy |zeta| < R. Relies on the circle maximum of a
/// convex gauge composed with a holomorphic map being nondecreasing in R.
RadiusResult largest_radius(const BalancedDomain& domain, const std::vector<ComplexVector>& coeffs,
                            double node_radius, double target, std::size_t grid) {
  if (coeffs.size() == 2 && coeffs[0].is_zero()) {
    const double g = gauge_value(domain, coeffs[1]);
    if (g == 0.0) return {true, HUGE_VAL, 0.0};
    const double r = target / g;
    return {r > node_radius, r, node_radius * g};
  }
  auto psi = [&](Complex zeta) { return horner(coeffs, zeta); };
  double lo = node_radius * (1.0 + 1e-12);
  const double at_nodes = max_gauge_on_circle(domain, psi, lo, grid);
  if (!(at_nodes < target)) return {false, 0.0, at_nodes};
  double hi = 2.0 * lo;
  int grow = 0;
  while (max_gauge_on_circle(domain, psi, hi, grid) < target) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 200) return {true, lo, at_nodes};
  }
  for (int it = 0; it < 64 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (max_gauge_on_circle(domain, psi, mid, grid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return {true, lo, at_nodes};
}

double search_objective(const BalancedDomain& domain, const ComplexVector& z, const ComplexVector& w,
                        std::span<const double> x, const LempertOptions& options) {
  const DiscParams p = unflatten(x, domain.dim(), options.degree);
  if (std::abs(p.zeta0 - p.zeta1) < 1e-300) return 2.0 * kInfeasible;
  const auto coeffs = interpolating_coefficients(z, w, p);
  const double node_radius = std::max(std::abs(p.zeta0), std::abs(p.zeta1));
  const auto r = largest_radius(domain, coeffs, node_radius, 1.0 - options.margin, options.search_grid);
  if (!r.feasible) return kInfeasible + r.node_gauge;
  return poincare(p.zeta0 / r.radius, p.zeta1 / r.radius);
}

std::optional<AnalyticDiscPoly> certify(const BalancedDomain& domain, const ComplexVector& z,
                                        const ComplexVector& w, std::span<const double> x,
                                        const LempertOptions& options) {
  const DiscParams p = unflatten(x, domain.dim(), options.degree);
  if (std::abs(p.zeta0 - p.zeta1) < 1e-300) return std::nullopt;
  auto coeffs = interpolating_coefficients(z, w, p);
  const double node_radius = std::max(std::abs(p.zeta0), std::abs(p.zeta1));
  // the radius is fixed on a grid 8x finer than the reported one
  const auto r = largest_radius(domain, coeffs, node_radius, 1.0 - options.margin, 8 * options.grid);
  if (!r.feasible || !std::isfinite(r.radius)) return std::nullopt;
  double power = 1.0;
  for (auto& c : coeffs) {
    c *= power;
    power *= r.radius;
  }
  AnalyticDiscPoly disc{std::move(coeffs), p.zeta0 / r.radius, p.zeta1 / r.radius, 0.0, options.grid};
  disc.margin = 1.0 - max_gauge_on_circle(domain, [&](Complex zeta) { return disc(zeta); }, 1.0, options.grid);
  if (!(disc.margin > 0.0) || !(std::abs(disc.zeta0) < 1.0) || !(std::abs(disc.zeta1) < 1.0))
    return std::nullopt;
  return disc;
}

std::vector<std::vector<double>> initial_discs(const ComplexVector& z, const LempertOptions& options) {
  const std::size_t n = z.dim();
  auto affine = [&](Complex zeta0, Complex zeta1) {
    DiscParams p{zeta0, zeta1, {}};
    for (std::size_t k = 2; k <= options.degree; ++k) p.higher.push_back(ComplexVector::zeros(n));
    return flatten(p);
  };
  std::vector<std::vector<double>> out{affine(0.0, 1.0), affine(1.0, 0.0), affine(-0.5, 0.5)};
  for (const auto& disc : options.warm_starts) {
    if (disc.coefficients.empty() || disc.degree() > options.degree || disc.coefficients[0].dim() != n)
      continue;
    DiscParams p{disc.zeta0, disc.zeta1, {}};
    for (std::size_t k = 2; k <= options.degree; ++k)
      p.higher.push_back(k <= disc.degree() ? disc.coefficients[k] : ComplexVector::zeros(n));
    out.push_back(flatten(p));
  }
  return out;
}

}  // namespace

ComplexVector AnalyticDiscPoly::operator()(Complex zeta) const {
  if (coefficients.empty()) throw ArgumentError("AnalyticDiscPoly: no coefficients");
  return horner(coefficients, zeta);
}

double max_gauge_on_circle(const BalancedDomain& domain,
                           const std::function<ComplexVector(Complex)>& phi, double radius,
                           std::size_t grid) {
  double m = 0.0;
  for (std::size_t k = 0; k < grid; ++k) m = std::max(m, gauge_value(domain, phi(radius * unit_root(k, grid))));
  return m;
}

DiscCheck check_disc(const BalancedDomain& domain, const std::function<ComplexVector(Complex)>& phi,
                     Complex zeta0, Complex zeta1, const ComplexVector& z, const ComplexVector& w,
                     std::size_t grid) {
  const double margin = 1.0 - max_gauge_on_circle(domain, phi, 1.0, grid);
  const double err = std::max(distance2(phi(zeta0), z), distance2(phi(zeta1), w));
  return {margin, err};
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    case BoundKind::exact: return "exact";
  }
  return "unknown";
}

double poincare(Complex zeta0, Complex zeta1) {
  if (!(std::abs(zeta0) < 1.0) || !(std::abs(zeta1) < 1.0))
    throw ArgumentError("poincare: arguments must lie in the open unit disc");
  const double m = std::abs(zeta0 - zeta1) / std::abs(1.0 - std::conj(zeta0) * zeta1);
  return std::atanh(m);
}

MetricBound kobayashi_balanced(const BalancedDomain& domain, const ComplexVector& z) {
  require_interior(domain, z, "kobayashi_balanced");
  const double h = gauge_value(domain, z);
  if (h >= kGaugeGuard)
    throw DomainError("kobayashi_balanced: gauge within 1e-12 of the boundary");
  return {std::atanh(h), BoundKind::exact, std::string("balanced-closed-form")};
}

MetricBound kobayashi_homogeneous(const BalancedDomain& domain, const ComplexVector& z,
                                  const ComplexVector& w) {
  require_interior(domain, z, "kobayashi_homogeneous");
  const Automorphism f = transport_to_origin(domain, w);
  MetricBound b = kobayashi_balanced(domain, apply(f, z));
  b.certificate = std::string("transported-closed-form");
  return b;
}

MetricBound lempert_upper(const BalancedDomain& domain, const ComplexVector& z, const ComplexVector& w,
                          const LempertOptions& options) {
  require_interior(domain, z, "lempert_upper");
  require_interior(domain, w, "lempert_upper");
  if (options.degree < 1) throw ArgumentError("lempert_upper: degree must be at least 1");
  if (options.grid < 8 || options.search_grid < 8) throw ArgumentError("lempert_upper: grid too coarse");
  if (z == w) {
    std::vector<ComplexVector> coeffs{z};
    for (std::size_t k = 1; k <= options.degree; ++k) coeffs.push_back(ComplexVector::zeros(z.dim()));
    AnalyticDiscPoly disc{std::move(coeffs), 0.0, 0.0, 1.0 - gauge_value(domain, z), options.grid};
    return {0.0, BoundKind::upper, disc};
  }

  auto objective = [&](std::span<const double> x) { return search_objective(domain, z, w, x, options); };

  const auto inits = initial_discs(z, options);
  std::vector<double> best_init = inits.front();
  double best_init_value = objective(best_init);
  for (std::size_t i = 1; i < inits.size(); ++i) {
    const double v = objective(inits[i]);
    if (v < best_init_value) {
      best_init_value = v;
      best_init = inits[i];
    }
  }

  std::vector<double> best = best_init;
  double best_value = best_init_value;
  if (options.polish && options.max_evaluations > 0) {
    NelderMeadOptions nm;
    nm.max_evaluations = options.max_evaluations;
    nm.f_tolerance = options.tolerance;
    nm.x_tolerance = 1e-10;
    nm.initial_step = 0.05;
    auto run = [&](std::vector<double> start) {
      const auto r = nelder_mead(objective, std::move(start), nm);
      if (r.value < best_value) {
        best_value = r.value;
        best = r.x;
      }
    };
    run(best_init);
    Rng rng(options.seed);
    for (std::size_t k = 0; k < options.restarts; ++k) {
      std::vector<double> start = best;
      for (double& v : start) v += 0.1 * rng.normal();
      run(std::move(start));
    }
  }

  std::optional<AnalyticDiscPoly> disc = certify(domain, z, w, best, options);
  if (best != best_init) {
    auto fallback = certify(domain, z, w, best_init, options);
    if (fallback && (!disc || poincare(fallback->zeta0, fallback->zeta1) < poincare(disc->zeta0, disc->zeta1)))
      disc = std::move(fallback);
  }
  if (!disc) {
    for (const auto& x : inits) {
      auto d = certify(domain, z, w, x, options);
      if (d && (!disc || poincare(d->zeta0, d->zeta1) < poincare(disc->zeta0, disc->zeta1))) disc = std::move(d);
    }
  }
  if (!disc) throw OptimizationFailure("lempert_upper: no admissible disc found");
  const double value = poincare(disc->zeta0, disc->zeta1);
  return {value, BoundKind::upper, std::move(*disc)};
}

MetricBound kobayashi_upper_chain(const BalancedDomain& domain, const ComplexVector& z,
                                  const ComplexVector& w, std::size_t chain_length,
                                  const ChainOptions& options) {
  if (chain_length < 1) throw ArgumentError("kobayashi_upper_chain: chain length must be at least 1");
  MetricBound direct = lempert_upper(domain, z, w, options.lempert);
  if (chain_length == 1 || z == w) {
    std::vector<AnalyticDiscPoly> chain{std::get<AnalyticDiscPoly>(direct.certificate)};
    return {direct.value, BoundKind::upper, std::move(chain)};
  }

  const std::size_t k = chain_length;
  const std::size_t n = z.dim();
  std::vector<ComplexVector> points;
  for (std::size_t i = 0; i <= k; ++i)
    points.push_back(z + (w - z) * (static_cast<double>(i) / static_cast<double>(k)));
  points.back() = w;

  // trial moves are scored by the unpolished initial discs; only the final chain is optimized
  LempertOptions search = options.lempert;
  search.max_evaluations = options.search_evaluations;
  search.restarts = 0;
  search.polish = options.polish_search;
  search.grid = search.search_grid;
  auto link = [&](const ComplexVector& a, const ComplexVector& b) {
    if (!contains(domain, a) || !contains(domain, b)) return HUGE_VAL;
    return lempert_upper(domain, a, b, search).value;
  };
  std::vector<double> links(k);
  for (std::size_t i = 0; i < k; ++i) links[i] = link(points[i], points[i + 1]);

  double step = options.initial_step;
  for (std::size_t sweep = 0; sweep < options.max_sweeps && step >= options.min_step; ++sweep) {
    bool improved = false;
    for (std::size_t i = 1; i < k; ++i) {
      for (std::size_t c = 0; c < 2 * n; ++c) {
        for (double sign : {1.0, -1.0}) {
          ComplexVector trial = points[i];
          trial[c / 2] += (c % 2 == 0) ? Complex(sign * step, 0.0) : Complex(0.0, sign * step);
          const double left = link(points[i - 1], trial);
          const double right = link(trial, points[i + 1]);
          if (left + right < links[i - 1] + links[i] - 1e-15) {
            points[i] = std::move(trial);
            links[i - 1] = left;
            links[i] = right;
            improved = true;
            break;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  std::vector<AnalyticDiscPoly> chain;
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    MetricBound b = lempert_upper(domain, points[i], points[i + 1], options.lempert);
    total += b.value;
    chain.push_back(std::get<AnalyticDiscPoly>(b.certificate));
  }
  if (direct.value <= total) {
    // degenerate chain z, ..., z, w reproduces the direct disc
    std::vector<AnalyticDiscPoly> degenerate;
    for (std::size_t i = 0; i + 1 < k; ++i)
      degenerate.push_back(std::get<AnalyticDiscPoly>(lempert_upper(domain, z, z, options.lempert).certificate));
    degenerate.push_back(std::get<AnalyticDiscPoly>(direct.certificate));
    return {direct.value, BoundKind::upper, std::move(degenerate)};
  }
  return {total, BoundKind::upper, std::move(chain)};
}

MetricBound kobayashi_lower_functional(const BalancedDomain& domain, const ComplexVector& z) {
  require_interior(domain, z, "kobayashi_lower_functional");
  if (z.is_zero()) return {0.0, BoundKind::exact, std::string("origin")};
  const LinearFunctional l = supporting_functional(domain, z);
  const double value = std::abs(l(z));
  if (value >= kGaugeGuard)
    throw DomainError("kobayashi_lower_functional: gauge within 1e-12 of the boundary");
  return {std::atanh(value), BoundKind::lower, l};
}

double infinitesimal_upper(const BalancedDomain& domain, const ComplexVector& z, const ComplexVector& v,
                           const InfinitesimalOptions& options) {
  require_interior(domain, z, "infinitesimal_upper");
  require_dim(v, domain.dim(), "infinitesimal_upper");
  if (v.is_zero()) return 0.0;

  if (options.family == DiscFamily::transported) {
    const Automorphism f = transport_to_origin(domain, z);
    return gauge_value(domain, differential(f, z, v));
  }

  auto disc = [&](Complex zeta) { return z + v * zeta; };
  // by the triangle inequality for the gauge this radius is always admissible
  double lo = (1.0 - gauge_value(domain, z)) / gauge_value(domain, v);
  double hi = 2.0 * lo;
  auto admissible = [&](double r) { return max_gauge_on_circle(domain, disc, r, options.grid) < 1.0; };
  int grow = 0;
  while (admissible(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 200) throw DomainError("infinitesimal_upper: domain appears unbounded along v");
  }
  for (int it = 0; it < 200 && hi - lo > options.relative_tolerance * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (admissible(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 1.0 / lo;
}

CurveLength curve_length_upper(const BalancedDomain& domain, const std::vector<ComplexVector>& path,
                               std::size_t quadrature_points, const InfinitesimalOptions& options) {
  if (quadrature_points < 2) throw ArgumentError("curve_length_upper: need at least 2 quadrature points");
  if (path.empty()) throw ArgumentError("curve_length_upper: empty path");
  for (const auto& p : path) require_interior(domain, p, "curve_length_upper");

  auto trapezoid = [&](std::size_t q) {
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      const ComplexVector d = path[s + 1] - path[s];
      const double h = 1.0 / static_cast<double>(q - 1);
      double sum = 0.0;
      for (std::size_t i = 0; i < q; ++i) {
        const double t = static_cast<double>(i) * h;
        const double weight = (i == 0 || i + 1 == q) ? 0.5 : 1.0;
        sum += weight * infinitesimal_upper(domain, path[s] + d * t, d, options);
      }
      total += h * sum;
    }
    return total;
  };

  const double coarse = trapezoid(quadrature_points);
  const double fine = trapezoid(2 * quadrature_points - 1);
  return {coarse, fine, fine - coarse, quadrature_points};
}

std::vector<GrowthRow> boundary_growth_scan(const BalancedDomain& domain, const ComplexVector& u, int J) {
  require_dim(u, domain.dim(), "boundary_growth_scan");
  if (J < 3) throw ArgumentError("boundary_growth_scan: J must be at least 3");
  if (std::abs(gauge_value(domain, u) - 1.0) > 1e-9)
    throw ArgumentError("boundary_growth_scan: direction must have gauge 1");
  std::vector<GrowthRow> rows;
  for (int j = 1; j <= J; ++j) {
    const ComplexVector zj = u * (1.0 - std::ldexp(1.0, -j));
    const auto dist = boundary_distance(domain, zj);
    const double k = kobayashi_balanced(domain, zj).value;
    const double log_dist = std::log(dist.value);
    rows.push_back({j, dist.value, dist.lower_bound, k, k + log_dist, k + 0.5 * log_dist});
  }
  return rows;
}

}  // namespace squeezekit
