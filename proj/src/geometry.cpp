#include "squeezekit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "overloaded.hpp"
#include "squeezekit/errors.hpp"
#include "squeezekit/minkowski.hpp"

namespace squeezekit {

namespace {

using detail::Overloaded;

void require_positive_dim(std::size_t dim) {
  if (dim == 0) throw ArgumentError("domain dimension must be at least 1");
}

constexpr double kMinAcceptance = 1e-6;
// attempts before the acceptance rate is trusted enough to give up
constexpr std::size_t kAcceptanceProbe = 10'000'000;

template <class Accept>
std::vector<ComplexVector> rejection_sample(const std::vector<double>& box, std::size_t count,
                                            RngSeed seed, Accept&& accept) {
  if (count == 0) throw ArgumentError("sample_interior: count must be at least 1");
  Rng rng(seed);
  std::vector<ComplexVector> out;
  out.reserve(count);
  std::vector<Complex> entries(box.size());
  std::size_t attempts = 0;
  while (out.size() < count) {
    for (std::size_t i = 0; i < box.size(); ++i) {
      const double re = rng.uniform(-box[i], box[i]);
      const double im = rng.uniform(-box[i], box[i]);
      entries[i] = {re, im};
    }
    ++attempts;
    ComplexVector z(entries);
    if (accept(z)) out.push_back(std::move(z));
    if (attempts >= kAcceptanceProbe &&
        static_cast<double>(out.size()) < kMinAcceptance * static_cast<double>(attempts)) {
      std::ostringstream msg;
      msg << "sample_interior: acceptance rate " << static_cast<double>(out.size()) / attempts
          << " below " << kMinAcceptance;
      throw SamplingFailure(msg.str());
    }
  }
  return out;
}

}  // namespace

BalancedDomain BalancedDomain::polydisc(std::size_t dim) {
  require_positive_dim(dim);
  return BalancedDomain(Polydisc{dim});
}

BalancedDomain BalancedDomain::ball(std::size_t dim) {
  require_positive_dim(dim);
  return BalancedDomain(EuclideanBall{dim});
}

BalancedDomain BalancedDomain::pnorm_ball(std::size_t dim, double p) {
  require_positive_dim(dim);
  if (!(p >= 1.0) || !std::isfinite(p)) throw ArgumentError("pnorm_ball: p must be finite and >= 1");
  return BalancedDomain(PNormBall{dim, p});
}

BalancedDomain BalancedDomain::weighted_polydisc(std::vector<double> radii) {
  require_positive_dim(radii.size());
  for (double r : radii)
    if (!(r > 0.0) || !std::isfinite(r))
      throw ArgumentError("weighted_polydisc: radii must be positive and finite");
  return BalancedDomain(WeightedPolydisc{std::move(radii)});
}

BalancedDomain BalancedDomain::custom(CustomGauge gauge) {
  require_positive_dim(gauge.dim);
  if (!gauge.membership) throw ArgumentError("custom gauge: membership oracle is required");
  if (gauge.coercivity && !(*gauge.coercivity > 0.0))
    throw ArgumentError("custom gauge: coercivity must be positive");
  if (gauge.lipschitz && !(*gauge.lipschitz > 0.0))
    throw ArgumentError("custom gauge: lipschitz constant must be positive");
  return BalancedDomain(std::move(gauge));
}

std::size_t BalancedDomain::dim() const {
  return std::visit(Overloaded{[](const WeightedPolydisc& w) { return w.radii.size(); },
                               [](const auto& s) { return s.dim; }},
                    shape_);
}

BalancedDomain BalancedDomain::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw ArgumentError("scaled: factor must be positive and finite");
  BalancedDomain out = *this;
  out.scale_ *= factor;
  return out;
}

std::string BalancedDomain::name() const {
  std::ostringstream out;
  out.precision(17);
  std::visit(Overloaded{[&](const Polydisc& s) { out << "polydisc(" << s.dim << ")"; },
                        [&](const EuclideanBall& s) { out << "ball(" << s.dim << ")"; },
                        [&](const PNormBall& s) { out << "pnorm(" << s.dim << ",p=" << s.p << ")"; },
                        [&](const WeightedPolydisc& s) {
                          out << "weighted(";
                          for (std::size_t i = 0; i < s.radii.size(); ++i)
                            out << (i ? "," : "") << s.radii[i];
                          out << ")";
                        },
                        [&](const CustomGauge& s) { out << s.label << "(" << s.dim << ")"; }},
             shape_);
  if (scale_ != 1.0) out << "*" << scale_;
  return out.str();
}

bool BalancedDomain::same_as(const BalancedDomain& other) const {
  if (scale_ != other.scale_ || shape_.index() != other.shape_.index() || dim() != other.dim())
    return false;
  return std::visit(
      Overloaded{[&](const PNormBall& s) { return s.p == std::get<PNormBall>(other.shape_).p; },
                 [&](const WeightedPolydisc& s) {
                   return s.radii == std::get<WeightedPolydisc>(other.shape_).radii;
                 },
                 [&](const CustomGauge& s) {
                   return s.label == std::get<CustomGauge>(other.shape_).label;
                 },
                 [](const auto&) { return true; }},
      shape_);
}

ReinhardtDomain::ReinhardtDomain(std::size_t dim, std::vector<MonomialConstraint> constraints,
                                 double box_radius)
    : dim_(dim), constraints_(std::move(constraints)), box_radius_(box_radius) {
  require_positive_dim(dim);
  if (!(box_radius > 0.0) || !std::isfinite(box_radius))
    throw ArgumentError("reinhardt: box radius must be positive and finite");
  for (const auto& c : constraints_) {
    if (c.exponents.size() != dim) throw ArgumentError("reinhardt: exponent count must equal dim");
    if (!(c.bound > 0.0)) throw ArgumentError("reinhardt: constraint bounds must be positive");
    for (double a : c.exponents)
      if (!std::isfinite(a)) throw ArgumentError("reinhardt: exponents must be finite");
  }
}

bool contains(const BalancedDomain& domain, const ComplexVector& z) {
  require_dim(z, domain.dim(), "contains");
  if (const auto* custom = std::get_if<CustomGauge>(&domain.shape()))
    return custom->membership(z / domain.scale());
  return gauge_value(domain, z) < 1.0;
}

bool contains(const ReinhardtDomain& domain, const ComplexVector& z) {
  require_dim(z, domain.dim(), "contains");
  if (!(z.norm_inf() < domain.box_radius())) return false;
  for (const auto& c : domain.constraints()) {
    double product = 1.0;
    for (std::size_t i = 0; i < z.dim(); ++i) product *= std::pow(std::abs(z[i]), c.exponents[i]);
    if (!(product < c.bound)) return false;
  }
  return true;
}

double coercivity(const BalancedDomain& domain) {
  const double n = static_cast<double>(domain.dim());
  const double base = std::visit(
      Overloaded{[&](const Polydisc&) { return 1.0 / std::sqrt(n); },
                 [](const EuclideanBall&) { return 1.0; },
                 [&](const PNormBall& s) {
                   return s.p <= 2.0 ? 1.0 : std::pow(n, 1.0 / s.p - 0.5);
                 },
                 [&](const WeightedPolydisc& s) {
                   return 1.0 / (std::sqrt(n) * *std::max_element(s.radii.begin(), s.radii.end()));
                 },
                 [](const CustomGauge& s) {
                   if (!s.coercivity)
                     throw ConfigurationError("custom gauge '" + s.label +
                                              "' declares no coercivity constant");
                   return *s.coercivity;
                 }},
      domain.shape());
  return base / domain.scale();
}

double lipschitz(const BalancedDomain& domain) {
  const double n = static_cast<double>(domain.dim());
  const double base = std::visit(
      Overloaded{[](const Polydisc&) { return 1.0; }, [](const EuclideanBall&) { return 1.0; },
                 [&](const PNormBall& s) {
                   return s.p >= 2.0 ? 1.0 : std::pow(n, 1.0 / s.p - 0.5);
                 },
                 [](const WeightedPolydisc& s) {
                   return 1.0 / *std::min_element(s.radii.begin(), s.radii.end());
                 },
                 [](const CustomGauge& s) {
                   if (!s.lipschitz)
                     throw ConfigurationError("custom gauge '" + s.label +
                                              "' declares no Lipschitz constant");
                   return *s.lipschitz;
                 }},
      domain.shape());
  return base / domain.scale();
}

std::vector<double> bounding_box(const BalancedDomain& domain) {
  const std::size_t n = domain.dim();
  const double c = domain.scale();
  return std::visit(Overloaded{[&](const WeightedPolydisc& s) {
                                 std::vector<double> out(s.radii);
                                 for (double& r : out) r *= c;
                                 return out;
                               },
                               [&](const CustomGauge&) {
                                 return std::vector<double>(n, 1.0 / coercivity(domain));
                               },
                               // every l^p unit ball lies in the unit polydisc
                               [&](const auto&) { return std::vector<double>(n, c); }},
                    domain.shape());
}

BoundaryDistance boundary_distance(const BalancedDomain& domain, const ComplexVector& z) {
  require_dim(z, domain.dim(), "boundary_distance");
  if (!contains(domain, z)) throw DomainError("boundary_distance: point " + to_string(z) + " is outside " + domain.name());
  const double c = domain.scale();
  if (domain.is_polydisc()) {
    return {c - z.norm_inf(), false};
  }
  if (domain.is_ball()) return {c - z.norm2(), false};
  if (const auto* w = std::get_if<WeightedPolydisc>(&domain.shape())) {
    double d = c * w->radii[0] - std::abs(z[0]);
    for (std::size_t i = 1; i < z.dim(); ++i) d = std::min(d, c * w->radii[i] - std::abs(z[i]));
    return {d, false};
  }
  if (const auto* p = std::get_if<PNormBall>(&domain.shape()); p && p->p == 2.0)
    return {c - z.norm2(), false};
  // a boundary point w has 1 = h(w) <= h(z) + Lip ||w - z||
  const double h = gauge_value(domain, z);
  return {(1.0 - h) / lipschitz(domain), true};
}

std::vector<ComplexVector> sample_interior(const BalancedDomain& domain, std::size_t count,
                                           RngSeed seed) {
  return rejection_sample(bounding_box(domain), count, seed,
                          [&](const ComplexVector& z) { return contains(domain, z); });
}

std::vector<ComplexVector> sample_interior(const ReinhardtDomain& domain, std::size_t count,
                                           RngSeed seed) {
  return rejection_sample(std::vector<double>(domain.dim(), domain.box_radius()), count, seed,
                          [&](const ComplexVector& z) { return contains(domain, z); });
}

}  // namespace squeezekit
