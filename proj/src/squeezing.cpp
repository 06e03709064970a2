#include "squeezekit/squeezing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "overloaded.hpp"
#include "squeezekit/errors.hpp"
#include "squeezekit/minkowski.hpp"

namespace squeezekit {

using detail::Overloaded;

namespace {

constexpr double kZeroTolerance = 1e-12;

void require_factor(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ArgumentError("embedding: scale factor must be positive and finite");
}

std::optional<BalancedDomain> balanced_image(const Embedding& f) {
  if (f.source.is_custom()) return std::nullopt;
  return std::visit(
      Overloaded{[&](const IdentityScale& m) -> std::optional<BalancedDomain> { return f.source.scaled(m.factor); },
                 [&](const AutomorphismCompose& m) -> std::optional<BalancedDomain> {
                   return f.source.scaled(m.factor);
                 },
                 [&](const CoordinateAffine& m) -> std::optional<BalancedDomain> {
                   if (!m.translation.is_zero()) return std::nullopt;
                   const double first = std::abs(m.scales.front());
                   const bool uniform = std::all_of(m.scales.begin(), m.scales.end(),
                                                    [&](Complex s) { return std::abs(s) == first; });
                   if (uniform) return f.source.scaled(first);
                   std::vector<double> radii(m.scales.size());
                   if (f.source.is_polydisc()) {
                     for (std::size_t i = 0; i < radii.size(); ++i)
                       radii[i] = std::abs(m.scales[i]) * f.source.scale();
                     return BalancedDomain::weighted_polydisc(std::move(radii));
                   }
                   if (const auto* w = std::get_if<WeightedPolydisc>(&f.source.shape())) {
                     for (std::size_t i = 0; i < radii.size(); ++i)
                       radii[i] = std::abs(m.scales[i]) * w->radii[i] * f.source.scale();
                     return BalancedDomain::weighted_polydisc(std::move(radii));
                   }
                   return std::nullopt;
                 }},
      f.map);
}

std::vector<ComplexVector> unit_sphere(const BalancedDomain& domain, std::size_t count, RngSeed seed) {
  Rng rng(seed);
  std::vector<ComplexVector> out;
  out.reserve(count);
  while (out.size() < count) {
    ComplexVector g = rng.gaussian_vector(domain.dim());
    const double h = gauge_value(domain, g);
    if (h > 0.0) out.push_back(g * (1.0 / h));
  }
  return out;
}

}  // namespace

std::string Embedding::id() const {
  std::ostringstream out;
  out.precision(17);
  std::visit(Overloaded{[&](const IdentityScale& m) { out << "identity-scale(" << m.factor << ")"; },
                        [&](const AutomorphismCompose& m) {
                          out << "automorphism(" << m.automorphism.kind() << ")*" << m.factor;
                        },
                        [&](const CoordinateAffine&) { out << "coordinate-affine"; }},
             map);
  return out.str();
}

Embedding make_embedding(EmbeddingMap map, BalancedDomain source, BalancedDomain target, ComplexVector base) {
  const std::size_t n = source.dim();
  if (target.dim() != n) throw ArgumentError("embedding: source and target dimensions differ");
  require_dim(base, n, "embedding base point");
  std::visit(Overloaded{[&](const IdentityScale& m) { require_factor(m.factor); },
                        [&](const AutomorphismCompose& m) {
                          require_factor(m.factor);
                          if (!acts_on(m.automorphism, source))
                            throw ArgumentError("embedding: " + m.automorphism.kind() +
                                                " automorphism does not act on " + source.name());
                        },
                        [&](const CoordinateAffine& m) {
                          if (m.scales.size() != n) throw ArgumentError("embedding: scale count mismatch");
                          require_dim(m.translation, n, "embedding translation");
                          for (Complex s : m.scales)
                            if (s == 0.0 || !std::isfinite(std::abs(s)))
                              throw ArgumentError("embedding: coordinate scales must be nonzero");
                        }},
             map);
  return {std::move(map), std::move(source), std::move(target), std::move(base)};
}

ComplexVector embed(const Embedding& f, const ComplexVector& z) {
  require_dim(z, f.source.dim(), "embed");
  return std::visit(Overloaded{[&](const IdentityScale& m) { return z * m.factor; },
                               [&](const AutomorphismCompose& m) { return apply(m.automorphism, z) * m.factor; },
                               [&](const CoordinateAffine& m) {
                                 ComplexVector out = m.translation;
                                 for (std::size_t i = 0; i < out.dim(); ++i) out[i] += m.scales[i] * z[i];
                                 return out;
                               }},
                    f.map);
}

std::optional<ComplexVector> preimage(const Embedding& f, const ComplexVector& w) {
  require_dim(w, f.source.dim(), "preimage");
  return std::visit(Overloaded{[&](const IdentityScale& m) -> std::optional<ComplexVector> { return w / m.factor; },
                               [&](const AutomorphismCompose& m) -> std::optional<ComplexVector> {
                                 try {
                                   return apply(inverse(m.automorphism), w / m.factor);
                                 } catch (const DomainError&) {
                                   return std::nullopt;
                                 }
                               },
                               [&](const CoordinateAffine& m) -> std::optional<ComplexVector> {
                                 ComplexVector out = w - m.translation;
                                 for (std::size_t i = 0; i < out.dim(); ++i) out[i] /= m.scales[i];
                                 return out;
                               }},
                    f.map);
}

ImageRegion ImageRegion::of(const BalancedDomain& domain) {
  return {domain, [domain](const ComplexVector& w) { return squeezekit::contains(domain, w); }, domain.dim(),
          domain.name()};
}

ImageRegion ImageRegion::scaled(double factor) const {
  require_factor(factor);
  ImageRegion out;
  if (balanced) out.balanced = balanced->scaled(factor);
  out.membership = [inner = membership, factor](const ComplexVector& w) { return inner(w / factor); };
  out.dim = dim;
  std::ostringstream label_out;
  label_out.precision(17);
  label_out << label << "*" << factor;
  out.label = label_out.str();
  return out;
}

ImageRegion image_of(const Embedding& f) {
  ImageRegion out;
  out.balanced = balanced_image(f);
  out.membership = [f](const ComplexVector& w) {
    const auto z = preimage(f, w);
    return z.has_value() && contains(f.source, *z);
  };
  out.dim = f.source.dim();
  out.label = f.id() + "(" + f.source.name() + ")";
  return out;
}

std::string to_string(RadiusMethod method) {
  return method == RadiusMethod::closed_form ? "closed-form" : "sampled";
}

InnerRadius inner_radius(const BalancedDomain& target, const ImageRegion& image, const InnerRadiusOptions& options) {
  if (image.dim != target.dim()) throw ArgumentError("inner_radius: dimension mismatch");
  if (!image.contains(ComplexVector::zeros(target.dim())))
    throw ArgumentError("inner_radius: the image does not contain 0");

  if (image.balanced && !target.is_custom() && !image.balanced->is_custom()) {
    const auto ratio = norm_ratio(target, *image.balanced);
    if (ratio) return {1.0 / *ratio, RadiusMethod::closed_form, 0};
  }

  if (options.samples == 0) throw ArgumentError("inner_radius: samples must be at least 1");
  const auto sphere = unit_sphere(target, options.samples, options.seed);
  auto inside = [&](double r) {
    return std::all_of(sphere.begin(), sphere.end(), [&](const ComplexVector& u) { return image.contains(u * r); });
  };
  double lo = 0.0;
  double hi = 1.0;
  int grow = 0;
  while (inside(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 60) throw DomainError("inner_radius: image appears unbounded");
  }
  while (hi - lo > options.tolerance * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (inside(mid))
      lo = mid;
    else
      hi = mid;
  }
  return {lo, RadiusMethod::sampled, options.samples};
}

std::size_t containment_failures(const BalancedDomain& target, const ImageRegion& image, double r,
                                 std::size_t samples, RngSeed seed) {
  if (!(r > 0.0)) throw ArgumentError("containment_failures: radius must be positive");
  std::size_t failures = 0;
  for (const auto& z : sample_interior(target, samples, seed))
    if (!image.contains(z * r)) ++failures;
  return failures;
}

SqueezeRecord squeeze_lower_bound(const BalancedDomain& omega, const BalancedDomain& target, const ComplexVector& z,
                                  const Embedding& f, const InnerRadiusOptions& options) {
  if (!f.source.same_as(omega)) throw ArgumentError("squeeze_lower_bound: embedding source is not " + omega.name());
  if (!f.target.same_as(target))
    throw ArgumentError("squeeze_lower_bound: embedding target is not " + target.name());
  require_dim(z, omega.dim(), "squeeze_lower_bound");
  if (!contains(omega, z)) throw DomainError("squeeze_lower_bound: base point outside " + omega.name());
  const double at_base = embed(f, z).norm2();
  if (at_base > kZeroTolerance)
    throw ArgumentError("squeeze_lower_bound: embedding does not send the base point to 0 (|f(z)| = " +
                        std::to_string(at_base) + ")");

  const ImageRegion image = image_of(f);
  std::optional<double> ratio;
  if (image.balanced && !target.is_custom()) ratio = norm_ratio(*image.balanced, target);
  if (ratio) {
    if (*ratio > 1.0 + kZeroTolerance)
      throw CertificateError("squeeze_lower_bound: " + image.label + " is not inside " + target.name());
  } else {
    for (const auto& x : sample_interior(omega, options.samples, options.seed.substream(1)))
      if (!contains(target, embed(f, x)))
        throw CertificateError("squeeze_lower_bound: sampled image point " + to_string(embed(f, x)) +
                               " lies outside " + target.name());
  }

  const InnerRadius r = inner_radius(target, image, options);
  return {z, f, r.value, target.name(), r.method, r.samples};
}

EmbeddingFamily transport_family(const BalancedDomain& omega, const BalancedDomain& target) {
  if (!omega.is_homogeneous_model())
    throw UnsupportedVariant("transport_family: " + omega.name() + " is not the unit polydisc or ball");
  const auto ratio = norm_ratio(omega, target);
  if (!ratio) throw UnsupportedVariant("transport_family: no closed-form scale for " + target.name());
  const double c = 1.0 / *ratio;
  return [omega, target, c](const ComplexVector& q) {
    return make_embedding(AutomorphismCompose{transport_to_origin(omega, q), c}, omega, target, q);
  };
}

std::vector<SqueezeRecord> squeeze_along_sequence(const BalancedDomain& omega, const BalancedDomain& target,
                                                  const std::vector<ComplexVector>& points,
                                                  const EmbeddingFamily& family, const InnerRadiusOptions& options) {
  std::vector<SqueezeRecord> out;
  out.reserve(points.size());
  for (const auto& q : points) out.push_back(squeeze_lower_bound(omega, target, q, family(q), options));
  return out;
}

}  // namespace squeezekit
