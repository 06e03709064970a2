#include "squeezekit/automorphisms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "overloaded.hpp"
#include "squeezekit/errors.hpp"
#include "squeezekit/minkowski.hpp"

namespace squeezekit {

namespace {

using detail::Overloaded;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex hermitian(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

std::vector<Complex> mat_vec(const std::vector<Complex>& m, const std::vector<Complex>& v) {
  const std::size_t n = v.size();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s{};
    for (std::size_t j = 0; j < n; ++j) s += m[i * n + j] * v[j];
    out[i] = s;
  }
  return out;
}

std::vector<Complex> adjoint(const std::vector<Complex>& m, std::size_t n) {
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = std::conj(m[i * n + j]);
  return out;
}

double wrap_phase(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

/// phi_a(z) for the ball, numerator and denominator kept apart for the differential.
struct BallMobiusParts {
  std::vector<Complex> numerator;
  Complex denominator;
};

BallMobiusParts ball_mobius_parts(const std::vector<Complex>& a, const std::vector<Complex>& z) {
  const double a2 = std::real(hermitian(a, a));
  const Complex za = hermitian(z, a);
  std::vector<Complex> num(z.size());
  if (a2 == 0.0) {
    for (std::size_t i = 0; i < z.size(); ++i) num[i] = -z[i];
    return {num, 1.0};
  }
  const double s = std::sqrt(1.0 - a2);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Complex pz = za / a2 * a[i];
    num[i] = a[i] - pz - s * (z[i] - pz);
  }
  return {num, 1.0 - za};
}

void require_inside(bool inside, const ComplexVector& z, const char* model) {
  if (!inside) throw DomainError(std::string("apply: point ") + to_string(z) + " is outside the unit " + model);
}

}  // namespace

Automorphism Automorphism::identity(std::size_t dim) {
  if (dim == 0) throw ArgumentError("automorphism dimension must be at least 1");
  return Automorphism(IdentityAutomorphism{dim});
}

Automorphism Automorphism::polydisc(std::vector<Complex> centers, std::vector<double> phases,
                                    std::vector<std::size_t> permutation) {
  const std::size_t n = centers.size();
  if (n == 0 || phases.size() != n || permutation.size() != n)
    throw ArgumentError("polydisc automorphism: centers, phases and permutation must share a positive length");
  for (const auto& a : centers)
    if (!(std::abs(a) < 1.0)) throw ArgumentError("polydisc automorphism: centers must lie in the open unit disc");
  for (double& t : phases) {
    if (!std::isfinite(t)) throw ArgumentError("polydisc automorphism: phases must be finite");
    t = wrap_phase(t);
  }
  std::vector<std::size_t> sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != i) throw ArgumentError("polydisc automorphism: not a permutation of 0..n-1");
  return Automorphism(PolydiscAutomorphism{std::move(centers), std::move(phases), std::move(permutation)});
}

Automorphism Automorphism::ball(std::vector<Complex> center, std::vector<Complex> unitary) {
  const std::size_t n = center.size();
  if (n == 0 || unitary.size() != n * n)
    throw ArgumentError("ball automorphism: unitary must be n x n for a center of length n");
  if (!(std::sqrt(std::real(hermitian(center, center))) < 1.0))
    throw ArgumentError("ball automorphism: center must lie in the open unit ball");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += std::conj(unitary[k * n + i]) * unitary[k * n + j];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-12)
        throw ArgumentError("ball automorphism: matrix is not unitary to 1e-12");
    }
  }
  return Automorphism(BallAutomorphism{std::move(center), std::move(unitary)});
}

std::size_t Automorphism::dim() const {
  return std::visit(Overloaded{[](const IdentityAutomorphism& f) { return f.dim; },
                               [](const PolydiscAutomorphism& f) { return f.centers.size(); },
                               [](const BallAutomorphism& f) { return f.center.size(); }},
                    spec_);
}

std::string Automorphism::kind() const {
  return std::visit(Overloaded{[](const IdentityAutomorphism&) { return std::string("identity"); },
                               [](const PolydiscAutomorphism&) { return std::string("polydisc"); },
                               [](const BallAutomorphism&) { return std::string("ball"); }},
                    spec_);
}

bool acts_on(const Automorphism& f, const BalancedDomain& domain) {
  if (f.dim() != domain.dim()) return false;
  return std::visit(Overloaded{[](const IdentityAutomorphism&) { return true; },
                               // in dimension 1 the ball and the polydisc are both the disc
                               [&](const PolydiscAutomorphism&) {
                                 return domain.is_homogeneous_model() &&
                                        (domain.is_polydisc() || domain.dim() == 1);
                               },
                               [&](const BallAutomorphism&) {
                                 return domain.is_homogeneous_model() &&
                                        (domain.is_ball() || domain.dim() == 1);
                               }},
                    f.spec());
}

ComplexVector apply(const Automorphism& f, const ComplexVector& z) {
  require_dim(z, f.dim(), "apply");
  return std::visit(
      Overloaded{[&](const IdentityAutomorphism&) { return z; },
                 [&](const PolydiscAutomorphism& p) {
                   require_inside(z.norm_inf() < 1.0, z, "polydisc");
                   std::vector<Complex> out(z.dim());
                   for (std::size_t i = 0; i < z.dim(); ++i) {
                     const Complex a = p.centers[i];
                     const Complex zi = z[p.permutation[i]];
                     Complex w = (a - zi) / (1.0 - std::conj(a) * zi);
                     if (p.phases[i] != 0.0) w *= std::polar(1.0, p.phases[i]);
                     out[i] = w;
                   }
                   return ComplexVector(std::move(out));
                 },
                 [&](const BallAutomorphism& b) {
                   require_inside(z.norm2() < 1.0, z, "ball");
                   auto parts = ball_mobius_parts(b.center, z.entries());
                   for (auto& c : parts.numerator) c /= parts.denominator;
                   return ComplexVector(mat_vec(b.unitary, parts.numerator));
                 }},
      f.spec());
}

Automorphism inverse(const Automorphism& f) {
  return std::visit(
      Overloaded{[&](const IdentityAutomorphism&) { return f; },
                 [](const PolydiscAutomorphism& p) {
                   const std::size_t n = p.centers.size();
                   std::vector<Complex> centers(n);
                   std::vector<double> phases(n);
                   std::vector<std::size_t> perm(n);
                   for (std::size_t i = 0; i < n; ++i) {
                     const std::size_t k = p.permutation[i];
                     centers[k] = p.phases[i] == 0.0 ? p.centers[i]
                                                     : p.centers[i] * std::polar(1.0, p.phases[i]);
                     phases[k] = p.phases[i] == 0.0 ? 0.0 : kTwoPi - p.phases[i];
                     perm[k] = i;
                   }
                   return Automorphism::polydisc(std::move(centers), std::move(phases), std::move(perm));
                 },
                 [](const BallAutomorphism& b) {
                   const std::size_t n = b.center.size();
                   return Automorphism::ball(mat_vec(b.unitary, b.center), adjoint(b.unitary, n));
                 }},
      f.spec());
}

ComplexVector differential(const Automorphism& f, const ComplexVector& z, const ComplexVector& v) {
  require_dim(z, f.dim(), "differential");
  require_dim(v, f.dim(), "differential");
  return std::visit(
      Overloaded{[&](const IdentityAutomorphism&) { return v; },
                 [&](const PolydiscAutomorphism& p) {
                   require_inside(z.norm_inf() < 1.0, z, "polydisc");
                   std::vector<Complex> out(z.dim());
                   for (std::size_t i = 0; i < z.dim(); ++i) {
                     const Complex a = p.centers[i];
                     const std::size_t k = p.permutation[i];
                     const Complex d = 1.0 - std::conj(a) * z[k];
                     Complex w = (std::norm(a) - 1.0) / (d * d) * v[k];
                     if (p.phases[i] != 0.0) w *= std::polar(1.0, p.phases[i]);
                     out[i] = w;
                   }
                   return ComplexVector(std::move(out));
                 },
                 [&](const BallAutomorphism& b) {
                   require_inside(z.norm2() < 1.0, z, "ball");
                   const auto& a = b.center;
                   const double a2 = std::real(hermitian(a, a));
                   const auto parts = ball_mobius_parts(a, z.entries());
                   const Complex va = hermitian(v.entries(), a);
                   const Complex den = parts.denominator;
                   std::vector<Complex> out(z.dim());
                   const double s = std::sqrt(1.0 - a2);
                   for (std::size_t i = 0; i < z.dim(); ++i) {
                     const Complex pv = a2 == 0.0 ? Complex{} : va / a2 * a[i];
                     const Complex linear = a2 == 0.0 ? -v[i] : -pv - s * (v[i] - pv);
                     out[i] = linear / den + parts.numerator[i] * va / (den * den);
                   }
                   return ComplexVector(mat_vec(b.unitary, out));
                 }},
      f.spec());
}

Automorphism transport_to_origin(const BalancedDomain& domain, const ComplexVector& a) {
  require_dim(a, domain.dim(), "transport_to_origin");
  if (!domain.is_homogeneous_model())
    throw UnsupportedVariant("transport_to_origin: no transitive automorphisms implemented for " + domain.name());
  if (!contains(domain, a)) throw DomainError("transport_to_origin: point " + to_string(a) + " is outside " + domain.name());
  const std::size_t n = a.dim();
  if (a.is_zero()) return Automorphism::identity(n);
  if (domain.is_polydisc()) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return Automorphism::polydisc(a.entries(), std::vector<double>(n, 0.0), std::move(perm));
  }
  std::vector<Complex> eye(n * n);
  for (std::size_t i = 0; i < n; ++i) eye[i * n + i] = 1.0;
  return Automorphism::ball(a.entries(), std::move(eye));
}

double alpha(double x, double h_a) {
  if (!(x >= 0.0 && x < 1.0) || !(h_a >= 0.0 && h_a < 1.0))
    throw ArgumentError("alpha: arguments must lie in [0, 1)");
  return (x - h_a) / (1.0 - x * h_a);
}

AutomorphismReport verify_automorphism(const BalancedDomain& domain, const Automorphism& f,
                                       std::size_t samples, RngSeed seed) {
  if (samples == 0) throw ArgumentError("verify_automorphism: samples must be at least 1");
  if (!acts_on(f, domain))
    throw ArgumentError("verify_automorphism: " + f.kind() + " automorphism does not act on " + domain.name());
  const Automorphism inv = inverse(f);
  AutomorphismReport report{0.0, -std::numeric_limits<double>::infinity(), samples};
  for (const auto& z : sample_interior(domain, samples, seed)) {
    const ComplexVector w = apply(f, z);
    report.max_gauge_excess = std::max(report.max_gauge_excess, gauge_value(domain, w) - 1.0);
    try {
      report.max_roundtrip_error = std::max(report.max_roundtrip_error, distance2(apply(inv, w), z));
    } catch (const DomainError&) {
      report.max_roundtrip_error = std::numeric_limits<double>::infinity();
    }
  }
  return report;
}

std::vector<Complex> random_unitary(std::size_t dim, Rng& rng) {
  const std::size_t n = dim;
  // columns of a complex Gaussian matrix, orthonormalized in place
  std::vector<std::vector<Complex>> cols(n);
  for (auto& c : cols) c = rng.gaussian_vector(n).entries();
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const Complex proj = hermitian(cols[j], cols[k]);
        for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
      }
    }
    const double norm = std::sqrt(std::real(hermitian(cols[j], cols[j])));
    for (auto& c : cols[j]) c /= norm;
  }
  std::vector<Complex> u(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u[i * n + j] = cols[j][i];
  return u;
}

Automorphism random_automorphism(const BalancedDomain& domain, Rng& rng, double max_center) {
  const std::size_t n = domain.dim();
  if (!domain.is_homogeneous_model())
    throw UnsupportedVariant("random_automorphism: no automorphism group implemented for " + domain.name());
  if (!(max_center >= 0.0 && max_center < 1.0))
    throw ArgumentError("random_automorphism: max_center must lie in [0, 1)");
  if (domain.is_polydisc()) {
    std::vector<Complex> centers(n);
    std::vector<double> phases(n);
    for (auto& a : centers) a = rng.uniform_disc(max_center);
    for (auto& t : phases) t = rng.uniform(0.0, kTwoPi);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    return Automorphism::polydisc(std::move(centers), std::move(phases), std::move(perm));
  }
  ComplexVector dir = rng.gaussian_vector(n);
  const double radius = max_center * rng.uniform();
  dir *= radius / dir.norm2();
  return Automorphism::ball(dir.entries(), random_unitary(n, rng));
}

}  // namespace squeezekit
