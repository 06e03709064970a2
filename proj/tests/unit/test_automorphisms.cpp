#include <cmath>
#include <numbers>

#include "doctest.h"
#include "squeezekit/automorphisms.hpp"
#include "squeezekit/errors.hpp"
#include "squeezekit/minkowski.hpp"

using namespace squeezekit;

namespace {

// one-variable Blaschke factor written out independently
Complex blaschke(Complex a, Complex z) { return (a - z) / (1.0 - std::conj(a) * z); }

std::vector<Complex> identity_matrix(std::size_t n) {
  std::vector<Complex> u(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) u[i * n + i] = 1.0;
  return u;
}

}  // namespace

TEST_CASE("alpha") {
  CHECK(alpha(0.5, 0.5) == 0.0);
  CHECK(alpha(0.37, 0.0) == 0.37);
  CHECK(alpha(0.8, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(alpha(0.2, 0.5) < 0.0);
  CHECK_THROWS_AS(alpha(1.0, 0.5), ArgumentError);
  CHECK_THROWS_AS(alpha(0.5, -0.1), ArgumentError);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Automorphism::polydisc({1.0}, {0.0}, {0}), ArgumentError);
  CHECK_THROWS_AS(Automorphism::polydisc({0.1, 0.2}, {0.0, 0.0}, {0, 0}), ArgumentError);
  CHECK_THROWS_AS(Automorphism::polydisc({0.1, 0.2}, {0.0}, {0, 1}), ArgumentError);
  CHECK_THROWS_AS(Automorphism::ball({0.8, 0.6}, identity_matrix(2)), ArgumentError);
  CHECK_THROWS_AS(Automorphism::ball({0.1, 0.0}, {1.0, 0.1, 0.0, 1.0}), ArgumentError);
  const auto f = Automorphism::polydisc({0.1}, {-std::numbers::pi / 2}, {0});
  CHECK(std::get<PolydiscAutomorphism>(f.spec()).phases[0] == doctest::Approx(1.5 * std::numbers::pi));
}

TEST_CASE("transport to the origin") {
  const auto poly = BalancedDomain::polydisc(2);
  const ComplexVector a({0.5, 0.2});
  const auto f = transport_to_origin(poly, a);
  CHECK(apply(f, a).norm_inf() < 1e-15);
  CHECK(transport_to_origin(poly, ComplexVector::zeros(2)).kind() == "identity");
  const auto g = transport_to_origin(BalancedDomain::polydisc(1), ComplexVector({0.5}));
  CHECK(std::abs(apply(g, ComplexVector({0.0}))[0] - 0.5) < 1e-15);
  CHECK(apply(g, ComplexVector({0.5}))[0] == 0.0);

  const auto ball = BalancedDomain::ball(3);
  const ComplexVector b({0.3, Complex(0.1, -0.2), 0.4});
  const auto h = transport_to_origin(ball, b);
  CHECK(apply(h, b).norm2() < 1e-15);
  CHECK(distance2(apply(h, ComplexVector::zeros(3)), b) < 1e-15);
  CHECK_THROWS_AS(transport_to_origin(BalancedDomain::pnorm_ball(2, 3.0), ComplexVector({0.1, 0.1})),
                  UnsupportedVariant);
  CHECK_THROWS_AS(transport_to_origin(poly, ComplexVector({1.0, 0.0})), DomainError);
}

TEST_CASE("polydisc automorphisms match the coordinate formula") {
  const auto f = Automorphism::polydisc({0.3, Complex(0.1, 0.2)}, {0.7, 2.0}, {1, 0});
  const ComplexVector z({Complex(0.2, -0.3), 0.6});
  const auto w = apply(f, z);
  CHECK(std::abs(w[0] - std::polar(1.0, 0.7) * blaschke(0.3, z[1])) < 1e-15);
  CHECK(std::abs(w[1] - std::polar(1.0, 2.0) * blaschke(Complex(0.1, 0.2), z[0])) < 1e-15);
  CHECK_THROWS_AS(apply(f, ComplexVector({1.0, 0.0})), DomainError);
  CHECK(apply(Automorphism::identity(2), z) == z);
}

TEST_CASE("ball automorphism is an involution at the center") {
  const auto f = Automorphism::ball({0.3, 0.0}, identity_matrix(2));
  const ComplexVector a({0.3, 0.0});
  CHECK(apply(f, a).norm2() < 1e-15);
  // phi_a on the slice through a is the Blaschke factor
  const auto w = apply(f, ComplexVector({Complex(-0.4, 0.1), 0.0}));
  CHECK(std::abs(w[0] - blaschke(0.3, Complex(-0.4, 0.1))) < 1e-15);
  CHECK(std::abs(w[1]) < 1e-15);
  const ComplexVector z({0.1, Complex(0.2, 0.5)});
  CHECK(distance2(apply(f, apply(f, z)), z) < 1e-15);
}

TEST_CASE("round trips and interior images") {
  Rng rng(RngSeed{10, 0});
  const auto id_report = verify_automorphism(BalancedDomain::polydisc(3), Automorphism::identity(3), 1000, RngSeed{});
  CHECK(id_report.max_roundtrip_error == 0.0);

  const auto ball_report = verify_automorphism(BalancedDomain::ball(2),
                                               Automorphism::ball({0.3, 0.0}, identity_matrix(2)), 10000, RngSeed{});
  CHECK(ball_report.max_gauge_excess < 0.0);
  CHECK(ball_report.max_roundtrip_error <= 1e-12);

  const auto swap_report = verify_automorphism(BalancedDomain::polydisc(2),
                                               Automorphism::polydisc({0.4, Complex(0.0, 0.3)}, {0.1, 5.0}, {1, 0}),
                                               1000, RngSeed{3, 0});
  CHECK(swap_report.max_roundtrip_error <= 1e-12);
  CHECK(swap_report.max_gauge_excess < 0.0);

  for (const auto& d : {BalancedDomain::polydisc(3), BalancedDomain::ball(3)}) {
    for (int k = 0; k < 10; ++k) {
      const auto f = random_automorphism(d, rng, 0.9);
      CHECK(gauge_value(d, apply(f, ComplexVector::zeros(3))) < 1.0);
      const auto report = verify_automorphism(d, f, 1000, RngSeed{static_cast<std::uint64_t>(k), 1});
      CHECK(report.max_roundtrip_error <= 1e-12);
      CHECK(report.max_gauge_excess < 0.0);
    }
  }
}

TEST_CASE("differential against finite differences") {
  Rng rng(RngSeed{12, 0});
  for (const auto& d : {BalancedDomain::polydisc(2), BalancedDomain::ball(2)}) {
    const auto f = random_automorphism(d, rng, 0.6);
    const ComplexVector z({0.1, Complex(0.2, -0.1)});
    const ComplexVector v({Complex(0.3, 0.2), -0.5});
    const double h = 1e-6;
    const ComplexVector fd = (apply(f, z + v * h) - apply(f, z - v * h)) / Complex(2.0 * h, 0.0);
    CHECK(distance2(differential(f, z, v), fd) < 1e-8);
  }
}

TEST_CASE("acts_on") {
  const auto f = Automorphism::polydisc({0.1, 0.1}, {0.0, 0.0}, {0, 1});
  CHECK(acts_on(f, BalancedDomain::polydisc(2)));
  CHECK_FALSE(acts_on(f, BalancedDomain::ball(2)));
  CHECK_FALSE(acts_on(f, BalancedDomain::polydisc(2).scaled(0.5)));
  CHECK(acts_on(Automorphism::identity(2), BalancedDomain::pnorm_ball(2, 3.0)));
  CHECK(acts_on(Automorphism::polydisc({0.2}, {0.0}, {0}), BalancedDomain::ball(1)));
}
