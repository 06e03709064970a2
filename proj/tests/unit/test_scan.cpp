#include <cmath>

#include "doctest.h"
#include "squeezekit/errors.hpp"
#include "squeezekit/scan.hpp"

using namespace squeezekit;

TEST_CASE("epsilon sequence") {
  const auto eps = epsilon_sequence({1.0, 0.99, 0.9999}, {0.25, 0.1, 0.1});
  CHECK(eps[0] == 0.0);
  CHECK(eps[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eps[2] == doctest::Approx(0.01).epsilon(1e-10));
  CHECK(epsilon_sequence({0.99}, {0.1}, 1)[0] == doctest::Approx(0.1).epsilon(1e-12));
  for (double d : {1e-8, 0.3, 2.0}) CHECK(epsilon_sequence({1.0}, {d})[0] == 0.0);
  CHECK_THROWS_AS(epsilon_sequence({1.0, 1.0}, {0.1}), ArgumentError);
  CHECK_THROWS_AS(epsilon_sequence({1.0}, {0.0}), ArgumentError);
  CHECK(hypothesis_consistent({0.5, 0.2, 0.1, 1e-4}, 1, 1e-3));
  CHECK_FALSE(hypothesis_consistent({0.5, 0.2, 0.3, 1e-4}, 1, 1e-3));
  CHECK_FALSE(hypothesis_consistent({0.5, 0.2, 0.1}, 1, 1e-3));
  CHECK(hypothesis_consistent({}, 0, 1e-3));
}

TEST_CASE("estimate c") {
  const auto poly = BalancedDomain::polydisc(2);
  const auto z0 = ComplexVector({0.2, 0.1});
  // a single point equal to the base: K = 0
  CHECK(estimate_c(poly, z0, {z0}) == doctest::Approx(std::log(0.8)).epsilon(1e-12));
  const auto q = ray_sequence(ComplexVector({1.0, 0.5}), 20);
  // along the ray, K + log dist = 1/2 log((1+h)(1-h)) <= 0 with the sup at the start
  const double c = estimate_c(poly, ComplexVector::zeros(2), q);
  CHECK(std::isfinite(c));
  CHECK(c == doctest::Approx(0.5 * std::log(0.75)).epsilon(1e-12));
  // automorphism images of the ray stay finite
  const auto f = transport_to_origin(poly, ComplexVector({0.3, -0.2}));
  std::vector<ComplexVector> moved;
  for (const auto& p : q) moved.push_back(apply(f, p));
  CHECK(std::isfinite(estimate_c(poly, ComplexVector::zeros(2), moved)));
}

TEST_CASE("base image threshold") {
  CHECK(base_image_threshold(0.0, 0.5) == 0.75);
  CHECK(base_image_check(0.0, 0.5, 0.5));
  CHECK_FALSE(base_image_check(0.0, 0.5, 0.75));
  for (double d = 0.1; d > 1e-6; d *= 0.1) CHECK(base_image_check(0.3, d, 0.9));
  CHECK(base_image_threshold(0.0, 0.5, 1) == 0.5);
}

TEST_CASE("square-root step") {
  CHECK(sqrt_step_holds(0.0));
  for (int k = 1; k < 1000; ++k) {
    const double x = (2.0 / 9.0) * k / 1000.0;
    CHECK(sqrt_step_holds(x));
    CHECK(std::sqrt(1.0 - 4.0 * x) > 1.0 - 3.0 * x);
  }
  CHECK_FALSE(sqrt_step_holds(2.0 / 9.0 + 1e-9));
  CHECK_FALSE(sqrt_step_holds(0.24));
  CHECK_FALSE(sqrt_step_holds(0.3));
}

TEST_CASE("radius chain identity") {
  const auto r = radius_chain(0.9, 0.3, 0.0, 0.0);
  const double lhs_oracle = (0.6 / 0.73) * (0.6 / 0.73);
  const double rhs_oracle = 1.0 - 0.1729 / 0.5329;
  CHECK(std::abs(lhs_oracle - rhs_oracle) <= 1e-15);
  CHECK(std::abs(r.identity_lhs - lhs_oracle) <= 1e-12);
  CHECK(std::abs(r.identity_rhs - rhs_oracle) <= 1e-12);
  CHECK(r.identity_lhs == doctest::Approx(0.675549).epsilon(1e-6));

  const auto z = radius_chain(0.7, 0.0, 0.0, 0.0);
  CHECK(z.identity_lhs == doctest::Approx(0.49).epsilon(1e-15));
  CHECK(z.identity_rhs == doctest::Approx(0.49).epsilon(1e-15));

  Rng rng(RngSeed{33, 0});
  for (int k = 0; k < 10000; ++k) {
    const double s = rng.uniform(1e-6, 1.0);
    const double b = rng.uniform(0.0, s);
    if (b >= s) continue;
    CHECK(radius_chain(s, b, 0.0, 0.0).identity_ok(1e-12));
  }
  CHECK_THROWS_AS(radius_chain(0.5, 0.5, 0.0, 0.0), PreconditionError);
  CHECK_THROWS_AS(radius_chain(0.5, 0.7, 0.0, 0.0), PreconditionError);
}

TEST_CASE("radius chain bounds") {
  const double eps = 1e-3;
  const double dist = 0.1;
  const double s = 1.0 - eps * dist * dist;
  const double b = 1.0 - dist * dist - 1e-6;
  const auto r = radius_chain(s, b, 0.0, eps);
  CHECK(r.x == eps);
  CHECK(r.lower_bound_ok);
  CHECK(r.identity_lhs >= 1.0 - 4.0 * eps - 1e-12);
  CHECK(r.sqrt_vs_linear_ok);
  CHECK(r.gate_ok);
  CHECK(r.passed());

  // beyond the gate the bound-only route breaks down
  const double x = 0.24;
  const auto bad = radius_chain(1.0 - x, 0.0, 0.0, x);
  CHECK_FALSE(bad.gate_ok);
  CHECK_FALSE(bad.bound_route_ok);
}

TEST_CASE("self scan of the polydisc") {
  const auto poly = BalancedDomain::polydisc(2);
  const auto q = ray_sequence(ComplexVector({1.0, 0.0}), 12);
  const auto result = run_scan(poly, poly, q, transport_family(poly, poly));
  REQUIRE(result.rows.size() == 12);
  CHECK(result.verdict == "theorem-chain-verified");
  CHECK(result.hypothesis_consistent);
  for (const auto& row : result.rows) {
    CHECK(row.T == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(row.eps == 0.0);
    CHECK(row.s == doctest::Approx(row.T).epsilon(1e-14));
    CHECK(row.base_image_ok);
    REQUIRE(row.radius_chain.has_value());
    CHECK(row.radius_chain->identity_ok());
    REQUIRE(row.final_radius.has_value());
    CHECK(*row.final_radius >= row.required_radius);
    CHECK(row.passed);
    CHECK(row.flags == "ok");
  }
}

TEST_CASE("scan edge cases") {
  const auto poly = BalancedDomain::polydisc(2);
  const auto ball = BalancedDomain::ball(2);
  const auto empty = run_scan(poly, poly, {}, transport_family(poly, poly));
  CHECK(empty.rows.empty());
  CHECK(empty.verdict == "vacuous");

  const auto q = ray_sequence(ComplexVector({1.0, 0.0}), 8);
  const auto cross = run_scan(ball, poly, q, transport_family(ball, poly));
  REQUIRE(cross.rows.size() == 8);
  for (const auto& row : cross.rows) {
    CHECK(row.eps >= 0.0);
    CHECK(row.T <= 1.0);
  }
  CHECK((cross.verdict == "theorem-chain-verified" || cross.verdict == "chain-not-verified"));

  ScanConfig skip_all;
  skip_all.skip = 8;
  const auto skipped = run_scan(ball, poly, q, transport_family(ball, poly), skip_all);
  for (const auto& row : skipped.rows) CHECK(row.verdict == "skipped");
}
