#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "splitoct/kinematics.hpp"

using namespace splitoct;

TEST_CASE("Constants validation") {
  CHECK_NOTHROW(Constants(1, 0));
  CHECK_NOTHROW(Constants(3e8, 1e-34));
  CHECK_THROWS_AS(Constants(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Constants(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Constants(1, -1), std::invalid_argument);
}

TEST_CASE("to_octonion scaling") {
  Signal s;
  s.t = 1;
  const Octonion o = to_octonion(s, Constants(2, 1));
  CHECK(o[0] == 2.0);
  for (int i = 1; i < 8; ++i) CHECK(o[i] == 0.0);

  Signal full;
  full.t = 3;
  full.x = {1, 2, 3};
  full.lambda = {4, 5, 6};
  full.omega = 7;
  const Octonion f = to_octonion(full, Constants(2, 0.5));
  CHECK(f[0] == 6.0);
  CHECK(f[1] == 1.0);
  CHECK(f[4] == 2.0);   // hbar * lambda1
  CHECK(f[7] == 7.0);   // c * hbar * omega
}

TEST_CASE("signal roundtrip") {
  const Constants k(2.5, 0.75);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-100, 100);
  for (int t = 0; t < 1000; ++t) {
    Signal s;
    s.t = d(rng);
    for (auto& v : s.x) v = d(rng);
    for (auto& v : s.lambda) v = d(rng);
    s.omega = d(rng);
    const Signal r = from_octonion(to_octonion(s, k), k);
    CHECK(r.t == doctest::Approx(s.t).epsilon(1e-14));
    for (int i = 0; i < 3; ++i) {
      CHECK(r.x[static_cast<size_t>(i)] == doctest::Approx(s.x[static_cast<size_t>(i)]).epsilon(1e-14));
      CHECK(r.lambda[static_cast<size_t>(i)] == doctest::Approx(s.lambda[static_cast<size_t>(i)]).epsilon(1e-14));
    }
    CHECK(r.omega == doctest::Approx(s.omega).epsilon(1e-14));
  }
  CHECK_THROWS_AS(from_octonion(Octonion{}, Constants(1, 0)), std::invalid_argument);
}

TEST_CASE("interval equals octonion norm") {
  Signal s;
  s.t = 3;
  s.x = {2, 0, 0};
  s.lambda = {1, 0, 0};
  s.omega = 2;
  const Constants unit;
  CHECK(interval(s, unit) == doctest::Approx(2.0));  // 9 - 4 + 1 - 4
  CHECK(interval(s, unit) == doctest::Approx(to_octonion(s, unit).norm()));

  const Constants k(2, 0.5);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-50, 50);
  for (int t = 0; t < 1000; ++t) {
    Signal r;
    r.t = d(rng);
    for (auto& v : r.x) v = d(rng);
    for (auto& v : r.lambda) v = d(rng);
    r.omega = d(rng);
    const double i1 = interval(r, k), i2 = to_octonion(r, k).norm();
    CHECK(std::abs(i1 - i2) <= 1e-9 * (1 + std::abs(i1)));
  }
}

TEST_CASE("paracomplex grouping") {
  // 2 + 3I pairs the scalar with the pseudoscalar
  const Octonion o(2, 0, 0, 0, 0, 0, 0, 3);
  const auto p = paracomplex_form(o);
  CHECK(p[0][0] == 2.0);
  CHECK(p[0][1] == 3.0);
  for (int n = 1; n < 4; ++n) {
    CHECK(p[static_cast<size_t>(n)][0] == 0.0);
    CHECK(p[static_cast<size_t>(n)][1] == 0.0);
  }

  // each J^n pairs x_n with hbar lambda_n; reassembly is exact
  const Octonion g(1, 2, 3, 4, 5, 6, 7, 8);
  const auto q = paracomplex_form(g);
  Octonion back = q[0][0] * Octonion::unit(0) + q[0][1] * Octonion::unit(kI);
  for (int n = 1; n < 4; ++n)
    back = back + q[static_cast<size_t>(n)][0] * Octonion::unit(n) +
           q[static_cast<size_t>(n)][1] * (Octonion::unit(n) * Octonion::unit(kI));
  CHECK(max_abs(back - g) == 0.0);
}

TEST_CASE("lorentz_factor") {
  const Constants unit;

  RateState rest;  // everything at rest: ds/dt = 1
  CHECK(lorentz_factor(rest, unit) == 1.0);

  // classical branch: v = 0.6c, hbar = 0
  RateState moving;
  moving.v = {0.6, 0, 0};
  CHECK(lorentz_factor(moving, Constants(1, 0)) == doctest::Approx(0.8));

  // quantum branch: v = 0, hbar domega/dt = 0.6
  RateState spinning;
  spinning.domega_dt = 0.6;
  CHECK(lorentz_factor(spinning, unit) == doctest::Approx(0.8).epsilon(1e-12));

  // the dlambda/dx contraction can push a superluminal v back to timelike
  RateState mixed;
  mixed.v = {0.6, 0, 0};
  mixed.dlambda_dx[0][0] = 1.0;  // Frobenius square 1 kills the v^2 term
  CHECK(lorentz_factor(mixed, unit) == doctest::Approx(1.0));

  // null boundary
  RateState null_rate;
  null_rate.v = {1, 0, 0};
  CHECK(lorentz_factor(null_rate, Constants(1, 0)) == 0.0);

  RateState bad;
  bad.v = {2, 0, 0};
  CHECK_THROWS_AS(lorentz_factor(bad, Constants(1, 0)), std::domain_error);
}

TEST_CASE("uncertainty_check") {
  const Constants unit;

  // strictly interior
  auto rep = uncertainty_check({2, 3, 4}, 5, 0.25, unit);
  CHECK(rep.pass);
  CHECK(rep.relations.size() == 5);
  for (const auto& r : rep.relations) CHECK(r.margin > 0);

  // boundaries hold non-strictly
  auto edge = uncertainty_check({1, 1, 1}, 1, 1.0, unit);
  CHECK(edge.pass);
  for (const auto& r : edge.relations) CHECK(r.margin == 0.0);

  // one violated component fails the whole report
  auto bad = uncertainty_check({2, 0.5, 2}, 2, 0.0, unit);
  CHECK(!bad.pass);
  int failures = 0;
  for (const auto& r : bad.relations) failures += r.pass ? 0 : 1;
  CHECK(failures == 1);

  auto fast = uncertainty_check({2, 2, 2}, 2, 1.5, unit);
  CHECK(!fast.pass);
}

namespace {

Signal sweep_signal() {
  // signs chosen so every hbar-dependent deviation term adds constructively
  Signal s;
  s.t = 1.0;
  s.x = {0.5, 1.0, 2.0};
  s.lambda = {0.3, -0.7, 0.9};
  s.omega = 0.8;
  return s;
}

}  // namespace

TEST_CASE("classical limit of a boost") {
  const std::vector<double> hbars = {1, 0.1, 0.01, 0.001};
  const auto pts = classical_limit_sweep_boost(sweep_signal(), 1, 0.6, 1.0, hbars);
  REQUIRE(pts.size() == 4);
  // monotone decrease; the transverse mixing keeps the floor above zero
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    CHECK(pts[i].deviation > pts[i + 1].deviation);

  // with no transverse position the hbar = 0 boost is exactly Lorentz
  Signal axial = sweep_signal();
  axial.x = {0.5, 0, 0};
  const auto exact = classical_limit_sweep_boost(axial, 1, 0.6, 1.0, {0.0});
  CHECK(exact[0].deviation <= 1e-12);

  CHECK_THROWS_AS(classical_limit_sweep_boost(sweep_signal(), 1, 2.0, 1.0, hbars),
                  std::invalid_argument);
}

TEST_CASE("classical limit of a fix-jn automorphism") {
  Signal s = sweep_signal();
  s.x[0] = 0;  // the axis-1 coefficient feeds no hbar-independent deviation
  const std::vector<double> hbars = {1, 0.1, 0.01, 0.001};
  const auto pts = classical_limit_sweep_automorphism(s, {Family::fix_j1, 0.7, 0.4}, 1.0, hbars);
  REQUIRE(pts.size() == 4);
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    CHECK(pts[i].deviation > pts[i + 1].deviation);
  CHECK(pts.back().deviation < 1e-2 * pts.front().deviation);

  const auto exact = classical_limit_sweep_automorphism(s, {Family::fix_j1, 0.7, 0.4}, 1.0, {0.0});
  CHECK(exact[0].deviation <= 1e-12);

  CHECK_THROWS_AS(
      classical_limit_sweep_automorphism(s, {Family::fix_I, 0.1, 0.2}, 1.0, hbars),
      std::invalid_argument);
}
