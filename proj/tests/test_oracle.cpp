#include <doctest.h>

#include <cmath>

#include "sh2sr/errors.hpp"
#include "sh2sr/oracle.hpp"
#include "sh2sr/verify.hpp"

using namespace sh2sr;

namespace {

constexpr double kPi = 3.14159265358979323846;

double level_set_drift(const FullState& s) {
  return std::abs(s.h1 * s.h1 + s.h2 * s.h2 - 1.0);
}

double pendulum_energy_of(const FullState& s) {
  return 2.0 * s.h0 * s.h0 - s.h1 * s.h1 + s.h2 * s.h2;
}

double dist(const FullState& a, const FullState& b) {
  return std::max({std::abs(a.h1 - b.h1), std::abs(a.h2 - b.h2), std::abs(a.h0 - b.h0),
                   std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("degenerate straight lines") {
  const FullState c4 = integrate_full({1, 0, 0, 0, 0, 0}, 2.5, 1e-11);
  CHECK(c4.x == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(std::abs(c4.y) <= 1e-12);
  CHECK(std::abs(c4.z) <= 1e-12);

  const FullState c5 = integrate_full({0, 1, 0, 0, 0, 0}, 1.2, 1e-11);
  CHECK(c5.z == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(std::abs(c5.x) <= 1e-12);
  CHECK(std::abs(c5.y) <= 1e-12);
}

TEST_CASE("frozen reference endpoint") {
  // from (gamma, c) = (pi/3, 0.4) for t = 1, high-precision Taylor-series value
  const FullState s = integrate_full(full_from_phase({kPi / 3.0, 0.4}), 1.0, 1e-12);
  CHECK(s.x == doctest::Approx(0.89289469092252300).epsilon(1e-10));
  CHECK(s.y == doctest::Approx(0.22979576100611631).epsilon(1e-10));
  CHECK(s.z == doctest::Approx(0.52196658233302828).epsilon(1e-10));
}

TEST_CASE("conserved quantities over long runs") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const Stratum s = trial % 3 == 0 ? Stratum::C1 : trial % 3 == 1 ? Stratum::C2 : Stratum::C3;
    const FullState s0 = full_from_phase(random_covector(rng, s));
    const double e0 = pendulum_energy_of(s0);
    for (double t : {2.5, 10.0}) {
      const FullState st = integrate_full(s0, t, 1e-11);
      CHECK(level_set_drift(st) <= 1e-10);
      CHECK(std::abs(pendulum_energy_of(st) - e0) <= 1e-9);
    }
  }
}

TEST_CASE("self-consistency across tolerances") {
  const FullState s0 = full_from_phase({1.1, 0.7});
  // two runs with tolerances 100x apart agree far inside the coarse one
  const FullState hundred = integrate_full(s0, 1.0, 100.0 * kOracleDefaultTol);
  const FullState base = integrate_full(s0, 1.0, kOracleDefaultTol);
  CHECK(dist(hundred, base) <= 1e-8);

  const FullState coarse = integrate_full(s0, 5.0, 1e-9);
  const FullState fine = integrate_full(s0, 5.0, 1e-13);
  CHECK(dist(coarse, fine) <= 1e-7);
}

TEST_CASE("fixed-step convergence order") {
  const FullState s0 = full_from_phase({1.3, 0.5});
  const FullState ref = integrate_full(s0, 2.0, 1e-13);
  const double e1 = dist(integrate_full_fixed(s0, 2.0, 50), ref);
  const double e2 = dist(integrate_full_fixed(s0, 2.0, 100), ref);
  const double ratio = e1 / e2;
  // 5th order: halving h divides the error by about 2^5
  CHECK(ratio > 20.0);
  CHECK(ratio < 45.0);
}

TEST_CASE("adaptive tolerance controls the endpoint error") {
  const FullState s0 = full_from_phase({0.9, -0.6});
  const FullState ref = integrate_full(s0, 5.0, 1e-13);
  double prev = 1e9;
  for (double tol : {1e-7, 1e-9, 1e-11}) {
    const double err = dist(integrate_full(s0, 5.0, tol), ref);
    CHECK(err < prev + 1e-14);
    CHECK(err <= 200.0 * tol);
    prev = err;
  }
}

TEST_CASE("pendulum equilibria are fixed") {
  for (double t : {0.5, 7.0}) {
    const PhasePoint a = integrate_pendulum({0.0, 0.0}, t, 1e-11);
    CHECK(std::abs(a.gamma) <= 1e-10);
    CHECK(std::abs(a.c) <= 1e-10);
    const PhasePoint b = integrate_pendulum({kPi, 0.0}, t, 1e-11);
    CHECK(b.gamma == doctest::Approx(kPi).epsilon(1e-10));
    CHECK(std::abs(b.c) <= 1e-10);
  }
}

TEST_CASE("frozen pendulum reference") {
  const PhasePoint p = integrate_pendulum({kPi / 3.0, 0.4}, 1.7, 1e-12);
  CHECK(p.gamma == doctest::Approx(0.47394095774564068).epsilon(1e-10));
  CHECK(p.c == doctest::Approx(-0.96930548700659247).epsilon(1e-10));
}

TEST_CASE("pendulum projection of the full system tracks the winding") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    // rotating covectors wrap gamma around the doubled circle several times
    const Stratum s = trial % 2 == 0 ? Stratum::C2 : Stratum::C1;
    const PhasePoint p0 = random_covector(rng, s);
    const double t = rng.uniform(2.0, 9.0);
    const PhasePoint direct = integrate_pendulum(p0, t, 1e-12);
    const PhasePoint projected = pendulum_projection(full_from_phase(p0), t, 1e-12);
    CHECK(std::abs(projected.gamma - direct.gamma) <= 1e-9);
    CHECK(std::abs(projected.c - direct.c) <= 1e-9);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(integrate_full({0.5, 0.2, 0, 0, 0, 0}, 1.0, 1e-11), std::domain_error);
  CHECK_THROWS_AS(integrate_full({1, 0, 0, 0, 0, 0}, 1.0, 1e-3), std::domain_error);
  CHECK_THROWS_AS(integrate_full({1, 0, 0, 0, 0, 0}, 1.0, 1e-15), std::domain_error);
  CHECK_THROWS_AS(integrate_pendulum({0.3, 0.1}, 1.0, 0.5), std::domain_error);
}

TEST_SUITE_END();
