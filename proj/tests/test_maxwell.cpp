#include <doctest.h>

#include <cmath>
#include <vector>

#include "sh2sr/elliptic.hpp"
#include "sh2sr/geodesic.hpp"
#include "sh2sr/maxwell.hpp"
#include "sh2sr/symmetry.hpp"
#include "sh2sr/verify.hpp"

using namespace sh2sr;

namespace {

constexpr double kPi = 3.14159265358979323846;

double dist(const GroupElement& a, const GroupElement& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

double covector_gap(const PhasePoint& a, const PhasePoint& b) {
  double dg = std::abs(normalize_gamma(a.gamma) - normalize_gamma(b.gamma));
  dg = std::min(dg, 4.0 * kPi - dg);
  return std::max(dg, std::abs(a.c - b.c));
}

// Sign-change roots of f on [lo, hi], bisection-refined.
template <typename F>
std::vector<double> roots_of(const F& f, double lo, double hi, int grid) {
  std::vector<double> out;
  double prev_t = lo, prev_f = f(lo);
  for (int i = 1; i <= grid; ++i) {
    const double t = lo + (hi - lo) * i / grid;
    const double ft = f(t);
    if ((prev_f < 0.0) != (ft < 0.0)) {
      double a = prev_t, b = t, fa = prev_f;
      for (int it = 0; it < 100; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fa < 0.0) != (fm < 0.0)) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      out.push_back(0.5 * (a + b));
    }
    prev_t = t;
    prev_f = ft;
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("maxwell");

TEST_CASE("R functions") {
  const RPair flat = r_functions({1, 2, 0});
  CHECK(flat.r1 == 2.0);
  CHECK(flat.r2 == 1.0);

  const RPair on_axis = r_functions({std::cosh(1.0), std::sinh(1.0), 2.0});
  CHECK(std::abs(on_axis.r1) <= 1e-15);

  const RPair origin = r_functions({0, 0, 5.3});
  CHECK(origin.r1 == 0.0);
  CHECK(origin.r2 == 0.0);
}

TEST_CASE("hyperbolic identity R2^2 - R1^2 = x^2 - y^2") {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const GroupElement q{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-3, 3)};
    const RPair r = r_functions(q);
    CHECK(std::abs((r.r2 * r.r2 - r.r1 * r.r1) - (q.x * q.x - q.y * q.y)) <= 1e-10);
    if (q.x * q.x > q.y * q.y && q.x > 0) {
      // in hyperbolic coordinates R1 = rho sinh(chi - z/2)
      const double chi = std::atanh(q.y / q.x);
      CHECK(std::signbit(r.r1) == std::signbit(std::sinh(chi - 0.5 * q.z)));
    }
  }
}

TEST_CASE("fixed points in the image") {
  CHECK(fixed_point_image(7, {0, 0, 5}));
  CHECK(fixed_point_image(2, {1, 2, 0}));
  CHECK_FALSE(fixed_point_image(5, {1, 0, 0}));
  CHECK(fixed_point_image(5, {0, 0, 0}));

  SUBCASE("agrees with the direct endpoint test") {
    SplitMix64 rng(52);
    for (int trial = 0; trial < 1000; ++trial) {
      const GroupElement q{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-2, 2)};
      for (int i = 1; i <= 7; ++i) {
        const bool direct = dist(reflect_endpoint(i, q), q) <= 1e-10;
        // the predicate may only disagree within its tolerance shell
        if (fixed_point_image(i, q) != direct) {
          const double margin = 20.0 * maxwell_zero_tol(q);
          CHECK(dist(reflect_endpoint(i, q), q) <= margin);
        }
      }
    }
  }

  SUBCASE("constructed fixed points of each reflection") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
      const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), zz = rng.uniform(-2, 2);
      CHECK(fixed_point_image(2, {a, b, 0}));
      CHECK(fixed_point_image(3, {a, 0, 0}));
      CHECK(fixed_point_image(4, {0, b, 0}));
      CHECK(fixed_point_image(7, {0, 0, zz}));
      // R1 = 0 along y = x tanh(z/2)
      CHECK(fixed_point_image(1, {a, a * std::tanh(0.5 * zz), zz}));
      // R2 = 0 along x = y tanh(z/2)
      CHECK(fixed_point_image(6, {b * std::tanh(0.5 * zz), b, zz}));
    }
  }
}

TEST_CASE("fixed points in the preimage") {
  SUBCASE("quarter-period zero of cn for eps^1 on C1") {
    const PhasePoint p0{kPi / 3.0, 0.3};
    EllipticCoords e = to_elliptic(p0);
    const double t = 1.3;
    e.phi = complete_K(e.k) - 0.5 * t;  // tau = K
    CHECK(fixed_point_preimage(1, e, t));
    CHECK_FALSE(fixed_point_preimage(2, e, t));
  }
  SUBCASE("zero of sn for eps^2 on C1") {
    const PhasePoint p0{kPi / 3.0, 0.3};
    EllipticCoords e = to_elliptic(p0);
    const double t = 0.9;
    e.phi = 4.0 * complete_K(e.k) - 0.5 * t;  // tau = 4K, sn = 0
    CHECK(fixed_point_preimage(2, e, t));
    CHECK_FALSE(fixed_point_preimage(1, e, t));
  }
  SUBCASE("eps^1 has no fixed points off C1") {
    const EllipticCoords e2 = to_elliptic({0.0, 3.0});
    CHECK_FALSE(fixed_point_preimage(1, e2, 0.7));
    const EllipticCoords e3 = to_elliptic({0.0, 2.0});
    CHECK_FALSE(fixed_point_preimage(1, e3, 0.7));
    CHECK_FALSE(fixed_point_preimage(6, e3, 0.7));
  }
  SUBCASE("tau = 0 for eps^2 on C3") {
    EllipticCoords e = to_elliptic({0.0, 2.0});
    const double t = 2.4;
    e.phi = -0.5 * t;
    CHECK(fixed_point_preimage(2, e, t));
  }
  SUBCASE("only reflections 1, 2, 6 are tracked") {
    const EllipticCoords e = to_elliptic({kPi / 3.0, 0.3});
    CHECK_THROWS_AS(fixed_point_preimage(3, e, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_preimage(7, e, 1.0), std::invalid_argument);
  }
}

TEST_CASE("midpoint coordinates recover both chart endpoints") {
  SplitMix64 rng(57);
  constexpr Stratum kStrata[3] = {Stratum::C1, Stratum::C2, Stratum::C3};
  for (int trial = 0; trial < 60; ++trial) {
    const PhasePoint p0 = random_covector(rng, kStrata[trial % 3]);
    const EllipticCoords e = to_elliptic(p0);
    const double t = rng.uniform(0.1, 8.0);
    const MaxwellCoords mc = maxwell_coords(e, t);
    const double scale = e.stratum.major == Stratum::C2 ? e.k : 1.0;
    CHECK(scale * (mc.tau - mc.p_half) == doctest::Approx(e.phi).epsilon(1e-12));
    CHECK(scale * (mc.tau + mc.p_half) == doctest::Approx(e.phi + t).epsilon(1e-12));
  }
  CHECK_THROWS_AS(maxwell_coords({{Stratum::C4, 0, 0}, 0, 0, 1, 1}, 1.0),
                  UnsupportedStratumError);
}

TEST_CASE("membership requires a non-degenerate stratum") {
  CHECK_THROWS_AS(maxwell_membership({0.0, 0.0}, 1.0), UnsupportedStratumError);
  CHECK_THROWS_AS(maxwell_membership({kPi, 0.0}, 1.0), UnsupportedStratumError);
}

TEST_CASE("generic points are not Maxwell points") {
  SplitMix64 rng(54);
  constexpr Stratum kStrata[3] = {Stratum::C1, Stratum::C2, Stratum::C3};
  for (int trial = 0; trial < 60; ++trial) {
    const PhasePoint p0 = random_covector(rng, kStrata[trial % 3]);
    const MaxwellVerdict v = maxwell_membership(p0, rng.uniform(0.3, 6.0));
    CHECK_FALSE(v.in_max1);
    CHECK_FALSE(v.in_max2);
    CHECK_FALSE(v.in_max6);
  }
}

TEST_CASE("MAX^2 on C1: z-roots split into Maxwell and fixed points") {
  SplitMix64 rng(55);
  int maxwell_seen = 0, fixed_seen = 0;
  for (int trial = 0; trial < 40 && (maxwell_seen < 6 || fixed_seen < 6); ++trial) {
    const PhasePoint p0 = random_covector(rng, Stratum::C1);
    const Extremal ex(p0);
    const auto z_of = [&ex](double t) { return ex.at(t).z; };
    for (double t_root : roots_of(z_of, 0.25, 16.0, 600)) {
      const MaxwellVerdict v = maxwell_membership(p0, t_root);
      const PhasePoint partner = reflect_preimage(2, p0, t_root);
      if (std::abs(v.sn_tau) > 0.05) {
        // genuine Maxwell point: same endpoint, distinct covector
        CHECK(v.in_max2);
        CHECK_FALSE(v.fixed2);
        CHECK(dist(exp_map(p0, t_root), exp_map(partner, t_root)) <= 1e-8);
        CHECK(covector_gap(p0, partner) >= 1e-6);
        ++maxwell_seen;
      } else if (std::abs(v.sn_tau) < 1e-6) {
        // fixed point of eps^2: excluded from the Maxwell set
        CHECK(v.fixed2);
        CHECK_FALSE(v.in_max2);
        CHECK(covector_gap(p0, partner) <= 1e-5);
        ++fixed_seen;
      }
    }
  }
  CHECK(maxwell_seen >= 6);
  CHECK(fixed_seen >= 6);
}

TEST_CASE("MAX^6 on C2: R2 roots with cn(tau) != 0 are Maxwell points") {
  SplitMix64 rng(56);
  int maxwell_seen = 0;
  for (int trial = 0; trial < 30 && maxwell_seen < 5; ++trial) {
    const PhasePoint p0 = random_covector(rng, Stratum::C2);
    const Extremal ex(p0);
    const auto r2_of = [&ex](double t) { return r_functions(ex.at(t)).r2; };
    for (double t_root : roots_of(r2_of, 0.25, 14.0, 500)) {
      const MaxwellVerdict v = maxwell_membership(p0, t_root);
      if (std::abs(v.cn_tau) > 0.05) {
        CHECK(v.in_max6);
        const PhasePoint partner = reflect_preimage(6, p0, t_root);
        CHECK(dist(exp_map(p0, t_root), exp_map(partner, t_root)) <= 1e-8);
        CHECK(covector_gap(p0, partner) >= 1e-6);
        ++maxwell_seen;
      } else if (std::abs(v.cn_tau) < 1e-6) {
        CHECK(v.fixed6);
        CHECK_FALSE(v.in_max6);
      }
    }
  }
  CHECK(maxwell_seen >= 5);
}

TEST_SUITE_END();
