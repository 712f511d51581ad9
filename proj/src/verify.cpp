#include "sh2sr/verify.hpp"

#include <algorithm>
#include <cmath>

#include "sh2sr/geodesic.hpp"
#include "sh2sr/oracle.hpp"
#include "sh2sr/symmetry.hpp"

namespace sh2sr {

namespace {
constexpr double kPi = 3.14159265358979323846;

double component_distance(const GroupElement& a, const GroupElement& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}
}  // namespace

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int SplitMix64::pick_sign() { return (next_u64() & 1) ? 1 : -1; }

PhasePoint random_covector(SplitMix64& rng, Stratum which) {
  switch (which) {
    case Stratum::C1:
      for (;;) {
        const double gamma = rng.uniform(0.0, 4.0 * kPi);
        const double c = rng.uniform(-1.9, 1.9);
        const double e = 0.5 * c * c - std::cos(gamma);
        if (e > -0.98 && e < 0.95) return {gamma, c};
      }
    case Stratum::C2: {
      const double gamma = rng.uniform(0.0, 4.0 * kPi);
      const double c = rng.pick_sign() * rng.uniform(2.1, 6.0);
      return {gamma, c};
    }
    case Stratum::C3:
      for (;;) {
        const double gamma = rng.uniform(0.0, 4.0 * kPi);
        const double cos_half = std::cos(0.5 * gamma);
        if (std::abs(cos_half) < 0.05) continue;
        // c = +-2|cos(gamma/2)| puts the point on the separatrix up to
        // rounding, inside the classification band.
        return {gamma, 2.0 * rng.pick_sign() * std::abs(cos_half)};
      }
    case Stratum::C4:
      return {(rng.next_u64() & 1) ? 2.0 * kPi : 0.0, 0.0};
    default:
      return {(rng.next_u64() & 1) ? 3.0 * kPi : kPi, 0.0};
  }
}

CheckResult sweep_closed_form(Stratum which, std::uint64_t seed, int n,
                              const std::vector<double>& times, double tolerance,
                              double oracle_tol) {
  SplitMix64 rng(seed);
  double worst = 0.0;
  std::size_t cases = 0;
  for (int trial = 0; trial < n; ++trial) {
    const PhasePoint p0 = random_covector(rng, which);
    const Extremal ex(p0);
    const FullState s0 = full_from_phase(p0);
    for (const double t : times) {
      const GroupElement closed = ex.at(t);
      const GroupElement ode = endpoint_of(integrate_full(s0, t, oracle_tol));
      worst = std::max(worst, component_distance(closed, ode));
      ++cases;
    }
  }
  std::string name = "closed_form_vs_oracle_";
  name += (which == Stratum::C1 ? "C1" : which == Stratum::C2 ? "C2" : "C3");
  return {name, worst, tolerance, cases, worst <= tolerance};
}

CheckResult sweep_equivariance(int reflection, std::uint64_t seed, int n,
                               double t_max, double tolerance) {
  SplitMix64 rng(seed + static_cast<std::uint64_t>(reflection));
  constexpr Stratum kStrata[3] = {Stratum::C1, Stratum::C2, Stratum::C3};
  double worst = 0.0;
  for (int trial = 0; trial < n; ++trial) {
    const PhasePoint p0 = random_covector(rng, kStrata[trial % 3]);
    const double t = rng.uniform(1e-3, t_max);
    worst = std::max(worst, check_equivariance(reflection, p0, t));
  }
  return {"equivariance_eps" + std::to_string(reflection), worst, tolerance,
          static_cast<std::size_t>(n), worst <= tolerance};
}

CheckResult sweep_degenerate(double t_max, int n, double tolerance) {
  double worst = 0.0;
  std::size_t cases = 0;
  const PhasePoint seeds[4] = {{0.0, 0.0}, {2.0 * kPi, 0.0}, {kPi, 0.0}, {3.0 * kPi, 0.0}};
  const double dirs[4] = {1.0, -1.0, 1.0, -1.0};
  for (int s = 0; s < 4; ++s) {
    const Extremal ex(seeds[s]);
    const bool along_x = s < 2;
    for (int i = 0; i <= n; ++i) {
      const double t = t_max * i / n;
      const GroupElement q = ex.at(t);
      const GroupElement want = along_x ? GroupElement{dirs[s] * t, 0.0, 0.0}
                                        : GroupElement{0.0, 0.0, dirs[s] * t};
      worst = std::max(worst, component_distance(q, want));
      ++cases;
    }
  }
  return {"degenerate_C4_C5", worst, tolerance, cases, worst <= tolerance};
}

std::vector<CheckResult> run_verification(std::uint64_t seed, int n,
                                          double tolerance, double oracle_tol) {
  std::vector<CheckResult> out;
  const std::vector<double> times = {0.5, 1.0, 2.0, 5.0};
  const int per_stratum = std::max(1, n / 3);
  out.push_back(sweep_closed_form(Stratum::C1, seed, per_stratum, times, tolerance,
                                  oracle_tol));
  out.push_back(sweep_closed_form(Stratum::C2, seed + 101, per_stratum, times,
                                  tolerance, oracle_tol));
  out.push_back(sweep_closed_form(Stratum::C3, seed + 202, per_stratum, times,
                                  tolerance, oracle_tol));
  for (int i = 1; i <= 7; ++i) {
    out.push_back(sweep_equivariance(i, seed + 300, std::max(1, n / 4), 5.0, 1e-8));
  }
  out.push_back(sweep_degenerate(100.0, 200, 1e-12));
  return out;
}

}  // namespace sh2sr
