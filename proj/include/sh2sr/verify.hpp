#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sh2sr/pendulum.hpp"

namespace sh2sr {

/**
 * Randomized verification sweeps: closed forms against the integration
 * oracle, exponential-map equivariance under the reflection group, and
 * exactness on the equilibrium strata.  All randomness is drawn through a
 * seeded generator with a fixed bit-to-double mapping, so a given seed
 * reproduces byte-identical reports on any platform.
 */

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t cases = 0;
  bool pass = false;
};

/// Deterministic uniform double in [lo, hi) from a 64-bit generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double uniform(double lo, double hi);
  int pick_sign();  ///< +1 or -1

 private:
  std::uint64_t state_;
};

/// Random covector on the requested stratum, kept away from the energy
/// bands where the elliptic charts degenerate.
PhasePoint random_covector(SplitMix64& rng, Stratum which);

/// max componentwise |exp_map - oracle| over n covectors of the given
/// stratum and the given times.
CheckResult sweep_closed_form(Stratum which, std::uint64_t seed, int n,
                              const std::vector<double>& times, double tolerance,
                              double oracle_tol);

/// max equivariance deviation of reflection i over n random (covector, t)
/// pairs with t in (0, t_max], covectors drawn from C1, C2, C3 cyclically.
CheckResult sweep_equivariance(int reflection, std::uint64_t seed, int n,
                               double t_max, double tolerance);

/// Exactness of the C4 / C5 straight-line trajectories over a time grid.
CheckResult sweep_degenerate(double t_max, int n, double tolerance);

/// The standard report: closed form per stratum, equivariance for
/// i = 1..7, degenerate exactness.
std::vector<CheckResult> run_verification(std::uint64_t seed, int n,
                                          double tolerance, double oracle_tol);

}  // namespace sh2sr
