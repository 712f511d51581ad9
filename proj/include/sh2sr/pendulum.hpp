#pragma once

#include <string>

#include "sh2sr/errors.hpp"

namespace sh2sr {

/**
 * The vertical subsystem: a mathematical pendulum on the doubled phase
 * cylinder (gamma, c) with gamma in R/4piZ, and its stratification by the
 * energy E = c^2/2 - cos gamma into
 *
 *   C1  oscillating,  E in (-1, 1)
 *   C2  rotating,     E in (1, inf)
 *   C3  separatrix,   E = 1, c != 0
 *   C4  stable equilibria,   gamma = 2pi*i, c = 0
 *   C5  unstable equilibria, gamma = pi + 2pi*i, c = 0
 *
 * together with the elliptic charts (phi, k) that rectify the flow on
 * C1, C2, C3.
 */

struct PhasePoint {
  double gamma = 0.0;  ///< normalized to [0, 4pi) by the operations below
  double c = 0.0;
};

enum class Stratum { C1, C2, C3, C4, C5 };

struct StratumId {
  Stratum major = Stratum::C1;
  int i = 0;     ///< 0|1: sgn(cos gamma/2) = (-1)^i for C1, C3; gamma/2pi for C4, C5
  int sign = 0;  ///< sgn c for C2, C3; 0 where unused

  /// "C1^0", "C2^+", "C3^1-", "C4^0", "C5^1", ...
  std::string name() const;
};

/// Rectified coordinates of the pendulum flow on C1, C2, C3.
/// Case 1: k in (0,1), phi in [0, 4K(k)).  Case 2: k in (0,1),
/// phi in [0, 4kK(k)) with elliptic argument phi/k.  Case 3: k = 1,
/// phi in (-inf, inf).
struct EllipticCoords {
  StratumId stratum;
  double k = 0.0;
  double phi = 0.0;
  int s1 = 1;  ///< sgn(cos gamma/2), cases 1 and 3
  int s2 = 1;  ///< sgn(c), cases 2 and 3
};

/// Band for deciding the energy equalities E = +-1; inputs within it are
/// assigned to the degenerate stratum.
inline constexpr double kEnergyTol = 1e-9;

double normalize_gamma(double gamma);

double energy(const PhasePoint& p);

StratumId classify(const PhasePoint& p);

/// Inverse of the elliptic chart.  Throws UnsupportedStratumError on C4, C5.
EllipticCoords to_elliptic(const PhasePoint& p);

PhasePoint from_elliptic(const EllipticCoords& e);

/// Pendulum flow for time t: phi -> phi + t in the elliptic chart,
/// equilibria are fixed points.  Exactly energy-conserving.
PhasePoint flow_vertical(const PhasePoint& p, double t);

}  // namespace sh2sr
