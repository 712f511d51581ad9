#pragma once

#include "sh2sr/errors.hpp"

namespace sh2sr {

/**
 * Jacobi elliptic functions and integrals for modulus k in [0, 1].
 *
 * sn, cn, dn are computed by the descending Landen (arithmetic-geometric
 * mean) transformation; the incomplete integrals use Carlson's symmetric
 * forms R_F and R_D.  The degenerate moduli are handled by exact branches:
 * k = 0 gives the circular functions, k = 1 the hyperbolic ones.  A modulus
 * within 1e-12 of 1 is snapped to the exact k = 1 branch, since K(k)
 * diverges there and the separatrix is treated as its own case throughout
 * this library.
 *
 * Arguments with |u| > 1e8 are rejected instead of range-reduced: the
 * amplitude loses absolute precision at that scale and the trajectory
 * times of interest are O(10).
 */

/// Values of sn, cn, dn and the amplitude am at a common argument.
struct JacobiTriple {
  double sn;
  double cn;
  double dn;
  double am;  ///< amplitude, radians; am(u + 4K) = am(u) + 2*pi
};

/// Largest accepted |u|; beyond this the amplitude is not reliable.
inline constexpr double kMaxEllipticArgument = 1e8;

/// Moduli with 1 - k below this are evaluated on the exact k = 1 branch.
inline constexpr double kUnitModulusBand = 1e-12;

/// sn(u,k), cn(u,k), dn(u,k), am(u,k).
/// Throws std::domain_error for non-finite u, |u| > 1e8, or k outside [0,1].
JacobiTriple jacobi(double u, double k);

/// Complete elliptic integral of the first kind K(k), for 0 <= k < 1.
/// Throws PoleError at k = 1 (within the unit-modulus band) where K diverges,
/// std::domain_error outside [0,1].
double complete_K(double k);

/// Complete elliptic integral of the second kind, E(K(k)) in the argument
/// convention below.
double complete_E(double k);

/// E(u,k) = integral of dn^2(t,k) dt from 0 to u (argument convention,
/// not amplitude).  Odd in u; E(u,0) = u; E(u,1) = tanh u.
double epsilon_incomplete(double u, double k);

/// Inverse of the amplitude: inverse_am(am(u,k), k) = u for k < 1.
/// This is the incomplete integral of the first kind F(theta,k) extended to
/// all real theta by F(theta + pi) = F(theta) + 2K.  Throws PoleError at
/// k = 1 where the amplitude is not surjective.
double inverse_am(double theta, double k);

}  // namespace sh2sr
