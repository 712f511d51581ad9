#pragma once

#include <cmath>

#include "sh2sr/pendulum.hpp"
#include "sh2sr/sh2.hpp"

namespace sh2sr {

/**
 * Maxwell sets generated by the reflections eps^1, eps^2, eps^6 (the ones
 * with 2-dimensional fixed-point sets in the image).  A pair (covector,
 * time) lies in MAX^i when the reflected extremal is distinct from the
 * original but reaches the same endpoint at the same arc length.
 */

/// Midpoint coordinates in the elliptic chart: tau = (phi_t + phi)/2 and
/// p = t/2, both divided by k on the rotating stratum C2.
struct MaxwellCoords {
  double tau = 0.0;
  double p_half = 0.0;
};

MaxwellCoords maxwell_coords(const EllipticCoords& e, double t);

/// R1 = y cosh(z/2) - x sinh(z/2),  R2 = x cosh(z/2) - y sinh(z/2).
/// In hyperbolic coordinates x = rho cosh chi, y = rho sinh chi these are
/// rho sinh(chi - z/2) and rho cosh(chi - z/2), so R2^2 - R1^2 = x^2 - y^2.
struct RPair {
  double r1 = 0.0;
  double r2 = 0.0;
};

RPair r_functions(const GroupElement& q);

/// Relative scale used when testing R1, R2, z, x, y against zero.
inline double maxwell_zero_tol(const GroupElement& q);

/// Fixed points of eps^i in the image of Exp: q^1 = q iff R1 = 0,
/// q^2 = q iff z = 0, q^3 = q iff y = z = 0, q^4 = q iff x = z = 0,
/// q^5 = q iff x = y = z = 0, q^6 = q iff R2 = 0, q^7 = q iff x = y = 0.
/// i must be 1..7.
bool fixed_point_image(int i, const GroupElement& q);

/// Fixed points of eps^i in the preimage, i in {1, 2, 6}:
///   eps^1: cn tau = 0 on C1; impossible on C2, C3.
///   eps^2: sn tau = 0 on C1, C2; tau = 0 on C3.
///   eps^6: cn tau = 0 on C2; impossible on C1, C3.
/// Throws std::invalid_argument for other i (their fixed-point sets are
/// lower-dimensional and not tracked), UnsupportedStratumError on C4, C5.
bool fixed_point_preimage(int i, const EllipticCoords& e, double t);

struct MaxwellVerdict {
  bool in_max1 = false, in_max2 = false, in_max6 = false;
  bool fixed1 = false, fixed2 = false, fixed6 = false;
  double r1 = 0.0, r2 = 0.0;
  double sn_tau = 0.0, cn_tau = 0.0;
  double z = 0.0;
};

/// Membership of (p0, t) in MAX^1, MAX^2, MAX^6:
///   MAX^1: R1(q) = 0, plus cn tau != 0 on C1;
///   MAX^2: z = 0, plus sn tau != 0 on C1, C2 / tau != 0 on C3;
///   MAX^6: R2(q) = 0, plus cn tau != 0 on C2.
/// Throws UnsupportedStratumError on the equilibrium strata.
MaxwellVerdict maxwell_membership(const PhasePoint& p0, double t);

inline double maxwell_zero_tol(const GroupElement& q) {
  return 1e-9 * (1.0 + std::abs(q.x) + std::abs(q.y));
}

}  // namespace sh2sr
