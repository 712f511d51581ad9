#pragma once

#include "sh2sr/pendulum.hpp"
#include "sh2sr/sh2.hpp"

namespace sh2sr {

/**
 * Independent brute-force oracle: adaptive Dormand-Prince 5(4) integration
 * of the full normal Hamiltonian system
 *
 *   (h1', h2', h0', x', y', z') =
 *   (h2 h0, -h1 h0, h1 h2, h1 cosh z, h1 sinh z, h2)
 *
 * and of the pendulum (gamma', c') = (c, -sin gamma).  This module never
 * touches the elliptic functions or the closed-form trajectories; it is the
 * reference everything else is validated against.
 */

struct FullState {
  double h1 = 1.0;
  double h2 = 0.0;
  double h0 = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline constexpr double kOracleDefaultTol = 1e-11;
inline constexpr double kOracleMinTol = 1e-13;
inline constexpr double kOracleMaxTol = 1e-6;

/// Initial full state on the level set H = 1/2 from a pendulum covector:
/// h1 = cos(gamma/2), h2 = sin(gamma/2), h0 = -c/2, (x,y,z) = identity.
FullState full_from_phase(const PhasePoint& p);

GroupElement endpoint_of(const FullState& s);

/// Integrates the full system for time t with local error control at tol.
/// Requires h1^2 + h2^2 = 1 within 1e-12 at s0 and tol in [1e-13, 1e-6];
/// throws std::domain_error otherwise, StiffnessError on step underflow.
FullState integrate_full(const FullState& s0, double t, double tol = kOracleDefaultTol);

/// Integrates the pendulum for time t; gamma is integrated on the real line
/// and normalized to [0, 4pi) at the end.
PhasePoint integrate_pendulum(const PhasePoint& p0, double t,
                              double tol = kOracleDefaultTol);

/// Integrates the full system and projects to the pendulum via
/// gamma = 2 atan2(h2, h1), c = -2 h0, tracking the winding of gamma on the
/// doubled circle across accepted steps.
PhasePoint pendulum_projection(const FullState& s0, double t,
                               double tol = kOracleDefaultTol);

/// Fixed-step Dormand-Prince on the full system (for convergence-order
/// checks; no error control).
FullState integrate_full_fixed(const FullState& s0, double t, int steps);

}  // namespace sh2sr
