#pragma once

#include <cstddef>
#include <vector>

#include "sh2sr/pendulum.hpp"
#include "sh2sr/sh2.hpp"

namespace sh2sr {

/**
 * Closed-form arc-length-parametrized extremal trajectories from the
 * identity, for every stratum of the phase cylinder, plus curvature and
 * cusp/inflection analysis of the planar projection (x_t, y_t).
 */

struct ExtremalSample {
  double t = 0.0;  ///< arc length
  GroupElement q;
  PhasePoint p;
};

struct ProjectionFeature {
  enum class Kind { inflection, cusp };
  Kind kind = Kind::inflection;
  double t = 0.0;
  double tolerance = 0.0;  ///< width of the final bisection bracket
};

/// |cos(gamma/2)| below this reports a cusp (infinite curvature).
inline constexpr double kCuspTol = 1e-9;

/// One extremal trajectory with its per-trajectory constants (elliptic
/// chart, w, initial elliptic values) computed once at construction.
class Extremal {
 public:
  explicit Extremal(const PhasePoint& p0);

  /// Endpoint at arc length t (the exponential map of the initial covector).
  GroupElement at(double t) const;

  /// Pendulum state at arc length t, via the rectified chart.
  PhasePoint phase_at(double t) const;

  const StratumId& stratum() const { return stratum_; }

 private:
  StratumId stratum_;
  PhasePoint p0_;
  // case 1/2: modulus, initial argument, complementary k'^2, constant w,
  // initial E and sn; case 3: phi0 and w = cosh phi0; case 4/5: direction.
  double k_ = 0.0;
  double arg0_ = 0.0;  // phi0 (cases 1, 3) or psi0 = phi0/k (case 2)
  double kp2_ = 0.0;
  double w_ = 0.0;
  double e0_ = 0.0;
  double sn0_ = 0.0;
  double tanh0_ = 0.0;
  int s1_ = 1;
  int s2_ = 1;
  double direction_ = 1.0;
};

/// Exp(p0, t): endpoint of the extremal with initial covector p0.
/// Equivalent to Extremal(p0).at(t); use Extremal for repeated evaluation.
GroupElement exp_map(const PhasePoint& p0, double t);

/// n samples at t_i = i * t_max / (n-1), i = 0..n-1.
/// Throws std::invalid_argument unless n >= 2 and t_max > 0.
std::vector<ExtremalSample> sample_trajectory(const PhasePoint& p0, double t_max,
                                              std::size_t n);

/// Signed curvature of the planar projection at arc length t:
///   kappa = sin(gamma/2) / (cos(gamma/2) * cosh(2z)^(3/2)).
/// Returns +-infinity at cusps (|cos(gamma/2)| < kCuspTol).
double curvature_xy(const PhasePoint& p0, double t);

/// Roots of sin(gamma_t/2) (inflections) and cos(gamma_t/2) (cusps) on
/// [0, t_max], bisection-refined.  Equilibrium strata have none.
std::vector<ProjectionFeature> find_projection_features(const PhasePoint& p0,
                                                        double t_max);

}  // namespace sh2sr
