#include "sh2sr/maxwell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sh2sr/elliptic.hpp"
#include "sh2sr/geodesic.hpp"
#include "sh2sr/symmetry.hpp"

namespace sh2sr {

namespace {

constexpr double kPreimageTol = 1e-10;
constexpr double kFourPi = 4.0 * 3.14159265358979323846;

void check_maxwell_reflection(int i) {
  if (i != 1 && i != 2 && i != 6) {
    throw std::invalid_argument(
        "preimage fixed points are tracked only for reflections 1, 2, 6");
  }
}

// The defining conditions of the Maxwell set: the reflected covector is
// distinct and its extremal meets the original endpoint at the same time.
// Guards every positive membership verdict, so the stratum-wise shortcut
// conditions can never over-claim.
bool coincidence_holds(int i, const PhasePoint& p0, double t, const GroupElement& q) {
  const PhasePoint partner = reflect_preimage(i, p0, t);
  double dg = std::abs(normalize_gamma(p0.gamma) - partner.gamma);
  dg = std::min(dg, kFourPi - dg);
  if (std::max(dg, std::abs(p0.c - partner.c)) < 1e-6) return false;
  const GroupElement qi = exp_map(partner, t);
  const double gap =
      std::max({std::abs(q.x - qi.x), std::abs(q.y - qi.y), std::abs(q.z - qi.z)});
  return gap <= 1e-8;
}

}  // namespace

MaxwellCoords maxwell_coords(const EllipticCoords& e, double t) {
  switch (e.stratum.major) {
    case Stratum::C1:
    case Stratum::C3:
      return {e.phi + 0.5 * t, 0.5 * t};
    case Stratum::C2:
      return {(e.phi + 0.5 * t) / e.k, 0.5 * t / e.k};
    default:
      throw UnsupportedStratumError("no Maxwell coordinates on stratum " +
                                    e.stratum.name());
  }
}

RPair r_functions(const GroupElement& q) {
  const double ch = std::cosh(0.5 * q.z), sh = std::sinh(0.5 * q.z);
  return {q.y * ch - q.x * sh, q.x * ch - q.y * sh};
}

bool fixed_point_image(int i, const GroupElement& q) {
  if (i < 1 || i > 7) throw std::invalid_argument("reflection index must be 1..7");
  const double tol = maxwell_zero_tol(q);
  const RPair r = r_functions(q);
  const bool x0 = std::abs(q.x) < tol;
  const bool y0 = std::abs(q.y) < tol;
  const bool z0 = std::abs(q.z) < tol;
  switch (i) {
    case 1:
      return std::abs(r.r1) < tol;
    case 2:
      return z0;
    case 3:
      return y0 && z0;
    case 4:
      return x0 && z0;
    case 5:
      return x0 && y0 && z0;
    case 6:
      return std::abs(r.r2) < tol;
    default:
      return x0 && y0;
  }
}

bool fixed_point_preimage(int i, const EllipticCoords& e, double t) {
  check_maxwell_reflection(i);
  const Stratum major = e.stratum.major;
  if (major == Stratum::C4 || major == Stratum::C5) {
    throw UnsupportedStratumError("no preimage fixed points on stratum " +
                                  e.stratum.name());
  }
  const MaxwellCoords mc = maxwell_coords(e, t);
  if (major == Stratum::C3) {
    // eps^1 and eps^6 flip sgn c (and sgn cos(gamma/2)), so they have no
    // fixed points on the separatrix.
    return i == 2 && std::abs(mc.tau) < kPreimageTol;
  }
  const JacobiTriple j = jacobi(mc.tau, e.k);
  switch (i) {
    case 1:
      return major == Stratum::C1 && std::abs(j.cn) < kPreimageTol;
    case 2:
      return std::abs(j.sn) < kPreimageTol;
    default:  // 6
      return major == Stratum::C2 && std::abs(j.cn) < kPreimageTol;
  }
}

MaxwellVerdict maxwell_membership(const PhasePoint& p0, double t) {
  const EllipticCoords e = to_elliptic(p0);  // rejects C4, C5
  const Stratum major = e.stratum.major;
  const GroupElement q = exp_map(p0, t);
  const MaxwellCoords mc = maxwell_coords(e, t);

  MaxwellVerdict v;
  const RPair r = r_functions(q);
  v.r1 = r.r1;
  v.r2 = r.r2;
  v.z = q.z;
  if (major == Stratum::C3) {
    v.sn_tau = std::tanh(mc.tau);
    v.cn_tau = 1.0 / std::cosh(mc.tau);
  } else {
    const JacobiTriple j = jacobi(mc.tau, e.k);
    v.sn_tau = j.sn;
    v.cn_tau = j.cn;
  }

  v.fixed1 = fixed_point_preimage(1, e, t);
  v.fixed2 = fixed_point_preimage(2, e, t);
  v.fixed6 = fixed_point_preimage(6, e, t);

  const double tol = maxwell_zero_tol(q);
  const bool r1_zero = std::abs(v.r1) < tol;
  const bool r2_zero = std::abs(v.r2) < tol;
  const bool z_zero = std::abs(q.z) < tol;

  // Prop 7.3: on strata where eps^i has no preimage fixed points the
  // R-condition alone decides.
  v.in_max1 = r1_zero && !v.fixed1;
  v.in_max6 = r2_zero && !v.fixed6;
  if (major == Stratum::C3) {
    v.in_max2 = z_zero && std::abs(mc.tau) >= kPreimageTol;
  } else {
    v.in_max2 = z_zero && std::abs(v.sn_tau) >= kPreimageTol;
  }
  if (v.in_max1) v.in_max1 = coincidence_holds(1, p0, t, q);
  if (v.in_max2) v.in_max2 = coincidence_holds(2, p0, t, q);
  if (v.in_max6) v.in_max6 = coincidence_holds(6, p0, t, q);
  return v;
}

}  // namespace sh2sr
