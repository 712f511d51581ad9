#include "sh2sr/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sh2sr {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

void check_reflection(int i) {
  if (i < 1 || i > 7) throw std::invalid_argument("reflection index must be 1..7");
}

// Each element acts as gamma -> sigma*gamma + a*2pi, c -> delta*c with
// sigma, delta in {+1,-1} and a in {0,1}; the identity is (+1,+1,0).
struct GroupRep {
  int sigma;
  int delta;
  int a;
};

GroupRep rep_of(int i) {
  switch (i) {
    case 0:
      return {+1, +1, 0};
    case 1:
      return {+1, -1, 0};
    case 2:
      return {-1, +1, 0};
    case 3:
      return {-1, -1, 0};
    case 4:
      return {+1, +1, 1};
    case 5:
      return {+1, -1, 1};
    case 6:
      return {-1, +1, 1};
    default:
      return {-1, -1, 1};
  }
}

int index_of(const GroupRep& r) {
  for (int i = 0; i < 8; ++i) {
    const GroupRep c = rep_of(i);
    if (c.sigma == r.sigma && c.delta == r.delta && c.a == r.a) return i;
  }
  return -1;
}

PhasePoint apply_rep(const GroupRep& r, const PhasePoint& p) {
  return {normalize_gamma(r.sigma * p.gamma + r.a * kTwoPi), r.delta * p.c};
}

}  // namespace

int compose_reflections(int i, int j) {
  if (i < 0 || i > 7 || j < 0 || j > 7) {
    throw std::invalid_argument("reflection index must be 0..7");
  }
  const GroupRep ri = rep_of(i), rj = rep_of(j);
  // sigma_i * (a_j * 2pi) is +-2pi, and -2pi = +2pi on the doubled circle,
  // so the offsets simply add mod 2.
  return index_of({ri.sigma * rj.sigma, ri.delta * rj.delta, (ri.a + rj.a) % 2});
}

PhasePoint reflect_phase(int i, const PhasePoint& p) {
  check_reflection(i);
  return apply_rep(rep_of(i), p);
}

PhasePoint reflect_preimage(int i, const PhasePoint& p, double t) {
  check_reflection(i);
  // Time-reversing reflections act through the time-t pendulum state,
  // e.g. eps^1: (gamma, c) -> (gamma_t, -c_t); the others act pointwise.
  const bool reverses = (i == 1 || i == 2 || i == 5 || i == 6);
  return reflect_phase(i, reverses ? flow_vertical(p, t) : p);
}

GroupElement reflect_endpoint(int i, const GroupElement& q) {
  check_reflection(i);
  const double ch = std::cosh(q.z), sh = std::sinh(q.z);
  switch (i) {
    case 1:
      return {q.x * ch - q.y * sh, q.x * sh - q.y * ch, q.z};
    case 2:
      return {q.x * ch - q.y * sh, -q.x * sh + q.y * ch, -q.z};
    case 3:
      return {q.x, -q.y, -q.z};
    case 4:
      return {-q.x, q.y, -q.z};
    case 5:
      return {-q.x * ch + q.y * sh, q.x * sh - q.y * ch, -q.z};
    case 6:
      return {-q.x * ch + q.y * sh, -q.x * sh + q.y * ch, q.z};
    default:
      return {-q.x, -q.y, q.z};
  }
}

std::vector<ExtremalSample> reflect_trajectory(int i,
                                               const std::vector<ExtremalSample>& samples) {
  check_reflection(i);
  const std::size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("reflect_trajectory needs at least two samples");
  if (std::abs(samples.front().t) > 1e-12) {
    throw std::invalid_argument("reflect_trajectory expects samples starting at t = 0");
  }
  const double dt = samples[1].t - samples[0].t;
  for (std::size_t j = 1; j < n; ++j) {
    if (std::abs(samples[j].t - samples[j - 1].t - dt) > 1e-9 * std::max(1.0, dt)) {
      throw std::invalid_argument("reflect_trajectory expects uniformly spaced samples");
    }
  }

  const GroupElement& qt = samples.back().q;
  const double ch = std::cosh(qt.z), sh = std::sinh(qt.z);
  const bool reverses = (i == 1 || i == 2 || i == 5 || i == 6);

  std::vector<ExtremalSample> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const ExtremalSample& ref = reverses ? samples[n - 1 - j] : samples[j];
    const double s = samples[j].t;
    GroupElement qi;
    if (reverses) {
      const double dx = qt.x - ref.q.x, dy = qt.y - ref.q.y, dz = qt.z - ref.q.z;
      switch (i) {
        case 1:
          qi = {ch * dx - sh * dy, sh * dx - ch * dy, dz};
          break;
        case 2:
          qi = {ch * dx - sh * dy, -sh * dx + ch * dy, -dz};
          break;
        case 5:
          qi = {-ch * dx + sh * dy, sh * dx - ch * dy, -dz};
          break;
        default:  // 6
          qi = {-ch * dx + sh * dy, -sh * dx + ch * dy, dz};
          break;
      }
    } else {
      switch (i) {
        case 3:
          qi = {ref.q.x, -ref.q.y, -ref.q.z};
          break;
        case 4:
          qi = {-ref.q.x, ref.q.y, -ref.q.z};
          break;
        default:  // 7
          qi = {-ref.q.x, -ref.q.y, ref.q.z};
          break;
      }
    }
    out.push_back({s, qi, reflect_phase(i, ref.p)});
  }
  return out;
}

double check_equivariance(int i, const PhasePoint& p, double t) {
  check_reflection(i);
  const GroupElement lhs = reflect_endpoint(i, exp_map(p, t));
  const GroupElement rhs = exp_map(reflect_preimage(i, p, t), t);
  return std::max({std::abs(lhs.x - rhs.x), std::abs(lhs.y - rhs.y),
                   std::abs(lhs.z - rhs.z)});
}

}  // namespace sh2sr
