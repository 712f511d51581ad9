#include "sh2sr/oracle.hpp"

#include <array>
#include <cmath>
#include <functional>

#include "sh2sr/errors.hpp"

namespace sh2sr {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Dormand-Prince 5(4) tableau (the system is autonomous, so the stage
// times are not needed).
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// 5th-order weights equal the last a-row; e = b5 - b4 gives the embedded
// error estimate directly.
constexpr double kE[7] = {35.0 / 384 - 5179.0 / 57600,
                          0.0,
                          500.0 / 1113 - 7571.0 / 16695,
                          125.0 / 192 - 393.0 / 640,
                          -2187.0 / 6784 + 92097.0 / 339200,
                          11.0 / 84 - 187.0 / 2100,
                          -1.0 / 40};

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N, typename Rhs>
void dopri_stages(const Rhs& rhs, const Vec<N>& y, double h, Vec<N> (&k)[7],
                  Vec<N>& y_next, Vec<N>& err) {
  k[0] = rhs(y);
  for (int s = 1; s < 7; ++s) {
    Vec<N> ys = y;
    for (int j = 0; j < s; ++j) {
      if (kA[s][j] == 0.0) continue;
      for (std::size_t i = 0; i < N; ++i) ys[i] += h * kA[s][j] * k[j][i];
    }
    k[s] = rhs(ys);
  }
  // The 5th-order solution reuses a-row 6 (stage 7 is FSAL: it was already
  // evaluated at y_next).
  for (std::size_t i = 0; i < N; ++i) {
    double acc = y[i];
    for (int s = 0; s < 6; ++s) acc += h * kA[6][s] * k[s][i];
    y_next[i] = acc;
    double e = 0.0;
    for (int s = 0; s < 7; ++s) e += kE[s] * k[s][i];
    err[i] = h * e;
  }
}

template <std::size_t N, typename Rhs>
Vec<N> integrate_adaptive(const Rhs& rhs, Vec<N> y, double t_end, double tol,
                          double h_max,
                          const std::function<void(const Vec<N>&)>& observer = {}) {
  if (t_end == 0.0) return y;
  const double direction = t_end > 0.0 ? 1.0 : -1.0;
  double t = 0.0;
  double h = direction * std::min(std::abs(t_end), std::min(h_max, 0.01));
  Vec<N> k[7], y_next, err;
  while (direction * (t_end - t) > 0.0) {
    if (std::abs(h) > std::abs(t_end - t)) h = t_end - t;
    dopri_stages(rhs, y, h, k, y_next, err);
    // error-per-unit-step control: local error <= tol * |h| * scale, so the
    // accumulated drift over an interval T stays near tol * T
    double err_norm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double scale = tol * (1.0 + std::max(std::abs(y[i]), std::abs(y_next[i])));
      err_norm += (err[i] / scale) * (err[i] / scale);
    }
    err_norm = std::sqrt(err_norm / N) / std::abs(h);
    if (err_norm <= 1.0) {
      t += h;
      y = y_next;
      if (observer) observer(y);
    }
    double factor = 0.9 * std::pow(std::max(err_norm, 1e-10), -0.2);
    factor = std::clamp(factor, 0.2, 5.0);
    h *= factor;
    if (std::abs(h) > h_max) h = direction * h_max;
    if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) {
      throw StiffnessError("step size underflow in adaptive integrator");
    }
  }
  return y;
}

void check_tol(double tol) {
  if (!(tol >= kOracleMinTol && tol <= kOracleMaxTol)) {
    throw std::domain_error("oracle tolerance must lie in [1e-13, 1e-6]");
  }
}

Vec<6> full_rhs(const Vec<6>& s) {
  const double h1 = s[0], h2 = s[1], h0 = s[2], z = s[5];
  return {h2 * h0, -h1 * h0, h1 * h2, h1 * std::cosh(z), h1 * std::sinh(z), h2};
}

Vec<2> pendulum_rhs(const Vec<2>& s) { return {s[1], -std::sin(s[0])}; }

Vec<6> pack(const FullState& s) { return {s.h1, s.h2, s.h0, s.x, s.y, s.z}; }

FullState unpack(const Vec<6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

void check_level_set(const FullState& s) {
  if (std::abs(s.h1 * s.h1 + s.h2 * s.h2 - 1.0) > 1e-12) {
    throw std::domain_error("initial covector must satisfy h1^2 + h2^2 = 1");
  }
}

}  // namespace

FullState full_from_phase(const PhasePoint& p) {
  return {std::cos(0.5 * p.gamma), std::sin(0.5 * p.gamma), -0.5 * p.c, 0.0, 0.0, 0.0};
}

GroupElement endpoint_of(const FullState& s) { return {s.x, s.y, s.z}; }

FullState integrate_full(const FullState& s0, double t, double tol) {
  check_level_set(s0);
  check_tol(tol);
  return unpack(integrate_adaptive<6>(full_rhs, pack(s0), t, tol, 0.5));
}

PhasePoint integrate_pendulum(const PhasePoint& p0, double t, double tol) {
  check_tol(tol);
  const Vec<2> y = integrate_adaptive<2>(pendulum_rhs, Vec<2>{p0.gamma, p0.c}, t, tol, 0.5);
  return {normalize_gamma(y[0]), y[1]};
}

PhasePoint pendulum_projection(const FullState& s0, double t, double tol) {
  check_level_set(s0);
  check_tol(tol);
  // Accepted steps are capped so the winding increment |d alpha| = |h0| h
  // stays well below pi, making the unwrap unambiguous.
  const double e0 = 2.0 * s0.h0 * s0.h0 - s0.h1 * s0.h1 + s0.h2 * s0.h2;
  const double h0_max = std::sqrt(std::max(0.0, 0.5 * (e0 + 1.0))) + 1.0;
  const double h_max = std::min(0.5, 1.5 / h0_max);

  double alpha = std::atan2(s0.h2, s0.h1);
  double prev_raw = alpha;
  double h0_final = s0.h0;
  const std::function<void(const Vec<6>&)> observer = [&](const Vec<6>& y) {
    const double raw = std::atan2(y[1], y[0]);
    double d = raw - prev_raw;
    if (d > kPi) d -= 2.0 * kPi;
    if (d < -kPi) d += 2.0 * kPi;
    alpha += d;
    prev_raw = raw;
    h0_final = y[2];
  };
  integrate_adaptive<6>(full_rhs, pack(s0), t, tol, h_max, observer);
  return {normalize_gamma(2.0 * alpha), -2.0 * h0_final};
}

FullState integrate_full_fixed(const FullState& s0, double t, int steps) {
  check_level_set(s0);
  if (steps < 1) throw std::domain_error("need at least one step");
  Vec<6> y = pack(s0);
  const double h = t / steps;
  Vec<6> k[7], y_next, err;
  for (int i = 0; i < steps; ++i) {
    dopri_stages(full_rhs, y, h, k, y_next, err);
    y = y_next;
  }
  return unpack(y);
}

}  // namespace sh2sr
