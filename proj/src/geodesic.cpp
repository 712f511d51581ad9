#include "sh2sr/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sh2sr/elliptic.hpp"

namespace sh2sr {

namespace {

void check_time(double t) {
  if (!std::isfinite(t)) throw std::domain_error("trajectory time must be finite");
}

int sign_of(double v) { return v >= 0.0 ? 1 : -1; }

}  // namespace

Extremal::Extremal(const PhasePoint& p0)
    : stratum_(classify(p0)), p0_{normalize_gamma(p0.gamma), p0.c} {
  switch (stratum_.major) {
    case Stratum::C4:
      direction_ = sign_of(std::cos(0.5 * p0_.gamma));
      break;
    case Stratum::C5:
      direction_ = sign_of(std::sin(0.5 * p0_.gamma));
      break;
    case Stratum::C1: {
      const EllipticCoords e = to_elliptic(p0_);
      k_ = e.k;
      s1_ = e.s1;
      arg0_ = e.phi;
      kp2_ = (1.0 - k_) * (1.0 + k_);
      const JacobiTriple j = jacobi(arg0_, k_);
      w_ = 1.0 / (j.dn - k_ * j.cn);
      e0_ = epsilon_incomplete(arg0_, k_);
      sn0_ = j.sn;
      break;
    }
    case Stratum::C2: {
      const EllipticCoords e = to_elliptic(p0_);
      k_ = e.k;
      s2_ = e.s2;
      arg0_ = e.phi / k_;
      kp2_ = (1.0 - k_) * (1.0 + k_);
      const JacobiTriple j = jacobi(arg0_, k_);
      w_ = 1.0 / (j.dn - k_ * j.cn);
      e0_ = epsilon_incomplete(arg0_, k_);
      sn0_ = j.sn;
      break;
    }
    case Stratum::C3: {
      const EllipticCoords e = to_elliptic(p0_);
      k_ = 1.0;
      s1_ = e.s1;
      s2_ = e.s2;
      arg0_ = e.phi;
      w_ = std::cosh(arg0_);
      tanh0_ = std::tanh(arg0_);
      break;
    }
  }
}

GroupElement Extremal::at(double t) const {
  check_time(t);
  switch (stratum_.major) {
    case Stratum::C4:
      return {direction_ * t, 0.0, 0.0};
    case Stratum::C5:
      return {0.0, 0.0, direction_ * t};
    case Stratum::C1: {
      const double phit = arg0_ + t;
      const JacobiTriple j = jacobi(phit, k_);
      const double de = epsilon_incomplete(phit, k_) - e0_;
      const double dsn = j.sn - sn0_;
      const double wi = 1.0 / (w_ * kp2_);
      const double x = 0.5 * s1_ * ((w_ + wi) * de + (k_ * wi - k_ * w_) * dsn);
      const double y = 0.5 * ((w_ - wi) * de - (k_ * wi + k_ * w_) * dsn);
      // dn - k*cn > 0 for k < 1, so the logarithm is defined for all phit.
      const double z = s1_ * std::log((j.dn - k_ * j.cn) * w_);
      return {x, y, z};
    }
    case Stratum::C2: {
      const double psit = arg0_ + t / k_;
      const JacobiTriple j = jacobi(psit, k_);
      const double dx = (epsilon_incomplete(psit, k_) - e0_) - kp2_ * (psit - arg0_);
      const double dsn = j.sn - sn0_;
      const double wi = 1.0 / (w_ * kp2_);
      const double x = 0.5 * (wi - w_) * dx + 0.5 * (k_ * w_ + k_ * wi) * dsn;
      const double y =
          -0.5 * s2_ * (wi + w_) * dx + 0.5 * s2_ * (k_ * w_ - k_ * wi) * dsn;
      const double z = s2_ * std::log((j.dn - k_ * j.cn) * w_);
      return {x, y, z};
    }
    case Stratum::C3: {
      const double phit = arg0_ + t;
      const double dtanh = std::tanh(phit) - tanh0_;
      const double x = 0.5 * s1_ * (t / w_ + w_ * dtanh);
      const double y = 0.5 * s2_ * (t / w_ - w_ * dtanh);
      const double z = -s1_ * s2_ * std::log(w_ / std::cosh(phit));
      return {x, y, z};
    }
  }
  return {};
}

PhasePoint Extremal::phase_at(double t) const {
  check_time(t);
  switch (stratum_.major) {
    case Stratum::C4:
    case Stratum::C5:
      return p0_;
    case Stratum::C1: {
      const JacobiTriple j = jacobi(arg0_ + t, k_);
      return {normalize_gamma(2.0 * std::atan2(s1_ * k_ * j.sn, s1_ * j.dn)),
              2.0 * k_ * j.cn};
    }
    case Stratum::C2: {
      const JacobiTriple j = jacobi(arg0_ + t / k_, k_);
      return {normalize_gamma(2.0 * std::atan2(s2_ * j.sn, j.cn)),
              2.0 * s2_ * j.dn / k_};
    }
    case Stratum::C3: {
      const double phit = arg0_ + t;
      const double sech = 1.0 / std::cosh(phit);
      return {normalize_gamma(
                  2.0 * std::atan2(s1_ * s2_ * std::tanh(phit), s1_ * sech)),
              2.0 * s2_ * sech};
    }
  }
  return {};
}

GroupElement exp_map(const PhasePoint& p0, double t) { return Extremal(p0).at(t); }

std::vector<ExtremalSample> sample_trajectory(const PhasePoint& p0, double t_max,
                                              std::size_t n) {
  if (n < 2) throw std::invalid_argument("sample_trajectory requires n >= 2");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw std::invalid_argument("sample_trajectory requires t_max > 0");
  }
  const Extremal ex(p0);
  std::vector<ExtremalSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back({t, ex.at(t), ex.phase_at(t)});
  }
  return out;
}

double curvature_xy(const PhasePoint& p0, double t) {
  const Extremal ex(p0);
  const PhasePoint pt = ex.phase_at(t);
  const double cos_half = std::cos(0.5 * pt.gamma);
  const double sin_half = std::sin(0.5 * pt.gamma);
  if (std::abs(cos_half) < kCuspTol) {
    return std::numeric_limits<double>::infinity();
  }
  const double z = ex.at(t).z;
  return sin_half / (cos_half * std::pow(std::cosh(2.0 * z), 1.5));
}

namespace {

// Bisection of f on a sign-change bracket [a, b] down to kRootWidth.
template <typename F>
double bisect(const F& f, double a, double b) {
  constexpr double kRootWidth = 1e-12;
  double fa = f(a);
  for (int it = 0; it < 200 && (b - a) > kRootWidth; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) != (fm < 0.0)) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<ProjectionFeature> find_projection_features(const PhasePoint& p0,
                                                        double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw std::invalid_argument("find_projection_features requires t_max > 0");
  }
  const Extremal ex(p0);
  std::vector<ProjectionFeature> out;
  const Stratum major = ex.stratum().major;
  if (major == Stratum::C4 || major == Stratum::C5) return out;

  // Grid step: a fraction of the pendulum half-period so no root pair can
  // share a cell.  C1 zeros of sn are spaced 2K in phi = t; C2 zeros of
  // sn/cn are spaced 2K in psi = t/k; C3 has at most one root of each kind.
  double step;
  if (major == Stratum::C1) {
    step = 0.25 * complete_K(to_elliptic(p0).k);
  } else if (major == Stratum::C2) {
    const double k = to_elliptic(p0).k;
    step = 0.25 * k * complete_K(k);
  } else {
    step = 0.125;
  }
  step = std::min(step, t_max / 16.0);

  const auto sin_half = [&ex](double t) { return std::sin(0.5 * ex.phase_at(t).gamma); };
  const auto cos_half = [&ex](double t) { return std::cos(0.5 * ex.phase_at(t).gamma); };

  const auto scan = [&](const auto& f, ProjectionFeature::Kind kind) {
    constexpr double kGridZero = 1e-13;
    double prev_t = 0.0;
    double prev_f = f(0.0);
    if (std::abs(prev_f) < kGridZero) {
      out.push_back({kind, 0.0, kGridZero});
    }
    for (double t = step; prev_t < t_max; t += step) {
      if (t > t_max) t = t_max;
      const double ft = f(t);
      if (std::abs(ft) < kGridZero) {
        out.push_back({kind, t, kGridZero});
      } else if ((prev_f < 0.0) != (ft < 0.0) && std::abs(prev_f) >= kGridZero) {
        out.push_back({kind, bisect(f, prev_t, t), 1e-10});
      }
      prev_t = t;
      prev_f = ft;
      if (t >= t_max) break;
    }
  };

  scan(sin_half, ProjectionFeature::Kind::inflection);
  if (major == Stratum::C2) {
    scan(cos_half, ProjectionFeature::Kind::cusp);
  } else if (major == Stratum::C3) {
    // cos(gamma/2) = s1 / cosh(phi_t) never vanishes; only inflections occur.
  }

  std::sort(out.begin(), out.end(),
            [](const ProjectionFeature& a, const ProjectionFeature& b) { return a.t < b.t; });
  return out;
}

}  // namespace sh2sr
