#include "sh2sr/pendulum.hpp"

#include <cmath>

#include "sh2sr/elliptic.hpp"

namespace sh2sr {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kFourPi = 4.0 * kPi;
}  // namespace

double normalize_gamma(double gamma) {
  double r = std::fmod(gamma, kFourPi);
  if (r < 0.0) r += kFourPi;
  if (r >= kFourPi) r = 0.0;
  return r;
}

double energy(const PhasePoint& p) { return 0.5 * p.c * p.c - std::cos(p.gamma); }

std::string StratumId::name() const {
  switch (major) {
    case Stratum::C1:
      return "C1^" + std::to_string(i);
    case Stratum::C2:
      return sign > 0 ? "C2^+" : "C2^-";
    case Stratum::C3:
      return "C3^" + std::to_string(i) + (sign > 0 ? "+" : "-");
    case Stratum::C4:
      return "C4^" + std::to_string(i);
    case Stratum::C5:
      return "C5^" + std::to_string(i);
  }
  return "?";
}

StratumId classify(const PhasePoint& p) {
  const double g = normalize_gamma(p.gamma);
  const double e = energy(p);
  const double cos_half = std::cos(0.5 * g);
  if (e <= -1.0 + kEnergyTol) {
    // gamma near 0 or 2pi (mod 4pi); i distinguishes the two lifts.
    const int i = (std::abs(g - kTwoPi) < kPi) ? 1 : 0;
    return {Stratum::C4, i, 0};
  }
  if (std::abs(e - 1.0) <= kEnergyTol) {
    if (std::abs(p.c) <= kEnergyTol) {
      const int i = (std::abs(g - kPi) < kPi) ? 0 : 1;
      return {Stratum::C5, i, 0};
    }
    return {Stratum::C3, cos_half >= 0.0 ? 0 : 1, p.c > 0.0 ? 1 : -1};
  }
  if (e < 1.0) {
    return {Stratum::C1, cos_half >= 0.0 ? 0 : 1, 0};
  }
  return {Stratum::C2, 0, p.c > 0.0 ? 1 : -1};
}

EllipticCoords to_elliptic(const PhasePoint& p) {
  const double g = normalize_gamma(p.gamma);
  const double sin_half = std::sin(0.5 * g);
  const double cos_half = std::cos(0.5 * g);
  const StratumId id = classify(p);
  switch (id.major) {
    case Stratum::C1: {
      const double k = std::sqrt(0.5 * (energy(p) + 1.0));
      const int s1 = id.i == 0 ? 1 : -1;
      const double theta = std::atan2(s1 * sin_half / k, p.c / (2.0 * k));
      const double period = 4.0 * complete_K(k);
      double phi = std::fmod(inverse_am(theta, k), period);
      if (phi < 0.0) phi += period;
      return {id, k, phi, s1, 1};
    }
    case Stratum::C2: {
      const double k = std::sqrt(2.0 / (energy(p) + 1.0));
      const int s2 = id.sign;
      const double theta = std::atan2(s2 * sin_half, cos_half);
      const double period = 4.0 * k * complete_K(k);
      double phi = std::fmod(k * inverse_am(theta, k), period);
      if (phi < 0.0) phi += period;
      return {id, k, phi, 1, s2};
    }
    case Stratum::C3: {
      const int s1 = id.i == 0 ? 1 : -1;
      const int s2 = id.sign;
      // tanh phi = s1*s2*sin(gamma/2) and sech phi = |c|/2, so
      // sinh phi = 2*s1*s2*sin(gamma/2)/|c|, which stays accurate as
      // |sin(gamma/2)| -> 1.
      const double phi = std::asinh(2.0 * s1 * s2 * sin_half / std::abs(p.c));
      return {id, 1.0, phi, s1, s2};
    }
    default:
      throw UnsupportedStratumError("no elliptic coordinates on stratum " + id.name());
  }
}

PhasePoint from_elliptic(const EllipticCoords& e) {
  double sin_half = 0.0, cos_half = 1.0, c = 0.0;
  switch (e.stratum.major) {
    case Stratum::C1: {
      const JacobiTriple j = jacobi(e.phi, e.k);
      sin_half = e.s1 * e.k * j.sn;
      cos_half = e.s1 * j.dn;
      c = 2.0 * e.k * j.cn;
      break;
    }
    case Stratum::C2: {
      const JacobiTriple j = jacobi(e.phi / e.k, e.k);
      sin_half = e.s2 * j.sn;
      cos_half = j.cn;
      c = 2.0 * e.s2 * j.dn / e.k;
      break;
    }
    case Stratum::C3: {
      const double sech = 1.0 / std::cosh(e.phi);
      sin_half = e.s1 * e.s2 * std::tanh(e.phi);
      cos_half = e.s1 * sech;
      c = 2.0 * e.s2 * sech;
      break;
    }
    default:
      throw UnsupportedStratumError("no elliptic coordinates on stratum " +
                                    e.stratum.name());
  }
  return {normalize_gamma(2.0 * std::atan2(sin_half, cos_half)), c};
}

PhasePoint flow_vertical(const PhasePoint& p, double t) {
  const StratumId id = classify(p);
  if (id.major == Stratum::C4 || id.major == Stratum::C5) {
    return {normalize_gamma(p.gamma), p.c};
  }
  EllipticCoords e = to_elliptic(p);
  e.phi += t;
  if (id.major != Stratum::C3) {
    const double period =
        (id.major == Stratum::C1 ? 4.0 : 4.0 * e.k) * complete_K(e.k);
    e.phi = std::fmod(e.phi, period);
    if (e.phi < 0.0) e.phi += period;
  }
  return from_elliptic(e);
}

}  // namespace sh2sr
