#include "sh2sr/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sh2sr {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAgmTol = 1e-17;
constexpr int kMaxAgmIter = 60;

void check_modulus(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw std::domain_error("elliptic modulus k must lie in [0, 1]");
  }
}

void check_argument(double u) {
  if (!std::isfinite(u)) {
    throw std::domain_error("elliptic argument must be finite");
  }
  if (std::abs(u) > kMaxEllipticArgument) {
    throw std::domain_error("elliptic argument exceeds 1e8; refusing to lose precision");
  }
}

// Carlson symmetric integral R_F(x,y,z); x,y,z >= 0, at most one of them 0.
double carlson_rf(double x, double y, double z) {
  constexpr double errtol = 0.0012;
  double xt = x, yt = y, zt = z;
  double ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    ave = (xt + yt + zt) / 3.0;
    dx = (ave - xt) / ave;
    dy = (ave - yt) / ave;
    dz = (ave - zt) / ave;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol) break;
  }
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(ave);
}

// Carlson symmetric integral R_D(x,y,z); z > 0.
double carlson_rd(double x, double y, double z) {
  constexpr double errtol = 0.001;
  constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 6.0, c3 = 9.0 / 22.0, c4 = 3.0 / 26.0;
  constexpr double c5 = 0.25 * c3, c6 = 1.5 * c4;
  double xt = x, yt = y, zt = z;
  double sum = 0.0, fac = 1.0;
  double ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lam = sx * (sy + sz) + sy * sz;
    sum += fac / (sz * (zt + lam));
    fac *= 0.25;
    xt = 0.25 * (xt + lam);
    yt = 0.25 * (yt + lam);
    zt = 0.25 * (zt + lam);
    ave = 0.2 * (xt + yt + 3.0 * zt);
    dx = (ave - xt) / ave;
    dy = (ave - yt) / ave;
    dz = (ave - zt) / ave;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol) break;
  }
  const double ea = dx * dy;
  const double eb = dz * dz;
  const double ec = ea - eb;
  const double ed = ea - 6.0 * eb;
  const double ee = ed + ec + ec;
  return 3.0 * sum +
         fac *
             (1.0 + ed * (-c1 + c5 * ed - c6 * dz * ee) +
              dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea))) /
             (ave * std::sqrt(ave));
}

// Legendre incomplete integrals on the principal branch |theta| <= pi/2.
double legendre_f_principal(double theta, double k) {
  const double s = std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double q = (1.0 - k * s) * (1.0 + k * s);
  return s * carlson_rf(c2, q, 1.0);
}

double legendre_e_principal(double theta, double k) {
  const double s = std::sin(theta);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double q = (1.0 - k * s) * (1.0 + k * s);
  return s * carlson_rf(c2, q, 1.0) - (k * k) * (s * s * s) * carlson_rd(c2, q, 1.0) / 3.0;
}

}  // namespace

JacobiTriple jacobi(double u, double k) {
  check_argument(u);
  check_modulus(k);
  if (k == 0.0) {
    return {std::sin(u), std::cos(u), 1.0, u};
  }
  if (1.0 - k < kUnitModulusBand) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech, std::atan(std::sinh(u))};
  }

  // Descending Landen / AGM chain (Abramowitz & Stegun 16.4).
  double a[kMaxAgmIter + 1], c[kMaxAgmIter + 1];
  double an = 1.0, bn = std::sqrt((1.0 - k) * (1.0 + k)), cn = k;
  a[0] = an;
  c[0] = cn;
  int n = 0;
  while (std::abs(cn) > kAgmTol && n < kMaxAgmIter) {
    const double a1 = 0.5 * (an + bn);
    const double b1 = std::sqrt(an * bn);
    cn = 0.5 * (an - bn);
    an = a1;
    bn = b1;
    ++n;
    a[n] = an;
    c[n] = cn;
  }
  double phi = std::ldexp(an * u, n);
  for (int j = n; j >= 1; --j) {
    const double s = std::clamp(c[j] / a[j] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }
  const double sn = std::sin(phi);
  const double cnv = std::cos(phi);
  const double dn = std::sqrt((1.0 - k * sn) * (1.0 + k * sn));
  return {sn, cnv, dn, phi};
}

double complete_K(double k) {
  check_modulus(k);
  if (1.0 - k < kUnitModulusBand) {
    throw PoleError("complete_K diverges at k = 1");
  }
  double an = 1.0, bn = std::sqrt((1.0 - k) * (1.0 + k));
  for (int it = 0; it < kMaxAgmIter && std::abs(an - bn) > kAgmTol * an; ++it) {
    const double a1 = 0.5 * (an + bn);
    bn = std::sqrt(an * bn);
    an = a1;
  }
  return kPi / (2.0 * an);
}

double complete_E(double k) {
  check_modulus(k);
  if (1.0 - k < kUnitModulusBand) return 1.0;
  const double kp2 = (1.0 - k) * (1.0 + k);
  return carlson_rf(0.0, kp2, 1.0) - (k * k) * carlson_rd(0.0, kp2, 1.0) / 3.0;
}

double epsilon_incomplete(double u, double k) {
  check_argument(u);
  check_modulus(k);
  if (k == 0.0) return u;
  if (1.0 - k < kUnitModulusBand) return std::tanh(u);
  const double theta = jacobi(u, k).am;
  const double n = std::round(theta / kPi);
  const double theta_r = theta - n * kPi;
  return 2.0 * n * complete_E(k) + legendre_e_principal(theta_r, k);
}

double inverse_am(double theta, double k) {
  if (!std::isfinite(theta)) {
    throw std::domain_error("inverse_am requires finite amplitude");
  }
  check_modulus(k);
  if (k == 0.0) return theta;
  if (1.0 - k < kUnitModulusBand) {
    throw PoleError("inverse_am is undefined at k = 1");
  }
  const double n = std::round(theta / kPi);
  const double theta_r = theta - n * kPi;
  return 2.0 * n * complete_K(k) + legendre_f_principal(theta_r, k);
}

}  // namespace sh2sr
