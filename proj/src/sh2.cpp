#include "sh2sr/sh2.hpp"

#include <cmath>
#include <stdexcept>

namespace sh2sr {

Matrix3 matrix_of(const GroupElement& q) {
  const double ch = std::cosh(q.z), sh = std::sinh(q.z);
  return {{{ch, sh, q.x}, {sh, ch, q.y}, {0.0, 0.0, 1.0}}};
}

GroupElement coords_of(const Matrix3& m) {
  return {m[0][2], m[1][2], std::asinh(m[1][0])};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  const double ch = std::cosh(a.z), sh = std::sinh(a.z);
  return {a.x + b.x * ch + b.y * sh, a.y + b.x * sh + b.y * ch, a.z + b.z};
}

GroupElement inverse(const GroupElement& q) {
  const double ch = std::cosh(q.z), sh = std::sinh(q.z);
  return {-q.x * ch + q.y * sh, q.x * sh - q.y * ch, -q.z};
}

GroupElement one_parameter_subgroup(int index, double t) {
  switch (index) {
    case 1:
      return {0.0, 0.0, t};
    case 2:
      return {t, 0.0, 0.0};
    case 3:
      return {0.0, t, 0.0};
    default:
      throw std::invalid_argument("one_parameter_subgroup index must be 1, 2 or 3");
  }
}

AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) {
  // [A1,A2] = A3 and [A1,A3] = A2 contribute; A2, A3 commute.
  return {0.0, u.a1 * v.a3 - u.a3 * v.a1, u.a1 * v.a2 - u.a2 * v.a1};
}

Frame frame(const GroupElement& q) {
  const double ch = std::cosh(q.z), sh = std::sinh(q.z);
  return {{ch, sh, 0.0}, {0.0, 0.0, 1.0}, {sh, ch, 0.0}};
}

}  // namespace sh2sr
