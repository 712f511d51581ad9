#pragma once

#include <array>

namespace sh2sr {

/**
 * The group SH(2) of motions of the pseudo-Euclidean plane, in the
 * coordinates (x, y, z) of its 3x3 matrix form
 *
 *     [ cosh z   sinh z   x ]
 *     [ sinh z   cosh z   y ]
 *     [   0        0      1 ]
 *
 * Coordinates are the primary representation; matrices are derived on
 * demand.  Tangent vectors are coordinate triples (dx, dy, dz).
 */

struct GroupElement {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;
using Tangent = std::array<double, 3>;

/// Coefficients on the Lie algebra basis A1 (hyperbolic rotation),
/// A2 (x-translation), A3 (y-translation).
struct AlgebraElement {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

Matrix3 matrix_of(const GroupElement& q);

/// Reads (x, y, z) back from a matrix in the SH(2) form above.
/// x and y round-trip exactly; z through asinh to within rounding.
GroupElement coords_of(const Matrix3& m);

/// Group product.  In coordinates:
///   (a.x + b.x cosh a.z + b.y sinh a.z,
///    a.y + b.x sinh a.z + b.y cosh a.z,
///    a.z + b.z)
GroupElement multiply(const GroupElement& a, const GroupElement& b);

GroupElement inverse(const GroupElement& q);

/// Basis one-parameter subgroups: index 1 is the hyperbolic rotation
/// w1(t) = (0,0,t), index 2 the translation w2(t) = (t,0,0), index 3 the
/// translation w3(t) = (0,t,0).  Throws std::invalid_argument otherwise.
GroupElement one_parameter_subgroup(int index, double t);

/// Lie bracket on sh(2): [A1,A2] = A3, [A1,A3] = A2, [A2,A3] = 0,
/// extended bilinearly.
AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v);

/// The left-invariant frame at q, as tangent triples in the (x,y,z) chart:
/// f1 = (cosh z, sinh z, 0), f2 = (0, 0, 1), f0 = (sinh z, cosh z, 0).
struct Frame {
  Tangent f1;
  Tangent f2;
  Tangent f0;
};

Frame frame(const GroupElement& q);

}  // namespace sh2sr
