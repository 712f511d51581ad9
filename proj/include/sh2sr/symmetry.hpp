#pragma once

#include <vector>

#include "sh2sr/geodesic.hpp"
#include "sh2sr/pendulum.hpp"
#include "sh2sr/sh2.hpp"

namespace sh2sr {

/**
 * The reflection group G = {id, eps^1..eps^7} of the pendulum phase
 * portrait and its induced action on extremal trajectories, endpoints and
 * the preimage of the exponential map.  G is an order-8 group (Z2 x Z2 x Z2)
 * with every element an involution on the doubled circle.
 *
 * eps^3, eps^4, eps^7 preserve the direction of time; eps^1, eps^2, eps^5,
 * eps^6 reverse it, which is why the trajectory and preimage actions need
 * the time-t pendulum state.
 */

/// Composition table of G.  Indices 0..7, 0 denoting the identity.
int compose_reflections(int i, int j);

/// Action on phase points:
///   eps^1: (g, c) -> (g, -c)        eps^5: (g, c) -> (g + 2pi, -c)
///   eps^2: (g, c) -> (-g, c)        eps^6: (g, c) -> (-g + 2pi, c)
///   eps^3: (g, c) -> (-g, -c)       eps^7: (g, c) -> (-g + 2pi, -c)
///   eps^4: (g, c) -> (g + 2pi, c)
/// gamma is renormalized to [0, 4pi).  i must be 1..7.
PhasePoint reflect_phase(int i, const PhasePoint& p);

/// Action on initial covectors in the preimage of Exp: for the
/// time-reversing reflections this depends on the time-t pendulum state
/// (gamma_t, c_t), e.g. eps^1: (gamma, c) -> (gamma_t, -c_t).
PhasePoint reflect_preimage(int i, const PhasePoint& p, double t);

/// Action on endpoints; depends on the endpoint alone.
GroupElement reflect_endpoint(int i, const GroupElement& q);

/// Action on a sampled extremal trajectory over [0, t].  Samples must be
/// uniformly spaced starting at t = 0 (the time-reversing reflections
/// re-index s -> t - s, which is exact on a uniform grid); throws
/// std::invalid_argument otherwise.
std::vector<ExtremalSample> reflect_trajectory(int i,
                                               const std::vector<ExtremalSample>& samples);

/// Componentwise max of |eps^i(Exp(p, t)) - Exp(eps^i(p, t), t)|, which is
/// zero in exact arithmetic for every reflection.
double check_equivariance(int i, const PhasePoint& p, double t);

}  // namespace sh2sr
