#pragma once

#include <stdexcept>

namespace sh2sr {

/// Thrown where an integral diverges, e.g. complete_K at k = 1.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown when an operation requires elliptic coordinates but the covector
/// lies on an equilibrium stratum (C4, C5) that has none.
struct UnsupportedStratumError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown by the adaptive integrator on step-size underflow.
struct StiffnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sh2sr
