#pragma once

#include <stdexcept>

namespace qlat {

/// Comparison tolerances shared across the engine.
///
/// eps_equal is the Frobenius-norm threshold for operator equality,
/// containment and commutation tests; eps_eig is the eigenvalue slack used
/// when extracting the intersection eigenspace of a projector sum.
struct ToleranceConfig {
  double eps_equal = 1e-9;
  double eps_eig = 1e-8;

  void validate() const {
    if (!(eps_equal > 0.0 && eps_equal < 1.0)) {
      throw std::invalid_argument("eps_equal must lie in (0, 1)");
    }
    if (!(eps_eig > 0.0 && eps_eig < 1.0)) {
      throw std::invalid_argument("eps_eig must lie in (0, 1)");
    }
  }
};

}  // namespace qlat
