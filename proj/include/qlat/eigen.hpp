#pragma once

#include <vector>

#include "qlat/matrix.hpp"

namespace qlat {

/// Spectral decomposition of a Hermitian matrix: values ascending, vectors the
/// matching orthonormal eigenvectors stored as columns.
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

/// Diagonalizes a Hermitian matrix. Dimension 2 uses the closed-form
/// quadratic; higher dimensions run cyclic Jacobi sweeps. Eigenvector phases
/// are fixed (largest-modulus component made positive real) so results are
/// deterministic.
///
/// Throws std::invalid_argument when ||m - adjoint(m)||_F > eps.
EigenDecomposition hermitian_eigendecomposition(const Matrix& m, double eps = 1e-9);

}  // namespace qlat
