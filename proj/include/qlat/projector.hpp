#pragma once

#include <optional>
#include <string>

#include "qlat/matrix.hpp"

namespace qlat {

/// Orthogonal projector: Hermitian and idempotent within the construction
/// tolerance. The optional name tags atoms for registries and reports.
class Projector {
 public:
  explicit Projector(Matrix m, std::optional<std::string> name = std::nullopt,
                     double eps = 1e-9);

  const Matrix& matrix() const { return matrix_; }
  const std::optional<std::string>& name() const { return name_; }
  std::size_t dim() const { return matrix_.dim(); }
  int rank() const { return rank_; }

  Projector renamed(std::optional<std::string> name) const;

 private:
  Matrix matrix_;
  std::optional<std::string> name_;
  int rank_;
};

/// Spin projector P[a, b] for outcome a in {1, 2} along axis b in {1, 2, 3}
/// (x, y, z). Named "P[a,b]".
Projector build_qubit_projector(int a, int b);

/// Index of the complementary outcome: 1 <-> 2.
int partner_index(int n);

/// 1 - p. For a qubit-family projector the result is the partner projector
/// and is named accordingly; otherwise a named input yields "!name".
Projector negate_projector(const Projector& p);

/// Checks P[1,b] + P[2,b] == identity within eps.
bool resolution_check(int b, double eps = 1e-9);

/// Unit eigenvector of P[a,b] with eigenvalue 1, labeled "psi[a,b]". The
/// phase convention makes the largest-modulus component positive real.
StateVector eigenstate(int a, int b);

/// Whether v lies in the range of p: ||p v - v|| <= eps * ||v||.
bool membership(const StateVector& v, const Projector& p, double eps = 1e-9);

/// <v|p|v> for the normalized v, clamped to [0, 1].
double expectation(const StateVector& v, const Projector& p);

/// Rank-1 projector onto the span of v.
Projector span_projector(const StateVector& v);

}  // namespace qlat
