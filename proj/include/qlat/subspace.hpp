#pragma once

#include <optional>
#include <string>

#include "qlat/projector.hpp"
#include "qlat/tolerance.hpp"

namespace qlat {

/// Closed subspace of C^dim, canonically represented by its orthogonal
/// projector. Rank 0 is the zero subspace, rank dim the whole space.
class Subspace {
 public:
  explicit Subspace(Projector p);

  static Subspace zero(std::size_t dim);
  static Subspace full(std::size_t dim);

  const Projector& projector() const { return projector_; }
  const Matrix& matrix() const { return projector_.matrix(); }
  const std::optional<std::string>& name() const { return projector_.name(); }
  std::size_t dim() const { return projector_.dim(); }
  int rank() const { return projector_.rank(); }

  bool is_zero() const { return rank() == 0; }
  bool is_full() const { return rank() == static_cast<int>(dim()); }

  Subspace renamed(std::optional<std::string> name) const;

 private:
  Projector projector_;
};

bool approx_equal(const Subspace& a, const Subspace& b, double eps);

/// Containment a <= b, i.e. ||P_b P_a - P_a||_F <= eps.
bool subspace_leq(const Subspace& a, const Subspace& b, double eps = 1e-9);

/// Intersection: the eigenvalue-2 eigenspace of P_a + P_b (threshold
/// 2 - eps_eig).
Subspace meet(const Subspace& a, const Subspace& b, const ToleranceConfig& tol = {});

/// Closed span, computed as the De Morgan dual of meet.
Subspace join(const Subspace& a, const Subspace& b, const ToleranceConfig& tol = {});

/// Orthocomplement.
Subspace complement(const Subspace& a);

/// Whether the projectors commute: ||P_a P_b - P_b P_a||_F <= eps.
bool commutes(const Subspace& a, const Subspace& b, double eps = 1e-9);

/// Strict weak order used for reproducible element lists: rank first, then
/// lexicographic comparison of rounded projector entries.
bool canonical_less(const Subspace& a, const Subspace& b);

}  // namespace qlat
