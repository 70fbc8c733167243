#include "qlat/subspace.hpp"

#include <cmath>
#include <stdexcept>

#include "qlat/eigen.hpp"

namespace qlat {

Subspace::Subspace(Projector p) : projector_(std::move(p)) {}

Subspace Subspace::zero(std::size_t dim) {
  return Subspace(Projector(Matrix::zero(dim), "{0}"));
}

Subspace Subspace::full(std::size_t dim) {
  return Subspace(Projector(Matrix::identity(dim), "C^" + std::to_string(dim)));
}

Subspace Subspace::renamed(std::optional<std::string> name) const {
  return Subspace(projector_.renamed(std::move(name)));
}

bool approx_equal(const Subspace& a, const Subspace& b, double eps) {
  return approx_equal(a.matrix(), b.matrix(), eps);
}

bool subspace_leq(const Subspace& a, const Subspace& b, double eps) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in containment test");
  return frobenius_distance(b.matrix() * a.matrix(), a.matrix()) <= eps;
}

namespace {

// For projectors that commute to machine precision the product formulas are
// exact and skip the spectral route entirely. Anything merely close to
// commuting still goes through the eigensolver so the tolerance contract
// stays uniform.
constexpr double kExactCommute = 1e-12;

bool commutes_exactly(const Matrix& a, const Matrix& b) {
  return frobenius_distance(a * b, b * a) <= kExactCommute;
}

}  // namespace

Subspace meet(const Subspace& a, const Subspace& b, const ToleranceConfig& tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in meet");
  const std::size_t n = a.dim();

  if (commutes_exactly(a.matrix(), b.matrix()))
    return Subspace(Projector(a.matrix() * b.matrix(), std::nullopt, tol.eps_equal));

  const EigenDecomposition d =
      hermitian_eigendecomposition(a.matrix() + b.matrix(), tol.eps_equal);
  Matrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (d.values[k] < 2.0 - tol.eps_eig) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) += d.vectors(i, k) * std::conj(d.vectors(j, k));
  }
  return Subspace(Projector(std::move(m), std::nullopt, tol.eps_equal));
}

Subspace join(const Subspace& a, const Subspace& b, const ToleranceConfig& tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in join");
  const std::size_t n = a.dim();

  if (commutes_exactly(a.matrix(), b.matrix())) {
    Matrix m = a.matrix() + b.matrix() - a.matrix() * b.matrix();
    return Subspace(Projector(std::move(m), std::nullopt, tol.eps_equal));
  }

  // The span keeps every spectral direction of P_a + P_b that is not in the
  // joint kernel; the cutoff mirrors the meet's threshold under lambda ->
  // 2 - lambda, so the pair stays a De Morgan dual.
  const EigenDecomposition d =
      hermitian_eigendecomposition(a.matrix() + b.matrix(), tol.eps_equal);
  Matrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (d.values[k] <= tol.eps_eig) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) += d.vectors(i, k) * std::conj(d.vectors(j, k));
  }
  return Subspace(Projector(std::move(m), std::nullopt, tol.eps_equal));
}

Subspace complement(const Subspace& a) { return Subspace(negate_projector(a.projector())); }

bool commutes(const Subspace& a, const Subspace& b, double eps) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in commutation test");
  return frobenius_distance(a.matrix() * b.matrix(), b.matrix() * a.matrix()) <= eps;
}

bool canonical_less(const Subspace& a, const Subspace& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto grid = [](double x) { return std::llround(x * 1e6); };
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Complex za = a.matrix()(i, j);
      const Complex zb = b.matrix()(i, j);
      if (grid(za.real()) != grid(zb.real())) return grid(za.real()) < grid(zb.real());
      if (grid(za.imag()) != grid(zb.imag())) return grid(za.imag()) < grid(zb.imag());
    }
  }
  return false;
}

}  // namespace qlat
