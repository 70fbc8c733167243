#pragma once

#include <random>
#include <vector>

#include "qlat/matrix.hpp"
#include "qlat/projector.hpp"

namespace qlat::testing {

inline StateVector random_unit_state(std::mt19937& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  while (true) {
    Amplitudes amp{};
    for (std::size_t i = 0; i < dim; ++i) amp[i] = Complex{normal(rng), normal(rng)};
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(amp[i]);
    if (norm2 < 1e-6) continue;  // vanishingly unlikely, but keep the draw unit-safe
    return StateVector(dim, amp).normalized();
  }
}

inline Matrix random_hermitian(std::mt19937& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  Matrix b(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) b(i, j) = Complex{normal(rng), normal(rng)};
  return Complex{0.5, 0.0} * (b + b.adjoint());
}

/// Independent intersection oracle: (Pa Pb Pa)^(2^20) keeps only the common
/// eigenvalue-1 directions, so it converges to the projector onto
/// ran(Pa) ^ ran(Pb) for subspace pairs at desk-scale angles.
inline Matrix intersection_oracle(const Matrix& pa, const Matrix& pb) {
  Matrix t = pa * pb * pa;
  for (int k = 0; k < 20; ++k) t = t * t;
  return t;
}

/// Independent span oracle: modified Gram-Schmidt over the concatenated
/// columns of Pa and Pb, then the projector onto the surviving basis.
inline Matrix span_oracle(const Matrix& pa, const Matrix& pb) {
  const std::size_t n = pa.dim();
  std::vector<std::vector<Complex>> basis;
  const auto feed = [&](const Matrix& m, std::size_t col) {
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = m(i, col);
    for (const auto& q : basis) {
      Complex overlap{};
      for (std::size_t i = 0; i < n; ++i) overlap += std::conj(q[i]) * v[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= overlap * q[i];
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm2 += std::norm(v[i]);
    if (norm2 < 1e-16) return;
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) v[i] *= inv;
    basis.push_back(std::move(v));
  };
  for (std::size_t c = 0; c < n; ++c) feed(pa, c);
  for (std::size_t c = 0; c < n; ++c) feed(pb, c);

  Matrix p(n);
  for (const auto& q : basis)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) += q[i] * std::conj(q[j]);
  return p;
}

}  // namespace qlat::testing
