#include "qlat/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qlat {
namespace {

// Fix the phase of column k so its largest-modulus component is positive
// real. Keeps eigenvector output deterministic across equivalent runs.
void fix_column_phase(Matrix& v, std::size_t k) {
  const std::size_t n = v.dim();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, std::abs(v(i, k)));
  if (best == 0.0) return;
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(v(i, k)) >= best * (1.0 - 1e-12)) {
      pivot = i;
      break;
    }
  }
  const Complex z = v(pivot, k);
  const Complex phase = std::conj(z) / std::abs(z);
  for (std::size_t i = 0; i < n; ++i) v(i, k) *= phase;
}

void sort_ascending(EigenDecomposition& d) {
  const std::size_t n = d.values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d.values[a] < d.values[b]; });
  std::vector<double> values(n);
  Matrix vectors(d.vectors.dim());
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = d.values[order[k]];
    for (std::size_t i = 0; i < n; ++i) vectors(i, k) = d.vectors(i, order[k]);
  }
  d.values = std::move(values);
  d.vectors = std::move(vectors);
  for (std::size_t k = 0; k < n; ++k) fix_column_phase(d.vectors, k);
}

EigenDecomposition solve_dim2(const Matrix& a) {
  const double alpha = a(0, 0).real();
  const double beta = a(1, 1).real();
  const Complex g = a(0, 1);
  EigenDecomposition d{{0.0, 0.0}, Matrix::identity(2)};

  const double scale = std::max({1.0, std::abs(alpha), std::abs(beta)});
  if (std::abs(g) <= 1e-15 * scale) {
    d.values = {alpha, beta};
    sort_ascending(d);
    return d;
  }

  const double mid = 0.5 * (alpha + beta);
  const double h = std::hypot(0.5 * (alpha - beta), std::abs(g));
  const double lo = mid - h;
  const double hi = mid + h;

  // (g, hi - alpha) solves the larger eigenvalue; its orthogonal complement
  // (-(hi - alpha), conj(g)) solves the smaller one (hi - alpha is real).
  const double r = hi - alpha;
  const double nrm = std::sqrt(std::norm(g) + r * r);
  d.values = {lo, hi};
  d.vectors(0, 0) = Complex{-r, 0.0} / nrm;
  d.vectors(1, 0) = std::conj(g) / nrm;
  d.vectors(0, 1) = g / nrm;
  d.vectors(1, 1) = Complex{r, 0.0} / nrm;
  sort_ascending(d);
  return d;
}

// One cyclic Jacobi rotation zeroing a(p, q); accumulates the rotation on v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.dim();
  const Complex g = a(p, q);
  const double absg = std::abs(g);
  if (absg == 0.0) return;

  const Complex phase = g / absg;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * absg);
  double t;
  if (tau == 0.0) {
    t = 1.0;
  } else {
    t = (tau > 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex s = (t * c) * phase;

  // Columns: (col_p, col_q) <- (c*col_p - conj(s)*col_q, s*col_p + c*col_q),
  // then the matching row update for the conjugate-transposed rotation.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = c * aip - std::conj(s) * aiq;
    a(i, q) = s * aip + c * aiq;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = c * apj - s * aqj;
    a(q, j) = std::conj(s) * apj + c * aqj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip - std::conj(s) * viq;
    v(i, q) = s * vip + c * viq;
  }
}

EigenDecomposition solve_jacobi(Matrix a) {
  const std::size_t n = a.dim();
  Matrix v = Matrix::identity(n);
  const double tol = 1e-15 * std::max(1.0, a.frobenius_norm());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) > tol) rotate(a, v, p, q);
      }
    }
  }

  EigenDecomposition d{std::vector<double>(n), std::move(v)};
  for (std::size_t i = 0; i < n; ++i) d.values[i] = a(i, i).real();
  sort_ascending(d);
  return d;
}

}  // namespace

EigenDecomposition hermitian_eigendecomposition(const Matrix& m, double eps) {
  if (!m.is_hermitian(eps)) {
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
  }
  // Symmetrize before solving so tolerated asymmetry cannot leak into results.
  Matrix a(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  if (m.dim() == 1) {
    EigenDecomposition d{{a(0, 0).real()}, Matrix::identity(1)};
    return d;
  }
  if (m.dim() == 2) return solve_dim2(a);
  return solve_jacobi(std::move(a));
}

}  // namespace qlat
