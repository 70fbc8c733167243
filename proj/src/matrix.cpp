#include "qlat/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlat {
namespace {

void check_dim(std::size_t dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("dimension must lie in [1, " + std::to_string(kMaxDim) +
                                "], got " + std::to_string(dim));
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim) { check_dim(dim); }

Matrix Matrix::zero(std::size_t dim) { return Matrix(dim); }

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  Matrix m(n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("matrix rows must form a square");
    std::size_t j = 0;
    for (Complex z : row) {
      if (!finite(z)) throw std::invalid_argument("matrix entries must be finite");
      m(i, j) = z;
      ++j;
    }
    ++i;
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Complex Matrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_ * dim_; ++i) s += std::norm(data_[i]);
  return std::sqrt(s);
}

bool Matrix::has_finite_entries() const {
  for (std::size_t i = 0; i < dim_ * dim_; ++i)
    if (!finite(data_[i])) return false;
  return true;
}

bool Matrix::is_hermitian(double eps) const { return frobenius_distance(*this, adjoint()) <= eps; }

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in matrix sum");
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in matrix difference");
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch in matrix product");
  const std::size_t n = lhs.dim();
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += a * rhs(k, j);
    }
  }
  return r;
}

Matrix operator*(Complex scalar, const Matrix& m) {
  Matrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = scalar * m(i, j);
  return r;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in matrix comparison");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

bool approx_equal(const Matrix& a, const Matrix& b, double eps) {
  return frobenius_distance(a, b) <= eps;
}

StateVector::StateVector(std::size_t dim, std::initializer_list<Complex> amplitudes,
                         std::optional<std::string> label, double min_norm)
    : dim_(dim), label_(std::move(label)) {
  check_dim(dim);
  if (amplitudes.size() != dim) throw std::invalid_argument("amplitude count must equal dim");
  std::size_t i = 0;
  for (Complex z : amplitudes) amp_[i++] = z;
  validate(min_norm);
}

StateVector::StateVector(std::size_t dim, const Amplitudes& amplitudes,
                         std::optional<std::string> label, double min_norm)
    : dim_(dim), amp_(amplitudes), label_(std::move(label)) {
  check_dim(dim);
  for (std::size_t i = dim; i < kMaxDim; ++i) amp_[i] = Complex{};
  validate(min_norm);
}

void StateVector::validate(double min_norm) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!finite(amp_[i])) throw std::invalid_argument("state amplitudes must be finite");
  }
  if (!(norm() > min_norm)) {
    throw std::invalid_argument("state vector norm must exceed " + std::to_string(min_norm));
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += std::norm(amp_[i]);
  return std::sqrt(s);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  Amplitudes scaled{};
  for (std::size_t i = 0; i < dim_; ++i) scaled[i] = amp_[i] / n;
  return StateVector(dim_, scaled, label_);
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in inner product");
  Complex s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amplitude(i)) * b.amplitude(i);
  return s;
}

Amplitudes apply(const Matrix& m, const StateVector& v) {
  if (m.dim() != v.dim()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  Amplitudes out{};
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v.amplitude(j);
    out[i] = s;
  }
  return out;
}

}  // namespace qlat
