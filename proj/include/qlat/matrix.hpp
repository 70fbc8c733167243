#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>

namespace qlat {

using Complex = std::complex<double>;

/// Largest supported Hilbert-space dimension. Everything runs at desk scale,
/// so fixed-capacity storage keeps values allocation-free and cheap to copy.
inline constexpr std::size_t kMaxDim = 8;

using Amplitudes = std::array<Complex, kMaxDim>;

/// Dense square complex matrix, row-major, dim in [1, kMaxDim].
class Matrix {
 public:
  explicit Matrix(std::size_t dim);

  static Matrix zero(std::size_t dim);
  static Matrix identity(std::size_t dim);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  Matrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool has_finite_entries() const;
  bool is_hermitian(double eps) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);

 private:
  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(Complex scalar, const Matrix& m);

double frobenius_distance(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, double eps);

/// Nonzero vector in C^dim. Construction rejects vectors whose norm is at or
/// below min_norm, so a StateVector always represents a physical preparation.
class StateVector {
 public:
  StateVector(std::size_t dim, std::initializer_list<Complex> amplitudes,
              std::optional<std::string> label = std::nullopt, double min_norm = 1e-9);
  StateVector(std::size_t dim, const Amplitudes& amplitudes,
              std::optional<std::string> label = std::nullopt, double min_norm = 1e-9);

  std::size_t dim() const { return dim_; }
  const Complex& amplitude(std::size_t i) const { return amp_[i]; }
  const Amplitudes& amplitudes() const { return amp_; }
  const std::optional<std::string>& label() const { return label_; }

  double norm() const;
  StateVector normalized() const;

 private:
  void validate(double min_norm) const;

  std::size_t dim_;
  Amplitudes amp_{};
  std::optional<std::string> label_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);

/// m * v. The result can be the zero vector, hence the raw array return;
/// entries at index >= m.dim() are zero.
Amplitudes apply(const Matrix& m, const StateVector& v);

}  // namespace qlat
