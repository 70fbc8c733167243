#include "qlat/projector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlat {
namespace {

int checked_rank(const Matrix& m, double eps) {
  const Complex t = m.trace();
  const double rounded = std::round(t.real());
  if (std::abs(t.imag()) > eps || std::abs(t.real() - rounded) > eps) {
    throw std::invalid_argument("projector trace must be an integer within tolerance");
  }
  return static_cast<int>(rounded);
}

bool parse_qubit_name(const std::string& name, int& a, int& b) {
  // Accepts exactly "P[a,b]" with a in {1,2}, b in {1,2,3}.
  if (name.size() != 6 || name.compare(0, 2, "P[") != 0 || name[3] != ',' || name[5] != ']') {
    return false;
  }
  a = name[2] - '0';
  b = name[4] - '0';
  return (a == 1 || a == 2) && (b >= 1 && b <= 3);
}

}  // namespace

Projector::Projector(Matrix m, std::optional<std::string> name, double eps)
    : matrix_(std::move(m)), name_(std::move(name)), rank_(0) {
  if (!matrix_.has_finite_entries()) {
    throw std::invalid_argument("projector entries must be finite");
  }
  if (!matrix_.is_hermitian(eps)) {
    throw std::invalid_argument("projector must be Hermitian within tolerance");
  }
  if (frobenius_distance(matrix_ * matrix_, matrix_) > eps) {
    throw std::invalid_argument("projector must be idempotent within tolerance");
  }
  rank_ = checked_rank(matrix_, eps);
}

Projector Projector::renamed(std::optional<std::string> name) const {
  Projector copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Projector build_qubit_projector(int a, int b) {
  if (a != 1 && a != 2) throw std::out_of_range("outcome index must be 1 or 2");
  if (b < 1 || b > 3) throw std::out_of_range("axis index must be 1, 2 or 3");

  const double sign = (a == 1) ? -1.0 : 1.0;  // (-1)^a
  const double d1 = (b == 1) ? 1.0 : 0.0;
  const double d2 = (b == 2) ? 1.0 : 0.0;
  const double d3 = (b == 3) ? 1.0 : 0.0;

  // The + 0.0 terms squash negative zeros so serialized matrices are tidy.
  Matrix m(2);
  m(0, 0) = Complex{0.5 * (1.0 - sign * d3) + 0.0, 0.0};
  m(0, 1) = Complex{0.5 * sign * -d1 + 0.0, 0.5 * sign * d2 + 0.0};
  m(1, 0) = Complex{0.5 * sign * -d1 + 0.0, 0.5 * sign * -d2 + 0.0};
  m(1, 1) = Complex{0.5 * (1.0 + sign * d3) + 0.0, 0.0};

  const std::string name = "P[" + std::to_string(a) + "," + std::to_string(b) + "]";
  return Projector(std::move(m), name);
}

int partner_index(int n) {
  if (n != 1 && n != 2) throw std::out_of_range("outcome index must be 1 or 2");
  return n == 1 ? 2 : 1;
}

namespace {

const Matrix& qubit_matrix(int a, int b) {
  static const std::array<Matrix, 6> table = [] {
    std::array<Matrix, 6> m{Matrix(2), Matrix(2), Matrix(2), Matrix(2), Matrix(2), Matrix(2)};
    for (int bb = 1; bb <= 3; ++bb)
      for (int aa = 1; aa <= 2; ++aa)
        m[static_cast<std::size_t>((bb - 1) * 2 + (aa - 1))] =
            build_qubit_projector(aa, bb).matrix();
    return m;
  }();
  return table[static_cast<std::size_t>((b - 1) * 2 + (a - 1))];
}

}  // namespace

Projector negate_projector(const Projector& p) {
  Matrix m = Matrix::identity(p.dim()) - p.matrix();

  std::optional<std::string> name;
  if (p.rank() == static_cast<int>(p.dim())) {
    name = "{0}";
  } else if (p.rank() == 0) {
    name = "C^" + std::to_string(p.dim());
  } else if (p.name()) {
    int a = 0;
    int b = 0;
    if (parse_qubit_name(*p.name(), a, b) && p.dim() == 2 &&
        approx_equal(p.matrix(), qubit_matrix(a, b), 1e-12)) {
      name = "P[" + std::to_string(partner_index(a)) + "," + std::to_string(b) + "]";
    } else if (p.name()->rfind('!', 0) == 0) {
      name = p.name()->substr(1);
    } else {
      name = "!" + *p.name();
    }
  }
  return Projector(std::move(m), std::move(name));
}

bool resolution_check(int b, double eps) {
  const Projector p1 = build_qubit_projector(1, b);
  const Projector p2 = build_qubit_projector(2, b);
  return approx_equal(p1.matrix() + p2.matrix(), Matrix::identity(2), eps);
}

StateVector eigenstate(int a, int b) {
  const Projector p = build_qubit_projector(a, b);

  // Any nonzero column of a rank-1 projector spans its range.
  std::size_t col = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < 2; ++j) {
    const double n = std::sqrt(std::norm(p.matrix()(0, j)) + std::norm(p.matrix()(1, j)));
    if (n > best) {
      best = n;
      col = j;
    }
  }
  Amplitudes amp{p.matrix()(0, col) / best, p.matrix()(1, col) / best};

  double top = std::max(std::abs(amp[0]), std::abs(amp[1]));
  for (std::size_t i = 0; i < 2; ++i) {
    if (std::abs(amp[i]) >= top * (1.0 - 1e-12)) {
      const Complex phase = std::conj(amp[i]) / std::abs(amp[i]);
      amp[0] *= phase;
      amp[1] *= phase;
      break;
    }
  }
  const std::string label = "psi[" + std::to_string(a) + "," + std::to_string(b) + "]";
  return StateVector(2, amp, label);
}

bool membership(const StateVector& v, const Projector& p, double eps) {
  if (v.dim() != p.dim()) throw std::invalid_argument("dimension mismatch in membership test");
  const Amplitudes pv = apply(p.matrix(), v);
  double residual = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) residual += std::norm(pv[i] - v.amplitude(i));
  return std::sqrt(residual) <= eps * v.norm();
}

double expectation(const StateVector& v, const Projector& p) {
  if (v.dim() != p.dim()) throw std::invalid_argument("dimension mismatch in expectation");
  const StateVector psi = v.normalized();
  const Amplitudes pv = apply(p.matrix(), psi);
  Complex s{};
  for (std::size_t i = 0; i < psi.dim(); ++i) s += std::conj(psi.amplitude(i)) * pv[i];
  const double raw = s.real();
  if (raw < -1e-9 || raw > 1.0 + 1e-9) {
    throw std::domain_error("expectation value escaped [0, 1]");
  }
  return std::min(1.0, std::max(0.0, raw));
}

Projector span_projector(const StateVector& v) {
  const StateVector psi = v.normalized();
  Matrix m(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i)
    for (std::size_t j = 0; j < psi.dim(); ++j)
      m(i, j) = psi.amplitude(i) * std::conj(psi.amplitude(j));
  return Projector(std::move(m));
}

}  // namespace qlat
