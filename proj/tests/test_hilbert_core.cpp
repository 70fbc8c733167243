#include <cmath>
#include <random>

#include <doctest.h>

#include "qlat/eigen.hpp"
#include "qlat/projector.hpp"

#include "helpers.hpp"

using namespace qlat;

namespace {

const double kHalf = 0.5;
const Complex kI{0.0, 1.0};

Matrix expected_matrix(int a, int b) {
  // Hand-expanded closed forms for all six spin projectors.
  switch (b * 10 + a) {
    case 11: return Matrix::from_rows({{kHalf, kHalf}, {kHalf, kHalf}});
    case 12: return Matrix::from_rows({{kHalf, -kHalf}, {-kHalf, kHalf}});
    case 21: return Matrix::from_rows({{kHalf, -kHalf * kI}, {kHalf * kI, kHalf}});
    case 22: return Matrix::from_rows({{kHalf, kHalf * kI}, {-kHalf * kI, kHalf}});
    case 31: return Matrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
    case 32: return Matrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
    default: FAIL("bad index"); return Matrix(2);
  }
}

}  // namespace

TEST_CASE("spin projectors match their closed forms exactly") {
  for (int b = 1; b <= 3; ++b) {
    for (int a = 1; a <= 2; ++a) {
      CAPTURE(a);
      CAPTURE(b);
      const Projector p = build_qubit_projector(a, b);
      CHECK(frobenius_distance(p.matrix(), expected_matrix(a, b)) == 0.0);
      CHECK(*p.name() == "P[" + std::to_string(a) + "," + std::to_string(b) + "]");
      CHECK(p.rank() == 1);
    }
  }
  CHECK_THROWS_AS(build_qubit_projector(0, 1), std::out_of_range);
  CHECK_THROWS_AS(build_qubit_projector(3, 1), std::out_of_range);
  CHECK_THROWS_AS(build_qubit_projector(1, 0), std::out_of_range);
  CHECK_THROWS_AS(build_qubit_projector(1, 4), std::out_of_range);
}

TEST_CASE("projector laws hold far below the working tolerance") {
  for (int b = 1; b <= 3; ++b) {
    for (int a = 1; a <= 2; ++a) {
      const Projector p = build_qubit_projector(a, b);
      const Matrix& m = p.matrix();
      CHECK(frobenius_distance(m, m.adjoint()) <= 1e-12);
      CHECK(frobenius_distance(m * m, m) <= 1e-12);
      CHECK(std::abs(m.trace().real() - 1.0) <= 1e-12);
      CHECK(std::abs(m.trace().imag()) <= 1e-12);
    }
  }
}

TEST_CASE("outcome projectors resolve the identity exactly") {
  for (int b = 1; b <= 3; ++b) {
    CAPTURE(b);
    CHECK(resolution_check(b));
    const Matrix sum =
        build_qubit_projector(1, b).matrix() + build_qubit_projector(2, b).matrix();
    CHECK(frobenius_distance(sum, Matrix::identity(2)) == 0.0);
  }
}

TEST_CASE("negation lands on the partner projector, exactly") {
  CHECK(partner_index(1) == 2);
  CHECK(partner_index(2) == 1);
  CHECK_THROWS_AS(partner_index(0), std::out_of_range);
  for (int b = 1; b <= 3; ++b) {
    for (int a = 1; a <= 2; ++a) {
      const Projector negated = negate_projector(build_qubit_projector(a, b));
      const Projector partner = build_qubit_projector(partner_index(a), b);
      CHECK(frobenius_distance(negated.matrix(), partner.matrix()) == 0.0);
      CHECK(*negated.name() == *partner.name());
    }
  }
}

TEST_CASE("negation naming for non-family projectors") {
  const Projector p(Matrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}), "A");
  const Projector np = negate_projector(p);
  CHECK(*np.name() == "!A");
  CHECK(*negate_projector(np).name() == "A");

  const Projector full(Matrix::identity(2), "everything");
  CHECK(*negate_projector(full).name() == "{0}");
  const Projector none(Matrix::zero(3));
  CHECK(*negate_projector(none).name() == "C^3");
}

TEST_CASE("eigenstates are the frozen unit vectors") {
  const double s = 1.0 / std::sqrt(2.0);
  const struct {
    int a;
    int b;
    Complex first;
    Complex second;
  } expected[] = {
      {1, 3, {1.0, 0.0}, {0.0, 0.0}},  {2, 3, {0.0, 0.0}, {1.0, 0.0}},
      {1, 1, {s, 0.0}, {s, 0.0}},      {2, 1, {s, 0.0}, {-s, 0.0}},
      {1, 2, {s, 0.0}, {0.0, s}},      {2, 2, {s, 0.0}, {0.0, -s}},
  };
  for (const auto& e : expected) {
    CAPTURE(e.a);
    CAPTURE(e.b);
    const StateVector psi = eigenstate(e.a, e.b);
    CHECK(std::abs(psi.amplitude(0) - e.first) <= 1e-12);
    CHECK(std::abs(psi.amplitude(1) - e.second) <= 1e-12);
    CHECK(std::abs(psi.norm() - 1.0) <= 1e-12);
    CHECK(*psi.label() == "psi[" + std::to_string(e.a) + "," + std::to_string(e.b) + "]");
    CHECK(membership(psi, build_qubit_projector(e.a, e.b)));
    CHECK_FALSE(membership(psi, build_qubit_projector(partner_index(e.a), e.b)));
  }
}

TEST_CASE("membership distinguishes range vectors from outsiders") {
  const Projector p = build_qubit_projector(1, 3);
  CHECK(membership(StateVector(2, {Complex{2.0, 0.0}, Complex{}}), p));
  CHECK_FALSE(membership(StateVector(2, {Complex{}, Complex{1.0, 0.0}}), p));
  CHECK_FALSE(membership(eigenstate(1, 1), p));
  CHECK_THROWS_AS(membership(StateVector(3, {Complex{1.0, 0.0}, Complex{}, Complex{}}), p),
                  std::invalid_argument);
}

TEST_CASE("expectation of a cross-axis eigenstate is one half") {
  CHECK(std::abs(expectation(eigenstate(1, 1), build_qubit_projector(1, 2)) - 0.5) <= 1e-12);
  CHECK(std::abs(expectation(eigenstate(1, 1), build_qubit_projector(1, 3)) - 0.5) <= 1e-12);
  CHECK(std::abs(expectation(eigenstate(1, 3), build_qubit_projector(1, 3)) - 1.0) <= 1e-12);
  CHECK(std::abs(expectation(eigenstate(2, 3), build_qubit_projector(1, 3)) - 0.0) <= 1e-12);
}

TEST_CASE("expectation is normalization-invariant and complement-additive") {
  std::mt19937 rng(881205);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector psi = testing::random_unit_state(rng, 2);
    for (int b = 1; b <= 3; ++b) {
      const Projector p = build_qubit_projector(1, b);
      const double d = expectation(psi, p);
      CHECK(d >= 0.0);
      CHECK(d <= 1.0);
      CHECK(std::abs(d + expectation(psi, negate_projector(p)) - 1.0) <= 1e-10);

      const StateVector scaled(2, {psi.amplitude(0) * 3.0, psi.amplitude(1) * 3.0});
      CHECK(std::abs(expectation(scaled, p) - d) <= 1e-12);
    }
  }
}

TEST_CASE("projector construction rejects non-projectors") {
  CHECK_THROWS_AS(Projector(Matrix::from_rows({{1.0, 1.0}, {0.0, 1.0}})), std::invalid_argument);
  CHECK_THROWS_AS(Projector(Matrix::from_rows({{0.5, 0.0}, {0.0, 0.5}})), std::invalid_argument);
  CHECK_THROWS_AS(Projector(Matrix::from_rows({{2.0, 0.0}, {0.0, 0.0}})), std::invalid_argument);
}

TEST_CASE("state vectors must be usable preparations") {
  CHECK_THROWS_AS(StateVector(2, {Complex{}, Complex{}}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(2, {Complex{1e-12, 0.0}, Complex{}}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(StateVector(2, {Complex{inf, 0.0}, Complex{}}), std::invalid_argument);
}

TEST_CASE("closed-form eigenvalues of a projector sum") {
  const Matrix sum = build_qubit_projector(1, 3).matrix() + build_qubit_projector(1, 1).matrix();
  const EigenDecomposition d = hermitian_eigendecomposition(sum);
  REQUIRE(d.values.size() == 2);
  CHECK(std::abs(d.values[0] - (1.0 - std::sqrt(0.5))) <= 1e-12);
  CHECK(std::abs(d.values[1] - (1.0 + std::sqrt(0.5))) <= 1e-12);
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
  std::mt19937 rng(424242);
  for (std::size_t dim = 1; dim <= kMaxDim; ++dim) {
    for (int trial = 0; trial < 20; ++trial) {
      CAPTURE(dim);
      CAPTURE(trial);
      const Matrix m = testing::random_hermitian(rng, dim);
      const EigenDecomposition d = hermitian_eigendecomposition(m);

      REQUIRE(d.values.size() == dim);
      for (std::size_t k = 0; k + 1 < dim; ++k) CHECK(d.values[k] <= d.values[k + 1]);

      // Columns orthonormal: V adj(V) == I.
      CHECK(frobenius_distance(d.vectors * d.vectors.adjoint(), Matrix::identity(dim)) <= 1e-10);

      Matrix rebuilt(dim);
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j)
            rebuilt(i, j) += d.values[k] * d.vectors(i, k) * std::conj(d.vectors(j, k));
      CHECK(frobenius_distance(rebuilt, m) <= 1e-10 * static_cast<double>(dim));
    }
  }
}

TEST_CASE("eigendecomposition rejects non-Hermitian input") {
  CHECK_THROWS_AS(hermitian_eigendecomposition(Matrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})),
                  std::invalid_argument);
}
