#include <doctest.h>

#include <cmath>
#include <random>

#include "cohist/linalg.hpp"
#include "helpers.hpp"

using namespace cohist;

namespace {

Projector diag_projector(std::initializer_list<double> d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  int i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return Projector::make(std::move(m));
}

Projector spin_projector(double angle, bool plus) {
  Vector v(2);
  if (plus) {
    v << std::cos(angle), std::sin(angle);
  } else {
    v << -std::sin(angle), std::cos(angle);
  }
  return Projector::make(v * v.adjoint());
}

}  // namespace

TEST_CASE("projector construction validates shape") {
  auto p = diag_projector({1, 0, 0});
  CHECK(p.rank == 1);

  Matrix bad(2, 2);
  bad << 1.0, Complex(0, 1), 0.0, 0.0;
  CHECK_THROWS_AS(Projector::make(bad), Error);  // not Hermitian

  Matrix half = 0.5 * Matrix::Identity(2, 2);
  CHECK_THROWS_AS(Projector::make(half), Error);  // not idempotent
}

TEST_CASE("decomposition check: complementary diagonal projectors") {
  std::vector<Projector> ps{diag_projector({1, 0}), diag_projector({0, 1})};
  CHECK(validate_projector_decomposition(ps).ok);
}

TEST_CASE("decomposition check: rotated qubit pair") {
  std::vector<Projector> ps{spin_projector(0.3, true),
                            spin_projector(0.3, false)};
  CHECK(validate_projector_decomposition(ps).ok);
}

TEST_CASE("decomposition check: duplicated projector fails on the sum") {
  std::vector<Projector> ps{diag_projector({1, 0}), diag_projector({1, 0})};
  const auto check = validate_projector_decomposition(ps);
  CHECK_FALSE(check.ok);
  CHECK(check.message.find("sum") != std::string::npos);
}

TEST_CASE("decomposition check: rank sum equals the dimension") {
  std::vector<Projector> ps{diag_projector({1, 1, 0, 0}),
                            diag_projector({0, 0, 1, 0}),
                            diag_projector({0, 0, 0, 1})};
  REQUIRE(validate_projector_decomposition(ps).ok);
  int total = 0;
  for (const auto& p : ps) total += p.rank;
  CHECK(total == 4);
}

TEST_CASE("purify: rank-1 density is its own state") {
  Vector e1 = Vector::Zero(3);
  e1[0] = 1.0;
  const auto pur = purify(DensityMatrix::pure_state(e1));
  CHECK(pur.rank == 1);
  CHECK(pur.base_dim == 3);
  CHECK(max_abs(Matrix(pur.state - e1)) < 1e-12);
}

TEST_CASE("purify: maximally mixed qubit lives in dimension 4") {
  const auto rho = DensityMatrix::make(0.5 * Matrix::Identity(2, 2));
  const auto pur = purify(rho);
  CHECK(pur.rank == 2);
  CHECK(pur.state.size() == 4);
  const Matrix back = partial_trace_second(pur.state, 2, 2);
  CHECK(max_abs(Matrix(back - rho.matrix)) < kProjTol);
}

TEST_CASE("purify then partial trace is the identity on random densities") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = DensityMatrix::make(testing::random_density(rng, 5));
    const auto pur = purify(rho);
    const Matrix back = partial_trace_second(pur.state, 5, pur.rank);
    CHECK(max_abs(Matrix(back - rho.matrix)) < kProjTol);
  }
}

TEST_CASE("purify rejects a non-positive matrix") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::make(m), Error);
}

TEST_CASE("extend_operator acts as A on the first factor") {
  std::mt19937_64 rng(7);
  const Matrix a = testing::random_matrix(rng, 3, 3);
  const Matrix ext = extend_operator(a, 2);
  REQUIRE(ext.rows() == 6);
  // (A (x) 1)(e_i (x) e_k) = (A e_i) (x) e_k with the psi[j*r+i] layout.
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 2; ++k) {
      Vector in = Vector::Zero(6);
      in[i * 2 + k] = 1.0;
      const Vector out = ext * in;
      for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(out[j * 2 + k] - a(j, i)) < 1e-14);
      }
    }
  }
}

TEST_CASE("real embedding is an isometry preserving Re of the inner product") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector u = testing::random_vector(rng, 5);
    const Vector up = testing::random_vector(rng, 5);
    const RealVector v = real_embed(u);
    const RealVector vp = real_embed(up);
    CHECK(std::abs(v.norm() - u.norm()) < 1e-14 * u.norm());
    // u.dot(up) conjugates u, so its real part is the embedded dot product.
    CHECK(std::abs(v.dot(vp) - u.dot(up).real()) < 1e-13);
  }
}

TEST_CASE("at most 2d pairwise-orthogonal nonzero real embeddings exist") {
  const int d = 4;
  std::mt19937_64 rng(19);
  // 2d orthonormal candidates fill the embedded space; any further nonzero
  // vector must overlap one of them.
  Eigen::HouseholderQR<RealMatrix> qr(RealMatrix::NullaryExpr(
      2 * d, 2 * d, [&](Eigen::Index, Eigen::Index) {
        return std::normal_distribution<double>()(rng);
      }));
  const RealMatrix basis = qr.householderQ() * RealMatrix::Identity(2 * d, 2 * d);
  const RealVector extra = real_embed(testing::random_vector(rng, d)).normalized();
  double max_overlap = 0.0;
  for (int i = 0; i < 2 * d; ++i) {
    max_overlap = std::max(max_overlap, std::abs(basis.col(i).dot(extra)));
  }
  // ||extra||^2 = sum of the 2d squared overlaps, so the largest is at
  // least 1/sqrt(2d): a (2d+1)-th mutually orthogonal vector cannot exist.
  CHECK(max_overlap >= 1.0 / std::sqrt(2.0 * d) - 1e-12);
}
