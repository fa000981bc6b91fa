#ifndef COHIST_TESTS_HELPERS_HPP
#define COHIST_TESTS_HELPERS_HPP

#include <random>

#include "cohist/types.hpp"

namespace cohist::testing {

inline Vector random_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int n) {
  Matrix m = random_matrix(rng, n, n);
  return Matrix(0.5 * (m + m.adjoint()));
}

inline Matrix random_density(std::mt19937_64& rng, int n) {
  Matrix m = random_matrix(rng, n, n);
  Matrix rho = m * m.adjoint();
  return Matrix(rho / rho.trace());
}

}  // namespace cohist::testing

#endif  // COHIST_TESTS_HELPERS_HPP
