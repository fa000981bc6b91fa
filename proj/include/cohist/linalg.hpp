#ifndef COHIST_LINALG_HPP
#define COHIST_LINALG_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohist/types.hpp"

namespace cohist {

/// Orthogonal projector with validated shape: P = P†, P² = P, integer trace.
struct Projector {
  Matrix matrix;
  int rank = 0;

  /// Validates and constructs; throws Error naming the violated invariant.
  static Projector make(Matrix m, double tol = kProjTol);
};

struct DecompositionCheck {
  bool ok = true;
  std::string message;
  // Indices of the first violated pair, or (-1, -1) for a sum violation.
  int first_i = -1;
  int first_j = -1;
};

/// Checks that the projectors sum to the identity and are mutually
/// orthogonal (P_i P_j = 0 for i != j).
DecompositionCheck validate_projector_decomposition(
    std::span<const Projector> ps, double tol = kProjTol);

struct DensityMatrix {
  Matrix matrix;
  bool pure = false;

  int dim() const { return static_cast<int>(matrix.rows()); }

  /// Validates Hermiticity, unit trace and positivity; throws Error otherwise.
  static DensityMatrix make(Matrix m, double tol = kProjTol);

  static DensityMatrix pure_state(const Vector& psi);
};

struct Purification {
  Vector state;      // |psi> in H1 (x) H2, dimension d * rank
  int rank = 0;      // dim(H2)
  int base_dim = 0;  // dim(H1)
};

/// Writes rho as the reduced state of a pure vector sum_i sqrt(p_i)
/// |psi_i> (x) |i>. Eigenvalues are sorted descending; ties are broken by
/// lexicographic eigenvector comparison so the result is deterministic.
Purification purify(const DensityMatrix& rho, double rank_tol = kRankTol);

/// Traces out the second factor of C^d (x) C^r from a pure state.
Matrix partial_trace_second(const Vector& psi, int d, int r);

/// Extends an operator on H1 to H1 (x) H2 as A (x) 1.
Matrix extend_operator(const Matrix& a, int r);

/// Real embedding Re(u) + Im(u) of a complex vector, an isometry under
/// which Re(u† u') becomes the ordinary dot product.
template <typename Derived>
RealVector real_embed(const Eigen::MatrixBase<Derived>& u) {
  const auto n = u.size();
  RealVector v(2 * n);
  v.head(n) = u.real();
  v.tail(n) = u.imag();
  return v;
}

}  // namespace cohist

#endif  // COHIST_LINALG_HPP
