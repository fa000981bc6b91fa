#ifndef COHIST_HISTORIES_HPP
#define COHIST_HISTORIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "cohist/linalg.hpp"

namespace cohist {

/// One history's class operator. Chains of projectors are folded into a
/// single matrix at construction (Heisenberg picture).
struct ClassOperator {
  Matrix matrix;
};

struct HistorySet {
  int dim = 0;
  DensityMatrix initial;
  std::optional<Vector> pure_state;  // set when the initial state is pure
  std::vector<ClassOperator> ops;
  std::vector<std::string> labels;
  bool homogeneous = false;

  int size() const { return static_cast<int>(ops.size()); }

  /// True when the class operators sum to the identity within tol.
  /// Reported, never enforced: coarse-grained inputs may omit histories.
  bool complete(double tol = kCompleteTol) const;

  static HistorySet from_pure(Vector psi, std::vector<ClassOperator> ops,
                              std::vector<std::string> labels,
                              bool homogeneous);
  static HistorySet from_density(DensityMatrix rho,
                                 std::vector<ClassOperator> ops,
                                 std::vector<std::string> labels,
                                 bool homogeneous);
};

struct DecoherenceMatrix {
  Matrix entries;
  bool homogeneous = false;

  int size() const { return static_cast<int>(entries.rows()); }
  double probability(int a) const { return entries(a, a).real(); }
};

/// Partition (or sub-collection) of history indices.
struct CoarseGraining {
  std::vector<std::vector<int>> cells;
};

/// One class operator per element of the Cartesian product of the
/// decompositions, ordered latest-time leftmost.
std::vector<ClassOperator> build_chain_operators(
    const std::vector<std::vector<Projector>>& decomps);

/// Labels matching build_chain_operators, "i2.i1" style (latest first).
std::vector<std::string> chain_labels(
    const std::vector<std::vector<Projector>>& decomps);

/// u_alpha = C_alpha |psi>, purifying a mixed initial state first.
std::vector<Vector> history_states(const HistorySet& set);

/// Gram matrix of the history states: D_ab = u_b† u_a.
DecoherenceMatrix decoherence_matrix(const HistorySet& set);

/// Same matrix via the trace formula D_ab = Tr(C_a rho C_b†); kept as an
/// algebraically independent route to the decoherence matrix.
DecoherenceMatrix decoherence_matrix_trace(const HistorySet& set);

/// D*_bc = sum over (a in cell b, b in cell c) of D_ab.
DecoherenceMatrix coarse_grain(const DecoherenceMatrix& d,
                               const CoarseGraining& g);

/// rho_c = C_p rho C_p† / Tr(C_p rho C_p†); throws Error on a null branch.
DensityMatrix current_density_matrix(const HistorySet& set,
                                     const ClassOperator& past,
                                     double null_tol = kNullTol);

/// Indices of histories with probability <= null_tol.
std::vector<int> null_histories(const DecoherenceMatrix& d,
                                double null_tol = kNullTol);

}  // namespace cohist

#endif  // COHIST_HISTORIES_HPP
