#ifndef COHIST_CONSISTENCY_HPP
#define COHIST_CONSISTENCY_HPP

#include <string>
#include <utility>
#include <vector>

#include "cohist/histories.hpp"

namespace cohist {

/// How DHC-style criteria treat pairs involving a null history.
enum class NullPolicy {
  Skip,  // null pairs vacuously satisfy the criterion
  Fail,  // any null history fails the criterion outright
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  double achieved = 0.0;           // minimal epsilon at which the criterion passes
  std::pair<int, int> worst_pair{-1, -1};
};

struct ConsistencyReport {
  std::vector<CriterionResult> results;
  std::vector<int> nulls;
};

/// max |Re D_ab| over a != b against tol.
CriterionResult weak_consistency(const DecoherenceMatrix& d, double tol);

/// max |D_ab| over a != b against tol.
CriterionResult medium_consistency(const DecoherenceMatrix& d, double tol);

/// The bare per-element threshold max |D_ab| <= eps. Retained to exhibit
/// its failure: sets exist passing it with arbitrarily large MPV.
CriterionResult threshold_criterion(const DecoherenceMatrix& d, double eps);

/// Dowker-Halliwell criterion: |Re D_ab| <= eps sqrt(D_aa D_bb).
CriterionResult dhc(const DecoherenceMatrix& d, double eps,
                    NullPolicy policy = NullPolicy::Skip,
                    double null_tol = kNullTol);

/// As dhc with |D_ab| in the numerator; equals the distinguishability
/// ratio between history states.
CriterionResult medium_dhc(const DecoherenceMatrix& d, double eps,
                           NullPolicy policy = NullPolicy::Skip,
                           double null_tol = kNullTol);

/// |cos(theta_ab)| between real embeddings; equals the dhc ratio matrix.
/// Entries involving a null state are set to -1.
RealMatrix angle_form(const std::vector<Vector>& states,
                      double null_tol = kNullTol);

/// DHC evaluated on the current density matrix of the given past branch.
CriterionResult conditional_dhc(const HistorySet& set,
                                const ClassOperator& past,
                                const std::vector<ClassOperator>& futures,
                                double eps,
                                NullPolicy policy = NullPolicy::Skip);

}  // namespace cohist

#endif  // COHIST_CONSISTENCY_HPP
