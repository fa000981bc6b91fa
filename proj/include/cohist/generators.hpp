#ifndef COHIST_GENERATORS_HPP
#define COHIST_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "cohist/histories.hpp"

namespace cohist {

struct LargeViolationParams {
  int n = 2;           // history-pair count; the set has 2n histories
  double epsilon = 0.0;  // in (0, 1/(n-1)]
};

struct LargeViolationSet {
  HistorySet set;
  double expected_mpv = 0.0;  // (n-1) eps / 2
};

/// Large-violation family: 2n near-orthogonal history states in dimension
/// 2n whose exact MPV is (n-1) eps / 2 while the medium-DHC ratio is eps.
LargeViolationSet large_violation_set(const LargeViolationParams& p);

struct ZenoParams {
  int n = 1;             // number of projection steps
  double epsilon = 0.0;  // rotation per step, in (0, pi/2)
};

/// Explicit Zeno set: 2^n projector-chain histories on a qubit. n <= 14.
HistorySet zeno_set(const ZenoParams& p);

struct ZenoClass {
  int transitions = 0;  // |alpha|
  double count = 0.0;   // C(n, |alpha|) histories in the class
  double amplitude = 0.0;  // signed state amplitude of the class
};

struct ZenoClosedForm {
  std::vector<ZenoClass> classes;
  double x_violation = 0.0;
  double y_violation = 0.0;
  double max_offdiag = 0.0;  // largest |D_ab| over distinct pairs
  double theta = 0.0;        // n * epsilon
  double x_asymptotic = 0.0;  // large-n limit of the X violation
  double y_asymptotic = 0.0;
};

/// Grouped O(n^2) evaluation of the Zeno decoherence data for any n.
ZenoClosedForm zeno_closed_form(const ZenoParams& p);

struct ThresholdFailureWitness {
  double theta = 0.0;
  int n = 0;
  double max_offdiag = 0.0;
  double violation = 0.0;
};

/// Finds (theta, n) whose Zeno set has every off-diagonal element at most
/// eps_t in modulus yet MPV greater than x; the returned values are
/// verified through zeno_closed_form before being reported.
ThresholdFailureWitness threshold_failure_witness(double eps_t, double x);

struct PerturbParams {
  int dim = 8;
  int rank_p = 4;
  int samples = 100;
  double epsilon = 1e-2;
  std::uint64_t seed = 0;
};

struct PerturbReport {
  double mean_term1 = 0.0;  // DHC ratio between the surviving and leaked branch
  double se_term1 = 0.0;
  double mean_term2 = 0.0;  // DHC ratio between two leaked branches
  double se_term2 = 0.0;
  int excluded = 0;          // samples flagged for a null denominator
  double slope_exponent = 0.0;  // fitted eps-scaling of the off-diagonals
  std::vector<double> offdiag_by_scale;  // max |Re D'| at eps, eps/2, eps/4
};

/// Monte Carlo study of a consistent pair extended by a randomly perturbed
/// projector pair: the leaked-branch DHC ratios concentrate near
/// rank(P)^{-1/2} while the off-diagonal entries scale linearly in eps.
PerturbReport perturbation_experiment(const PerturbParams& p);

/// Random set of n histories in dimension d whose real embeddings are
/// orthogonal, perturbed by Gaussian noise of the given scale and
/// renormalised to unit total probability. Requires n <= 2d.
HistorySet random_near_consistent_set(int d, int n, double noise,
                                      std::uint64_t seed);

}  // namespace cohist

#endif  // COHIST_GENERATORS_HPP
