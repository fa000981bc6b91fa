#ifndef COHIST_MPV_HPP
#define COHIST_MPV_HPP

#include <string>
#include <vector>

#include "cohist/histories.hpp"

namespace cohist {

struct MpvResult {
  double value = 0.0;
  std::vector<int> maximizer;  // subset of history indices
  std::string method;          // "exact", "grouped-zeno", or a bound name
};

inline constexpr int kMpvMaxHistories = 24;

/// Exact maximum over subsets S of |sum_{a != b in S} D_ab|, via Gray-code
/// enumeration with incremental pair sums. Ties are broken towards the
/// smallest subset, then lexicographically.
MpvResult mpv_exact(const DecoherenceMatrix& d, int n_max = kMpvMaxHistories);

struct ZenoViolations {
  double x = 0.0;  // sum over the |alpha| = 0,3 mod 4 classes
  double y = 0.0;  // sum over the |alpha| = 1,2 mod 4 classes
};

/// Signed off-diagonal subset sums of the Zeno decoherence matrix for the
/// two sign classes, computed in O(n^2) via binomial grouping.
ZenoViolations zeno_violations(int n, double epsilon);

/// The larger of the two sign-class violations, as an MpvResult.
MpvResult mpv_grouped_zeno(int n, double epsilon);

/// sum_{a != b} |Re D_ab|, halved when the set is homogeneous.
double bound_sum_abs(const DecoherenceMatrix& d);

enum class EpsVariant {
  Naive,                // delta / (n(n-1)), per-element criterion
  An1,                  // exact homogeneous selector
  An2,                  // exact general selector
  EpsChoice,            // delta / (2d), the headline selector
  MediumOrHomogeneous,  // delta / d
  MediumAndHomogeneous, // 2 delta / d
};

struct EpsSelection {
  double epsilon = 0.0;
  // False when delta >= 1 for a selector whose guarantee needs delta < 1.
  bool delta_in_range = true;
};

/// epsilon(delta) guaranteeing MPV <= delta (up to the documented order).
/// `dim_or_n` is the Hilbert-space dimension, except for Naive where it is
/// the history count.
EpsSelection eps_for_delta(double delta, int dim_or_n, EpsVariant variant);

/// Bound on |sum_{a != b in S} D_ab| implied by the DHC at eps:
/// relative to sum_{a in S} D_aa when homogeneous, absolute otherwise.
/// Throws Error outside the validity region.
double dh_sum_bound(double epsilon, int d, bool homogeneous);

/// Bound sum_a D_aa <= 1/(1 - (n-1) eps) for general class operators.
double diagonal_sum_bound(double epsilon, int n);

}  // namespace cohist

#endif  // COHIST_MPV_HPP
