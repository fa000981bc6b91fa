#include "cohist/consistency.hpp"

#include <cmath>

namespace cohist {

namespace {

// Scans all ordered pairs a < b, recording the maximum of `value` with a
// lexicographic tie-break, skipping pairs rejected by `keep`.
template <typename Value, typename Keep>
CriterionResult scan_pairs(const std::string& name, int n, double eps,
                           Value value, Keep keep) {
  CriterionResult r;
  r.name = name;
  r.achieved = 0.0;
  bool any = false;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!keep(a, b)) continue;
      const double v = value(a, b);
      if (!any || v > r.achieved) {
        r.achieved = v;
        r.worst_pair = {a, b};
        any = true;
      }
    }
  }
  r.pass = r.achieved <= eps;
  return r;
}

}  // namespace

CriterionResult weak_consistency(const DecoherenceMatrix& d, double tol) {
  return scan_pairs(
      "weak", d.size(), tol,
      [&](int a, int b) { return std::abs(d.entries(a, b).real()); },
      [](int, int) { return true; });
}

CriterionResult medium_consistency(const DecoherenceMatrix& d, double tol) {
  return scan_pairs(
      "medium", d.size(), tol,
      [&](int a, int b) { return std::abs(d.entries(a, b)); },
      [](int, int) { return true; });
}

CriterionResult threshold_criterion(const DecoherenceMatrix& d, double eps) {
  auto r = scan_pairs(
      "threshold", d.size(), eps,
      [&](int a, int b) { return std::abs(d.entries(a, b)); },
      [](int, int) { return true; });
  return r;
}

namespace {

CriterionResult dhc_impl(const std::string& name, bool modulus,
                         const DecoherenceMatrix& d, double eps,
                         NullPolicy policy, double null_tol) {
  const int n = d.size();
  std::vector<bool> null(n);
  int null_count = 0;
  for (int a = 0; a < n; ++a) {
    null[a] = d.probability(a) <= null_tol;
    if (null[a]) ++null_count;
  }
  if (null_count == n) throw Error(name + ": all histories are null");

  auto r = scan_pairs(
      name, n, eps,
      [&](int a, int b) {
        const double num = modulus ? std::abs(d.entries(a, b))
                                   : std::abs(d.entries(a, b).real());
        return num / std::sqrt(d.probability(a) * d.probability(b));
      },
      [&](int a, int b) { return !null[a] && !null[b]; });
  if (policy == NullPolicy::Fail && null_count > 0) r.pass = false;
  return r;
}

}  // namespace

CriterionResult dhc(const DecoherenceMatrix& d, double eps, NullPolicy policy,
                    double null_tol) {
  return dhc_impl("dhc", false, d, eps, policy, null_tol);
}

CriterionResult medium_dhc(const DecoherenceMatrix& d, double eps,
                           NullPolicy policy, double null_tol) {
  return dhc_impl("medium-dhc", true, d, eps, policy, null_tol);
}

RealMatrix angle_form(const std::vector<Vector>& states, double null_tol) {
  const int n = static_cast<int>(states.size());
  RealMatrix out = RealMatrix::Zero(n, n);
  std::vector<double> norms(n);
  for (int a = 0; a < n; ++a) norms[a] = real_embed(states[a]).norm();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (norms[a] * norms[a] <= null_tol || norms[b] * norms[b] <= null_tol) {
        out(a, b) = -1.0;  // flagged: null state
        continue;
      }
      const double dot = real_embed(states[a]).dot(real_embed(states[b]));
      out(a, b) = std::abs(dot) / (norms[a] * norms[b]);
    }
  }
  return out;
}

CriterionResult conditional_dhc(const HistorySet& set,
                                const ClassOperator& past,
                                const std::vector<ClassOperator>& futures,
                                double eps, NullPolicy policy) {
  DensityMatrix rho_c = current_density_matrix(set, past);
  auto cond = HistorySet::from_density(rho_c, futures, {}, set.homogeneous);
  auto d = decoherence_matrix_trace(cond);
  auto r = dhc(d, eps, policy);
  r.name = "conditional-dhc";
  return r;
}

}  // namespace cohist
