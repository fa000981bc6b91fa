#include "cohist/mpv.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace cohist {

namespace {

std::vector<int> mask_to_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

// True when subset `a` beats `b` in the tie-break: fewer members, then
// lexicographically smaller index list.
bool subset_better(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Equal size: lexicographic order on the sorted index lists.
  while (a && b) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

MpvResult mpv_exact(const DecoherenceMatrix& d, int n_max) {
  const int n = d.size();
  if (n > n_max) {
    std::ostringstream os;
    os << "mpv_exact: " << n << " histories exceeds n_max = " << n_max
       << "; use the bound functions instead";
    throw Error(os.str());
  }
  RealMatrix re = d.entries.real();

  // Gray-code walk: toggling one element updates the pairwise sum with a
  // single row sum over the current members.
  double pair_sum = 0.0;  // sum over a < b in S of Re D_ab
  std::uint32_t members = 0;
  double best = 0.0;
  std::uint32_t best_mask = 0;
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    double row = 0.0;
    for (std::uint32_t m = members; m;) {
      const int j = std::countr_zero(m);
      m &= m - 1;
      row += re(bit, j);
    }
    if (members & (1u << bit)) {
      members &= ~(1u << bit);
      pair_sum -= row - re(bit, bit);  // row included the removed element
    } else {
      members |= 1u << bit;
      pair_sum += row;
    }
    const double value = std::abs(2.0 * pair_sum);
    if (value > best ||
        (value == best && subset_better(members, best_mask))) {
      best = value;
      best_mask = members;
    }
  }
  // The empty set attains 0; keep it when nothing beats that.
  if (best == 0.0) best_mask = 0;
  return MpvResult{best, mask_to_indices(best_mask), "exact"};
}

ZenoViolations zeno_violations(int n, double epsilon) {
  if (n < 1) throw Error("zeno_violations: n must be >= 1");
  const double c = std::cos(epsilon), s = std::sin(epsilon);
  // t[k] = C(n,k) cos^{n-k} sin^k, q[k] = C(n,k) cos^{2(n-k)} sin^{2k},
  // built iteratively to stay finite at large n.
  std::vector<double> t(n + 1), q(n + 1);
  t[0] = std::pow(c, n);
  q[0] = std::pow(c, 2 * n);
  for (int k = 0; k < n; ++k) {
    const double ratio = static_cast<double>(n - k) / (k + 1);
    t[k + 1] = t[k] * ratio * (s / c);
    q[k + 1] = q[k] * ratio * (s / c) * (s / c);
  }
  auto sign = [](int k) { return ((k + 1) / 2) % 2 == 0 ? 1.0 : -1.0; };
  // Cross terms between opposite parities vanish, so each class splits
  // into an even and an odd block.
  double sx[2] = {0, 0}, qx[2] = {0, 0}, sy[2] = {0, 0}, qy[2] = {0, 0};
  for (int k = 0; k <= n; ++k) {
    const int p = k % 2;
    if (k % 4 == 0 || k % 4 == 3) {
      sx[p] += sign(k) * t[k];
      qx[p] += q[k];
    } else {
      sy[p] += sign(k) * t[k];
      qy[p] += q[k];
    }
  }
  ZenoViolations v;
  v.x = (sx[0] * sx[0] - qx[0]) + (sx[1] * sx[1] - qx[1]);
  v.y = (sy[0] * sy[0] - qy[0]) + (sy[1] * sy[1] - qy[1]);
  return v;
}

MpvResult mpv_grouped_zeno(int n, double epsilon) {
  const auto v = zeno_violations(n, epsilon);
  MpvResult r;
  if (std::abs(v.x) >= std::abs(v.y)) {
    r.value = std::abs(v.x);
    r.method = "grouped-zeno(X)";
  } else {
    r.value = std::abs(v.y);
    r.method = "grouped-zeno(Y)";
  }
  return r;
}

double bound_sum_abs(const DecoherenceMatrix& d) {
  double sum = 0.0;
  for (int a = 0; a < d.size(); ++a) {
    for (int b = 0; b < d.size(); ++b) {
      if (a != b) sum += std::abs(d.entries(a, b).real());
    }
  }
  return d.homogeneous ? 0.5 * sum : sum;
}

EpsSelection eps_for_delta(double delta, int dim_or_n, EpsVariant variant) {
  if (delta <= 0.0) throw Error("eps_for_delta: delta must be positive");
  if (dim_or_n < 1) throw Error("eps_for_delta: dimension must be >= 1");
  const double d = dim_or_n;
  EpsSelection out;
  switch (variant) {
    case EpsVariant::Naive:
      if (dim_or_n < 2) throw Error("eps_for_delta: naive needs n >= 2");
      out.epsilon = delta / (d * (d - 1.0));
      break;
    case EpsVariant::An1:
      out.epsilon = (-(2 * d - 1) +
                     std::sqrt((2 * d - 1) * (2 * d - 1) + 8 * d * delta * delta)) /
                    (4 * d * delta);
      break;
    case EpsVariant::An2: {
      const double a = (2 * d - 1) * (1 + delta);
      out.epsilon = (-a + std::sqrt(a * a + 8 * d * delta * delta)) / (4 * d * delta);
      break;
    }
    case EpsVariant::EpsChoice:
      out.epsilon = delta / (2 * d);
      out.delta_in_range = delta < 1.0;
      break;
    case EpsVariant::MediumOrHomogeneous:
      out.epsilon = delta / d;
      out.delta_in_range = delta < 1.0;
      break;
    case EpsVariant::MediumAndHomogeneous:
      out.epsilon = 2 * delta / d;
      out.delta_in_range = delta < 1.0;
      break;
  }
  return out;
}

double dh_sum_bound(double epsilon, int d, bool homogeneous) {
  if (epsilon < 0.0) throw Error("dh_sum_bound: epsilon must be >= 0");
  const double dd = d;
  if (homogeneous) {
    const double den = 1.0 - 2.0 * dd * epsilon * epsilon;
    if (den <= 0.0) {
      throw Error("dh_sum_bound: requires eps^2 < 1/(2d)");
    }
    return epsilon * (2 * dd - 1) / den;
  }
  const double den = 1.0 + epsilon - 2.0 * dd * epsilon * (1.0 + epsilon);
  if (den <= 0.0) {
    throw Error("dh_sum_bound: requires 1 + eps - 2d eps (1 + eps) > 0");
  }
  return epsilon * (2 * dd - 1) / den;
}

double diagonal_sum_bound(double epsilon, int n) {
  const double den = 1.0 - (n - 1) * epsilon;
  if (den <= 0.0) {
    throw Error("diagonal_sum_bound: requires (n-1) eps < 1");
  }
  return 1.0 / den;
}

}  // namespace cohist
