#include "cohist/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cohist/mpv.hpp"

namespace cohist {

LargeViolationSet large_violation_set(const LargeViolationParams& p) {
  const int n = p.n;
  const double eps = p.epsilon;
  if (n < 2) throw Error("large_violation_set: n must be >= 2");
  if (eps <= 0.0 || eps > 1.0 / (n - 1) + 1e-15) {
    std::ostringstream os;
    os << "large_violation_set: epsilon must satisfy 0 < eps <= 1/(n-1) = "
       << 1.0 / (n - 1);
    throw Error(os.str());
  }
  const double a =
      (1 + eps + std::sqrt((1 + eps) * std::max(0.0, 1 + eps - n * eps))) / eps;
  const double b =
      (1 - eps + std::sqrt((1 - eps) * (1 - eps + n * eps))) / eps;

  RealMatrix u(n, n), v(n, n);  // columns are the u_i / v_i
  const double nu = std::sqrt(a * a - 2 * a + n);
  const double nv = std::sqrt(b * b + 2 * b + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u(j, i) = ((i == j ? a : 0.0) - 1.0) / nu;
      v(j, i) = ((i == j ? b : 0.0) + 1.0) / nv;
    }
  }
  // Stated Gram structure of the two families.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double gu = (i == j) ? 1.0 : -eps;
      const double gv = (i == j) ? 1.0 : eps;
      if (std::abs(u.col(i).dot(u.col(j)) - gu) > 1e-10 ||
          std::abs(v.col(i).dot(v.col(j)) - gv) > 1e-10) {
        throw Error("large_violation_set: inner-product structure failed");
      }
    }
  }

  const int dim = 2 * n;
  std::vector<Vector> w(n);
  for (int i = 0; i < n; ++i) {
    Vector wi = Vector::Zero(dim);
    wi.head(n) = (u.col(i) / std::sqrt(2.0)).cast<Complex>();
    wi.tail(n) = (v.col(i) / std::sqrt(2.0)).cast<Complex>();
    w[i] = wi;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      if (std::abs(w[i].dot(w[j]) - expect) > 1e-10) {
        throw Error("large_violation_set: w_i are not orthonormal");
      }
    }
  }

  Vector psi = Vector::Zero(dim);
  for (int i = 0; i < n; ++i) psi += w[i] / std::sqrt(double(n));

  Matrix q1 = Matrix::Zero(dim, dim), q2 = Matrix::Zero(dim, dim);
  q1.topLeftCorner(n, n).setIdentity();
  q2.bottomRightCorner(n, n).setIdentity();

  std::vector<ClassOperator> ops;
  std::vector<std::string> labels;
  ops.reserve(dim);
  for (int i = 0; i < n; ++i) {
    ops.push_back({q1 * (w[i] * w[i].adjoint())});
    labels.push_back("u" + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    ops.push_back({q2 * (w[i] * w[i].adjoint())});
    labels.push_back("v" + std::to_string(i + 1));
  }

  LargeViolationSet out{
      HistorySet::from_pure(std::move(psi), std::move(ops), std::move(labels),
                            /*homogeneous=*/true),
      (n - 1) * eps / 2.0};
  return out;
}

namespace {

Vector zeno_vector(int step, bool plus, double eps) {
  const double a = step * eps;
  Vector v(2);
  if (plus) {
    v << std::cos(a), std::sin(a);
  } else {
    v << -std::sin(a), std::cos(a);
  }
  return v;
}

}  // namespace

HistorySet zeno_set(const ZenoParams& p) {
  if (p.n < 1) throw Error("zeno_set: n must be >= 1");
  if (p.n > 14) {
    throw Error("zeno_set: n > 14 enumerates too many histories; "
                "use zeno_closed_form");
  }
  if (p.epsilon < 0.0 || p.epsilon >= M_PI / 2.0) {
    throw Error("zeno_set: epsilon must lie in [0, pi/2)");
  }
  std::vector<std::vector<Projector>> decomps;
  for (int k = 1; k <= p.n; ++k) {
    Vector up = zeno_vector(k, true, p.epsilon);
    Vector um = zeno_vector(k, false, p.epsilon);
    decomps.push_back({Projector::make(up * up.adjoint()),
                       Projector::make(um * um.adjoint())});
  }
  auto ops = build_chain_operators(decomps);
  // Choice index 0 is '+', 1 is '-'; earliest step varies fastest.
  std::vector<std::string> labels(ops.size());
  for (std::size_t c = 0; c < ops.size(); ++c) {
    std::string s(p.n, '+');
    for (int k = 0; k < p.n; ++k) {
      if ((c >> k) & 1) s[k] = '-';
    }
    labels[c] = s;
  }
  Vector psi = zeno_vector(0, true, p.epsilon);
  return HistorySet::from_pure(std::move(psi), std::move(ops),
                               std::move(labels), /*homogeneous=*/true);
}

ZenoClosedForm zeno_closed_form(const ZenoParams& p) {
  if (p.n < 1) throw Error("zeno_closed_form: n must be >= 1");
  const int n = p.n;
  const double eps = p.epsilon;
  const double c = std::cos(eps), s = std::sin(eps);

  ZenoClosedForm out;
  out.theta = n * eps;
  std::vector<double> amp(n + 1);
  double count = 1.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = ((k + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    amp[k] = sign * std::pow(c, n - k) * std::pow(s, k);
    out.classes.push_back({k, count, amp[k]});
    count = count * (n - k) / (k + 1);
  }
  for (int k = 0; k <= n; ++k) {
    for (int l = k; l <= n; ++l) {
      if ((l - k) % 2 != 0) continue;
      if (k == l && out.classes[k].count < 2) continue;
      out.max_offdiag = std::max(out.max_offdiag, std::abs(amp[k] * amp[l]));
    }
  }
  const auto v = zeno_violations(n, eps);
  out.x_violation = v.x;
  out.y_violation = v.y;
  const double th = out.theta;
  out.x_asymptotic = 0.5 * std::cosh(th) * std::cosh(th) +
                     0.5 * std::cos(th) * std::cosh(th) -
                     0.5 * std::sin(th) * std::sinh(th) - 1.0;
  out.y_asymptotic = 0.5 * std::cosh(th) * std::cosh(th) -
                     0.5 * std::cos(th) * std::cosh(th) +
                     0.5 * std::sin(th) * std::sinh(th);
  return out;
}

ThresholdFailureWitness threshold_failure_witness(double eps_t, double x) {
  if (eps_t <= 0.0 || x <= 0.0) {
    throw Error("threshold_failure_witness: eps_t and x must be positive");
  }
  // theta first: the Y-class violation grows like cosh^2(theta)/2, so
  // cosh^2(theta) > 2(x+1) leaves headroom for the finite-n correction.
  int theta = 1;
  while (std::cosh(double(theta)) * std::cosh(double(theta)) <= 2.0 * (x + 1.0)) {
    ++theta;
  }
  for (; theta <= 64; ++theta) {
    const double th = theta;
    long long n = std::max<long long>(
        {static_cast<long long>(std::ceil(th / std::sqrt(eps_t))),
         static_cast<long long>(std::ceil(th)), 1});
    for (int attempt = 0; attempt < 48; ++attempt, n *= 2) {
      if (n > (1ll << 40)) break;
      const auto cf = zeno_closed_form({static_cast<int>(n), th / n});
      const double violation =
          std::max(std::abs(cf.x_violation), std::abs(cf.y_violation));
      if (cf.max_offdiag <= eps_t && violation > x) {
        return ThresholdFailureWitness{th, static_cast<int>(n), cf.max_offdiag,
                               violation};
      }
    }
  }
  throw Error("threshold_failure_witness: search failed");  // unreachable in practice
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ (index + 1)));
}

Vector random_complex_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v;
}

// GUE-style Hermitian matrix: real N(0,1) diagonal, off-diagonal entries
// with independent N(0, 1/2) real and imaginary parts.
Matrix random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double off = std::sqrt(0.5);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = normal(rng);
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = Complex(off * normal(rng), off * normal(rng));
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

// Rotates v by a global phase so that r† v is purely imaginary.
void make_overlap_imaginary(const Vector& r, Vector& v) {
  const Complex o = r.dot(v);
  if (std::abs(o) < 1e-300) return;
  v *= Complex(0.0, 1.0) * std::conj(o) / std::abs(o);
}

}  // namespace

PerturbReport perturbation_experiment(const PerturbParams& p) {
  if (p.rank_p <= 0 || p.rank_p >= p.dim) {
    throw Error("perturbation_experiment: need 0 < rank_p < dim");
  }
  if (p.samples < 1) throw Error("perturbation_experiment: samples >= 1");
  const int d = p.dim, m = p.rank_p;
  Matrix proj = Matrix::Zero(d, d);
  proj.topLeftCorner(m, m).setIdentity();
  const Matrix proj_bar = Matrix::Identity(d, d) - proj;

  const std::vector<double> scales = {p.epsilon, p.epsilon / 2.0,
                                      p.epsilon / 4.0};
  std::vector<double> offdiag_sum(scales.size(), 0.0);
  double sum1 = 0, sq1 = 0, sum2 = 0, sq2 = 0;
  int used = 0, excluded = 0;

  for (int sample = 0; sample < p.samples; ++sample) {
    auto rng = sample_rng(p.seed, sample);

    // Consistent base pair: overlaps within each projector range are made
    // purely imaginary, so the pair extended by {P, Pbar} is exactly
    // weakly consistent.
    Vector ua(d), ub(d);
    ua.head(m) = random_complex_vector(rng, m);
    ua.tail(d - m) = random_complex_vector(rng, d - m);
    ub.head(m) = random_complex_vector(rng, m);
    ub.tail(d - m) = random_complex_vector(rng, d - m);
    {
      Vector head = ub.head(m);
      Vector ra = ua.head(m);
      make_overlap_imaginary(ra, head);
      ub.head(m) = head;
      Vector tail = ub.tail(d - m);
      Vector rt = ua.tail(d - m);
      make_overlap_imaginary(rt, tail);
      ub.tail(d - m) = tail;
    }
    ua.normalize();
    ub.normalize();

    const Matrix a = random_hermitian(rng, d);
    const Vector leak_b = proj * a * proj_bar * ub;
    const Vector leak_a = proj * a * proj_bar * ua;
    const double na = (proj * ua).norm();
    if (leak_a.norm() <= 1e-12 || leak_b.norm() <= 1e-12 || na <= 1e-12) {
      ++excluded;
      continue;
    }
    const double t1 =
        std::abs((ua.adjoint() * proj * a * proj_bar * ub).value().imag()) /
        (na * leak_b.norm());
    const double t2 = std::abs((leak_a.dot(leak_b)).real()) /
                      (leak_a.norm() * leak_b.norm());
    sum1 += t1;
    sq1 += t1 * t1;
    sum2 += t2;
    sq2 += t2 * t2;
    ++used;

    // Perturbed decoherence matrix at each scale.
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    for (std::size_t si = 0; si < scales.size(); ++si) {
      const double eps = scales[si];
      Vector phase(d);
      for (int i = 0; i < d; ++i) {
        phase[i] = std::exp(Complex(0.0, eps * es.eigenvalues()[i]));
      }
      const Matrix u_mat =
          es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
      const Matrix proj2 = u_mat.adjoint() * proj * u_mat;
      const Matrix proj2_bar = Matrix::Identity(d, d) - proj2;
      std::vector<Vector> states;
      for (const Vector* base : {&ua, &ub}) {
        states.push_back(proj2 * proj * *base);
        states.push_back(proj2 * proj_bar * *base);
        states.push_back(proj2_bar * proj * *base);
        states.push_back(proj2_bar * proj_bar * *base);
      }
      double max_off = 0.0;
      for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
          max_off =
              std::max(max_off, std::abs(states[j].dot(states[i]).real()));
        }
      }
      offdiag_sum[si] += max_off;
    }
  }

  if (used == 0) throw Error("perturbation_experiment: every sample was null");
  PerturbReport report;
  report.excluded = excluded;
  report.mean_term1 = sum1 / used;
  report.mean_term2 = sum2 / used;
  report.se_term1 =
      std::sqrt(std::max(0.0, sq1 / used - report.mean_term1 * report.mean_term1) /
                used);
  report.se_term2 =
      std::sqrt(std::max(0.0, sq2 / used - report.mean_term2 * report.mean_term2) /
                used);
  for (std::size_t si = 0; si < scales.size(); ++si) {
    report.offdiag_by_scale.push_back(offdiag_sum[si] / used);
  }
  // Least-squares slope of log(max offdiag) against log(eps).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t si = 0; si < scales.size(); ++si) {
    const double lx = std::log(scales[si]);
    const double ly = std::log(report.offdiag_by_scale[si]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(scales.size());
  report.slope_exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return report;
}

HistorySet random_near_consistent_set(int d, int n, double noise,
                                      std::uint64_t seed) {
  if (d < 1 || n < 1) throw Error("random_near_consistent_set: bad sizes");
  if (n > 2 * d) {
    std::ostringstream os;
    os << "random_near_consistent_set: n = " << n
       << " exceeds the 2d = " << 2 * d
       << " limit on exactly consistent non-null histories";
    throw Error(os.str());
  }
  auto rng = sample_rng(seed, 0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.1, 1.0);

  RealMatrix g(2 * d, 2 * d);
  for (int i = 0; i < 2 * d; ++i) {
    for (int j = 0; j < 2 * d; ++j) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ() * RealMatrix::Identity(2 * d, n);

  std::vector<double> weights(n);
  double wsum = 0.0;
  for (int a = 0; a < n; ++a) {
    weights[a] = uniform(rng);
    wsum += weights[a];
  }

  std::vector<Vector> states(n);
  double total = 0.0;
  for (int a = 0; a < n; ++a) {
    Vector u(d);
    for (int i = 0; i < d; ++i) u[i] = Complex(q(i, a), q(d + i, a));
    u *= std::sqrt(weights[a] / wsum);
    for (int i = 0; i < d; ++i) {
      u[i] += noise * Complex(normal(rng), normal(rng));
    }
    total += u.squaredNorm();
    states[a] = std::move(u);
  }
  for (auto& u : states) u /= std::sqrt(total);

  // Raw rank-1 operators reproducing the states from a fixed basis vector.
  Vector psi = Vector::Zero(d);
  psi[0] = 1.0;
  std::vector<ClassOperator> ops;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    ops.push_back({states[a] * psi.adjoint()});
    labels.push_back("h" + std::to_string(a));
  }
  return HistorySet::from_pure(std::move(psi), std::move(ops),
                               std::move(labels), /*homogeneous=*/false);
}

}  // namespace cohist
