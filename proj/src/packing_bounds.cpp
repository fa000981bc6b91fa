#include "cohist/packing_bounds.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace cohist {

namespace {

// Absorbs double rounding at exact-integer points of the closed forms
// (the bound equals 2d+1 exactly at eps = 1/(2d)).
long long floor_with_guard(double v) {
  return static_cast<long long>(std::floor(v + 1e-9));
}

}  // namespace

UpperBound upper_bound(Overlap overlap, int d, double eps) {
  if (eps < 0.0 || eps >= 1.0) {
    throw Error("upper_bound: epsilon must lie in [0, 1)");
  }
  const double e2 = eps * eps;
  UpperBound out;
  if (overlap == Overlap::RePart) {
    const double den = 1.0 - 2.0 * d * e2;
    out.raw = den > 0.0 ? 2.0 * d * (1.0 - e2) / den
                        : std::numeric_limits<double>::infinity();
    out.valid = d >= 3 && e2 <= 1.0 / (2.0 * d + 2.0);
  } else {
    const double den = 1.0 - d * e2;
    out.raw = den > 0.0 ? d * (1.0 - e2) / den
                        : std::numeric_limits<double>::infinity();
    out.valid = d >= 2 && e2 <= 1.0 / (d + 1.0);
  }
  out.floor_value = std::isfinite(out.raw) ? floor_with_guard(out.raw) : -1;
  return out;
}

double shannon_lower_bound(Overlap overlap, int d, double eps) {
  if (eps < 0.0 || eps >= 1.0) {
    throw Error("shannon_lower_bound: epsilon must lie in [0, 1)");
  }
  const double base = 1.0 - eps * eps;
  const double expo = overlap == Overlap::RePart ? 0.5 - d : 1.0 - d;
  return std::pow(base, expo);
}

double sphere_area(int d, double r) {
  if (d < 1 || r <= 0.0) throw Error("sphere_area: need d >= 1, r > 0");
  return d * std::pow(r, d - 1) * std::pow(M_PI, 0.5 * d) /
         std::tgamma(0.5 * d + 1.0);
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double s,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double sl = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double sr = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(sl + sr - s) <= 15.0 * tol) {
    return sl + sr + (sl + sr - s) / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, sl, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, sr, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double s = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, s, tol, 40);
}

}  // namespace

double cap_area(int d, double r, double theta) {
  if (d < 2 || r <= 0.0) throw Error("cap_area: need d >= 2, r > 0");
  if (theta <= 0.0 || theta > M_PI / 2.0 + 1e-12) {
    throw Error("cap_area: theta must lie in (0, pi/2]");
  }
  const double band = (d - 1) * std::pow(M_PI, 0.5 * (d - 1)) /
                      std::tgamma(0.5 * (d + 1));
  const double integral = integrate(
      [d](double phi) { return std::pow(std::sin(phi), d - 2); }, 0.0, theta,
      1e-10);
  return band * std::pow(r, d - 1) * integral;
}

double complex_cap_area(int d, double theta) {
  if (d < 3) throw Error("complex_cap_area: closed form needs d >= 3");
  return M_PI * sphere_area(2 * d - 2, 1.0) *
         std::pow(std::sin(theta), 2 * d - 2) / (d - 2);
}

namespace {

SweepReport verify_dominance_impl(const std::vector<double>& alpha_grid,
                                double beta, int n_max, int x_resolution,
                                double alpha_min,
                                const std::function<double(double)>& x_hi_of,
                                const std::function<double(double, int, double)>&
                                    envelope_margin) {
  SweepReport report;
  constexpr double kEdge = 1e-6;
  for (double alpha : alpha_grid) {
    if (alpha < alpha_min) {
      throw Error("dominance sweep: alpha below the proven range");
    }
    const double x_lo = -1.0 + kEdge;
    const double x_hi = x_hi_of(alpha) - kEdge;
    if (x_hi <= x_lo) continue;
    for (int i = 0; i < x_resolution; ++i) {
      const double x =
          x_lo + (x_hi - x_lo) * i / std::max(1, x_resolution - 1);
      const double t1 = jacobi_tilde(alpha, beta, 1, x);
      for (int n = 2; n <= n_max; ++n) {
        ++report.points_checked;
        const double tn = jacobi_tilde(alpha, beta, n, x);
        if (!(tn > t1)) {
          report.inequality_violations.push_back({alpha, n, x, tn - t1});
        }
        const double margin = envelope_margin(alpha, n, x);
        if (margin > 1e-12) {
          report.bound_violations.push_back({alpha, n, x, margin});
        }
      }
    }
  }
  return report;
}

}  // namespace

SweepReport verify_degree_dominance_half(const std::vector<double>& alpha_grid, int n_max,
                            int x_resolution) {
  return verify_dominance_impl(
      alpha_grid, -0.5, n_max, x_resolution, 1.0,
      [](double a) { return -(2 * a + 3) / (2 * a + 5); },
      [](double a, int n, double x) {
        const double lhs =
            std::pow(0.5 * (1.0 - x), a) * std::abs(jacobi_eval(a, -0.5, n, x));
        // |P_n^{(a,-1/2)}(-1)| = (1/2)_n / n!
        double rhs = pochhammer(0.5, n);
        for (int i = 2; i <= n; ++i) rhs /= i;
        return (lhs - rhs) / std::max(rhs, 1e-300);
      });
}

SweepReport verify_degree_dominance_zero(const std::vector<double>& alpha_grid, int n_max,
                            int x_resolution) {
  return verify_dominance_impl(
      alpha_grid, 0.0, n_max, x_resolution, 2.0,
      [](double a) { return -(a + 1) / (a + 3); },
      [](double a, int n, double x) {
        return std::pow(0.5 * (1.0 - x), 0.5 * a + 0.25) *
                   std::abs(jacobi_eval(a, 0.0, n, x)) -
               1.0;
      });
}

SoninePolyaReport verify_sonine_polya(double alpha, int n, int s_resolution) {
  if (alpha < 1.0 || n < 1) {
    throw Error("verify_sonine_polya: needs alpha >= 1, n >= 1");
  }
  const int m = std::max(s_resolution, 16);
  std::vector<double> w(m);
  for (int i = 0; i < m; ++i) {
    const double s = static_cast<double>(i) / (m - 1);
    w[i] = std::pow(1.0 - s * s, alpha) *
           jacobi_eval(alpha, -0.5, n, 2.0 * s * s - 1.0);
  }
  SoninePolyaReport report;
  report.w_at_one = w[m - 1];
  // s = 0 is a local maximum of |w| by construction.
  if (std::abs(w[0]) >= std::abs(w[1])) report.maxima.push_back(std::abs(w[0]));
  for (int i = 1; i + 1 < m; ++i) {
    if (std::abs(w[i]) > std::abs(w[i - 1]) &&
        std::abs(w[i]) >= std::abs(w[i + 1])) {
      report.maxima.push_back(std::abs(w[i]));
    }
  }
  report.maxima_decreasing = true;
  for (std::size_t i = 1; i < report.maxima.size(); ++i) {
    if (report.maxima[i] > report.maxima[i - 1] * (1.0 + 1e-12)) {
      report.maxima_decreasing = false;
    }
  }
  report.bounded_by_w0 = true;
  const double cap = std::abs(w[0]) * (1.0 + 1e-12);
  for (double wi : w) {
    if (std::abs(wi) > cap) report.bounded_by_w0 = false;
  }
  return report;
}

LpCheckReport lp_optimality_check(Overlap overlap, int d, double eps,
                                  int degree, int grid_points) {
  if (eps < 0.0 || eps >= 1.0) {
    throw Error("lp_optimality_check: epsilon must lie in [0, 1)");
  }
  const double alpha = overlap == Overlap::RePart ? d - 1.5 : d - 2.0;
  const double beta = overlap == Overlap::RePart ? -0.5 : 0.0;
  const double s = 2.0 * eps * eps - 1.0;
  const double t1s = jacobi_tilde(alpha, beta, 1, s);
  if (t1s >= 0.0) {
    throw Error("lp_optimality_check: tilde P_1(s) >= 0, candidate undefined");
  }
  const double f1 = -1.0 / t1s;

  LpCheckReport report;
  report.objective = 1.0 + f1;
  report.closed_form = upper_bound(overlap, d, eps).raw;

  report.feasible = true;
  report.worst_value = -std::numeric_limits<double>::infinity();
  const int m = std::max(grid_points, 2);
  for (int i = 0; i < m; ++i) {
    const double t = -1.0 + (s + 1.0) * i / (m - 1);
    const double f = f1 * jacobi_tilde(alpha, beta, 1, t);
    if (f > report.worst_value) {
      report.worst_value = f;
      report.worst_t = t;
    }
  }
  if (report.worst_value > -1.0 + 1e-9) report.feasible = false;

  report.degree_one_optimal = true;
  for (int i = 2; i <= degree; ++i) {
    const double tis = jacobi_tilde(alpha, beta, i, s);
    // A single higher-degree candidate only improves the objective when
    // tilde P_i(s) is more negative than tilde P_1(s).
    if (tis < t1s - 1e-12) report.degree_one_optimal = false;
  }
  return report;
}

}  // namespace cohist
