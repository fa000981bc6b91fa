#ifndef COHIST_PACKING_BOUNDS_HPP
#define COHIST_PACKING_BOUNDS_HPP

#include <string>
#include <vector>

#include "cohist/jacobi.hpp"
#include "cohist/types.hpp"

namespace cohist {

/// Which overlap the packing constraint bounds on the complex sphere:
/// |Re(u† v)| (the DHC form) or |u† v| (the medium DHC form).
enum class Overlap { RePart, Modulus };

struct UpperBound {
  double raw = 0.0;           // the closed-form value before flooring
  long long floor_value = 0;  // the integer bound
  bool valid = false;         // inside the proven validity region
};

/// Closed-form Delsarte-type bound on the number of unit vectors with
/// pairwise overlap at most eps:
///   RePart:  floor(2d (1 - eps^2) / (1 - 2d eps^2)), eps^2 <= 1/(2d+2), d >= 3
///   Modulus: floor( d (1 - eps^2) / (1 -  d eps^2)), eps^2 <= 1/(d+1),  d >= 2
/// Outside the region the value is still reported with valid = false.
UpperBound upper_bound(Overlap overlap, int d, double eps);

/// Shannon-style cap-covering lower bound:
///   RePart: (1 - eps^2)^{1/2 - d};  Modulus: (1 - eps^2)^{1 - d}.
double shannon_lower_bound(Overlap overlap, int d, double eps);

/// Surface area of the sphere of radius r in Euclidean d-space.
double sphere_area(int d, double r);

/// Area of a d-dimensional spherical cap of half angle theta, by adaptive
/// quadrature of the sin^{d-2} integral (absolute tolerance 1e-10).
double cap_area(int d, double r, double theta);

/// Closed-form area of the cap {u : |u_1| >= cos theta} on the unit sphere
/// in C^d, d >= 3.
double complex_cap_area(int d, double theta);

struct SweepViolation {
  double alpha = 0.0;
  int n = 0;
  double x = 0.0;
  double margin = 0.0;
};

struct SweepReport {
  long long points_checked = 0;
  std::vector<SweepViolation> inequality_violations;
  std::vector<SweepViolation> bound_violations;
  bool ok() const {
    return inequality_violations.empty() && bound_violations.empty();
  }
};

/// Checks tilde{P}_n^{(a,-1/2)}(x) > tilde{P}_1^{(a,-1/2)}(x) on the open
/// interval (-1, -(2a+3)/(2a+5)) for n in 2..n_max, plus the envelope
/// ((1-x)/2)^a |P_n(x)| <= |P_n(-1)| on the same grid.
SweepReport verify_degree_dominance_half(const std::vector<double>& alpha_grid, int n_max,
                            int x_resolution);

/// The beta = 0 analogue on (-1, -(a+1)/(a+3)) for a >= 2, with the
/// Szego envelope ((1-x)/2)^{a/2+1/4} |P_n^{(a,0)}(x)| <= 1.
SweepReport verify_degree_dominance_zero(const std::vector<double>& alpha_grid, int n_max,
                            int x_resolution);

struct SoninePolyaReport {
  std::vector<double> maxima;     // local maxima of |w|, left to right
  bool maxima_decreasing = false;
  bool bounded_by_w0 = false;     // |w(s)| <= |w(0)| everywhere
  double w_at_one = 0.0;
};

/// Applies the decreasing-maxima theorem to
/// w(s) = (1 - s^2)^alpha P_n^{(alpha,-1/2)}(2 s^2 - 1) on [0, 1].
SoninePolyaReport verify_sonine_polya(double alpha, int n, int s_resolution);

struct LpCheckReport {
  bool feasible = false;        // f(t) <= -1 held on the whole t-grid
  double worst_t = 0.0;         // grid point with the weakest margin
  double worst_value = 0.0;
  double objective = 0.0;       // 1 + f_1 for the degree-1 candidate
  double closed_form = 0.0;     // the matching closed-form bound
  bool degree_one_optimal = false;  // no single higher degree improves it
};

/// Verifies that the degree-1 polynomial f_1 = -1/tilde{P}_1(s),
/// s = 2 eps^2 - 1, is feasible for the Delsarte linear program and that
/// its objective reproduces the closed-form bound.
LpCheckReport lp_optimality_check(Overlap overlap, int d, double eps,
                                  int degree, int grid_points);

}  // namespace cohist

#endif  // COHIST_PACKING_BOUNDS_HPP
