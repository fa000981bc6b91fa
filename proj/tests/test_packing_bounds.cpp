#include <doctest.h>

#include <cmath>

#include "cohist/packing_bounds.hpp"

using namespace cohist;

TEST_CASE("closed-form upper bound: sample values") {
  const auto re = upper_bound(Overlap::RePart, 3, 0.2);
  CHECK(re.valid);
  CHECK(re.raw == doctest::Approx(6 * 0.96 / 0.76).epsilon(1e-14));
  CHECK(re.floor_value == 7);

  const auto mod = upper_bound(Overlap::Modulus, 4, 0.3);
  CHECK(mod.valid);
  CHECK(mod.raw == doctest::Approx(4 * 0.91 / 0.64).epsilon(1e-14));
  CHECK(mod.floor_value == 5);

  CHECK(upper_bound(Overlap::RePart, 6, 0.0).floor_value == 12);
}

TEST_CASE("upper bound equals 2d below the crossover and 2d+1 at it") {
  for (int d = 3; d <= 50; ++d) {
    CHECK(upper_bound(Overlap::RePart, d, 0.9 / (2 * d)).floor_value == 2 * d);
    // At eps = 1/(2d) the raw value is the integer 2d + 1 exactly.
    CHECK(upper_bound(Overlap::RePart, d, 1.0 / (2 * d)).floor_value ==
          2 * d + 1);
  }
}

TEST_CASE("upper bound flags its validity region") {
  CHECK_FALSE(upper_bound(Overlap::RePart, 3, 0.5).valid);  // eps^2 > 1/(2d+2)
  CHECK_FALSE(upper_bound(Overlap::RePart, 2, 0.1).valid);  // d too small
  CHECK(upper_bound(Overlap::Modulus, 2, 0.1).valid);
}

TEST_CASE("covering lower bound: closed-form values") {
  CHECK(shannon_lower_bound(Overlap::RePart, 7, 0.0) == 1.0);
  CHECK(shannon_lower_bound(Overlap::RePart, 10, 0.5) ==
        doctest::Approx(std::pow(0.75, -9.5)).epsilon(1e-14));
  // Exponential growth in the dimension at fixed eps.
  const double ratio = shannon_lower_bound(Overlap::RePart, 20, 0.3) /
                       shannon_lower_bound(Overlap::RePart, 10, 0.3);
  CHECK(ratio == doctest::Approx(std::pow(1 - 0.09, -10)).epsilon(1e-12));
}

TEST_CASE("lower bound stays below the upper bound where both are valid") {
  for (int d = 3; d <= 30; ++d) {
    for (double eps = 0.01; eps * eps <= 1.0 / (2 * d + 2); eps += 0.01) {
      const auto ub = upper_bound(Overlap::RePart, d, eps);
      REQUIRE(ub.valid);
      CHECK(shannon_lower_bound(Overlap::RePart, d, eps) <=
            static_cast<double>(ub.floor_value) + 1e-9);
    }
  }
}

TEST_CASE("crossover of the trivial and covering lower bounds") {
  // eps* with (1 - eps*^2)^{1/2 - d} = 2d, against the stated expansion
  // sqrt(2 ln(2d) / (2d - 1)); the gap is O((ln d / d)^{3/2}).
  for (int d = 5; d <= 50; ++d) {
    const double exact = std::sqrt(1.0 - std::pow(2.0 * d, 2.0 / (1.0 - 2.0 * d)));
    const double approx = std::sqrt(2.0 * std::log(2.0 * d) / (2.0 * d - 1.0));
    const double budget =
        0.5 * std::pow(std::log(static_cast<double>(d)) / d, 1.5);
    CHECK(std::abs(exact - approx) <= budget);
  }
}

TEST_CASE("sphere and cap areas") {
  CHECK(sphere_area(3, 1.0) == doctest::Approx(4 * M_PI).epsilon(1e-14));
  CHECK(sphere_area(2, 2.0) == doctest::Approx(4 * M_PI).epsilon(1e-14));
  for (int d : {3, 5, 8}) {
    CHECK(cap_area(d, 1.0, M_PI / 2) ==
          doctest::Approx(0.5 * sphere_area(d, 1.0)).epsilon(1e-10));
  }
  for (double theta : {0.2, 0.7, 1.3}) {
    CHECK(cap_area(3, 1.0, theta) ==
          doctest::Approx(2 * M_PI * (1 - std::cos(theta))).epsilon(1e-10));
  }
}

TEST_CASE("complex cap area scales as sin^{2d-2}") {
  const int d = 4;
  const double a1 = complex_cap_area(d, 0.3);
  const double a2 = complex_cap_area(d, 0.6);
  CHECK(a2 / a1 == doctest::Approx(std::pow(std::sin(0.6) / std::sin(0.3),
                                            2 * d - 2))
                       .epsilon(1e-12));
}

TEST_CASE("polynomial recurrence: fixed values") {
  CHECK(jacobi_eval(1.7, -0.3, 0, 0.4) == 1.0);
  CHECK(jacobi_tilde(2.5, -0.5, 7, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  // Degree 1: (2a + 1 + (2a + 3) x) / (4 (a + 1)).
  CHECK(jacobi_tilde(1.0, -0.5, 1, 0.0) == doctest::Approx(3.0 / 8).epsilon(1e-14));
  // Degree 3 at alpha = 2, x = -0.5 against the explicit cubic.
  const double alpha = 2.0, x = -0.5;
  const double cubic =
      ((2 * alpha + 1) * (4 * alpha * alpha - 8 * alpha - 57) +
       3 * (2 * alpha + 7) * (4 * alpha * alpha - 21) * x +
       3 * (2 * alpha + 1) * (2 * alpha + 7) * (2 * alpha + 9) * x * x +
       (2 * alpha + 7) * (2 * alpha + 9) * (2 * alpha + 11) * x * x * x) /
      (64 * (alpha + 1) * (alpha + 2) * (alpha + 3));
  CHECK(jacobi_tilde(alpha, -0.5, 3, x) == doctest::Approx(cubic).epsilon(1e-12));
}

TEST_CASE("degree comparison holds at spot-check points") {
  // alpha = 1, x = -0.9 < -5/7: degree 2 exceeds degree 1.
  CHECK(jacobi_tilde(1.0, -0.5, 2, -0.9) > jacobi_tilde(1.0, -0.5, 1, -0.9));
  // beta = 0 family, alpha = 2, x = -0.8 < -0.6.
  CHECK(jacobi_tilde(2.0, 0.0, 3, -0.8) > jacobi_tilde(2.0, 0.0, 1, -0.8));
  // At the interval endpoint the degree-2 difference vanishes.
  const double alpha = 2.0;
  const double x0 = -(alpha + 1) / (alpha + 3);
  CHECK(jacobi_tilde(alpha, 0.0, 2, x0) - jacobi_tilde(alpha, 0.0, 1, x0) ==
        doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("small interval sweeps report no violations") {
  const auto r3 = verify_degree_dominance_half({1.0, 2.5, 4.0}, 12, 300);
  CHECK(r3.ok());
  CHECK(r3.points_checked > 0);
  const auto r4 = verify_degree_dominance_zero({2.0, 3.0, 5.0}, 12, 300);
  CHECK(r4.ok());
}

TEST_CASE("weighted polynomial has decreasing maxima") {
  for (double alpha : {1.0, 2.0}) {
    for (int n : {1, 3, 6}) {
      const auto r = verify_sonine_polya(alpha, n, 4000);
      CHECK(r.maxima_decreasing);
      CHECK(r.bounded_by_w0);
      CHECK(std::abs(r.w_at_one) < 1e-12);
    }
  }
}

TEST_CASE("degree-1 program candidate is feasible and tight") {
  const auto re = lp_optimality_check(Overlap::RePart, 3, 0.2, 30, 500);
  CHECK(re.feasible);
  CHECK(re.objective == doctest::Approx(6 * 0.96 / 0.76).epsilon(1e-12));
  CHECK(re.closed_form == doctest::Approx(re.objective).epsilon(1e-12));
  CHECK(re.degree_one_optimal);

  const auto mod = lp_optimality_check(Overlap::Modulus, 4, 0.3, 30, 500);
  CHECK(mod.feasible);
  CHECK(mod.closed_form == doctest::Approx(4 * 0.91 / 0.64).epsilon(1e-12));
  CHECK(mod.objective == doctest::Approx(mod.closed_form).epsilon(1e-12));

  // eps = 0 degenerates to s = -1 with objective 2d.
  const auto zero = lp_optimality_check(Overlap::RePart, 5, 0.0, 30, 500);
  CHECK(zero.objective == doctest::Approx(10.0).epsilon(1e-12));
}
