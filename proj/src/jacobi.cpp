#include "cohist/jacobi.hpp"

namespace cohist {

double jacobi_eval(double alpha, double beta, int n, double x) {
  if (n < 0) throw Error("jacobi_eval: degree must be >= 0");
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
  for (int m = 2; m <= n; ++m) {
    const double a = alpha, b = beta;
    const double c1 = 2.0 * m * (m + a + b) * (2.0 * m + a + b - 2.0);
    const double c2 = (2.0 * m + a + b - 1.0) *
                      ((2.0 * m + a + b) * (2.0 * m + a + b - 2.0) * x +
                       a * a - b * b);
    const double c3 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + a + b);
    const double p_next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = p_next;
  }
  return p;
}

double pochhammer(double a, int n) {
  double out = 1.0;
  for (int i = 0; i < n; ++i) out *= a + i;
  return out;
}

double jacobi_at_one(double alpha, int n) {
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return pochhammer(alpha + 1.0, n) / fact;
}

double jacobi_tilde(double alpha, double beta, int n, double x) {
  return jacobi_eval(alpha, beta, n, x) / jacobi_at_one(alpha, n);
}

}  // namespace cohist
