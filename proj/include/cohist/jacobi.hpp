#ifndef COHIST_JACOBI_HPP
#define COHIST_JACOBI_HPP

#include "cohist/types.hpp"

namespace cohist {

/// P_n^{(alpha,beta)}(x) by the three-term recurrence in degree.
double jacobi_eval(double alpha, double beta, int n, double x);

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1).
double pochhammer(double a, int n);

/// P_n^{(alpha,beta)}(1) = (alpha+1)_n / n!.
double jacobi_at_one(double alpha, int n);

/// Normalised polynomial P_n(x) / P_n(1).
double jacobi_tilde(double alpha, double beta, int n, double x);

}  // namespace cohist

#endif  // COHIST_JACOBI_HPP
