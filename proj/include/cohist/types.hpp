#ifndef COHIST_TYPES_HPP
#define COHIST_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace cohist {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Entrywise absolute tolerance for projector and density-matrix validation.
inline constexpr double kProjTol = 1e-10;
// Relative eigenvalue cutoff separating zero modes in purification.
inline constexpr double kRankTol = 1e-12;
// Tolerance for completeness (sum of class operators vs identity).
inline constexpr double kCompleteTol = 1e-8;
// Probability below which a history counts as null.
inline constexpr double kNullTol = 1e-12;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.derived().cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.derived() - m.derived().adjoint().eval()) <= tol;
}

}  // namespace cohist

#endif  // COHIST_TYPES_HPP
