#include "cohist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cohist {

Projector Projector::make(Matrix m, double tol) {
  if (m.rows() != m.cols()) {
    throw Error("projector must be square, got " + std::to_string(m.rows()) +
                "x" + std::to_string(m.cols()));
  }
  if (!is_hermitian(m, tol)) {
    throw Error("projector is not Hermitian within tolerance");
  }
  const double idem = max_abs((m * m - m).eval());
  if (idem > tol) {
    std::ostringstream os;
    os << "projector is not idempotent: max|P^2 - P| = " << idem;
    throw Error(os.str());
  }
  const double tr = m.trace().real();
  const int rank = static_cast<int>(std::lround(tr));
  if (std::abs(tr - rank) > tol || rank < 0) {
    std::ostringstream os;
    os << "projector trace " << tr << " is not a nonnegative integer";
    throw Error(os.str());
  }
  return Projector{std::move(m), rank};
}

DecompositionCheck validate_projector_decomposition(
    std::span<const Projector> ps, double tol) {
  if (ps.empty()) return {false, "empty decomposition", -1, -1};
  const auto d = ps.front().matrix.rows();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].matrix.rows() != d) {
      std::ostringstream os;
      os << "dimension mismatch: projector 0 is " << d << "x" << d
         << " but projector " << i << " is " << ps[i].matrix.rows() << "x"
         << ps[i].matrix.cols();
      throw Error(os.str());
    }
  }
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& p : ps) sum += p.matrix;
  if (max_abs((sum - Matrix::Identity(d, d)).eval()) > tol) {
    return {false, "sum of projectors differs from identity", -1, -1};
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (max_abs((ps[i].matrix * ps[j].matrix).eval()) > tol) {
        std::ostringstream os;
        os << "projectors " << i << " and " << j << " are not orthogonal";
        return {false, os.str(), static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  return {};
}

DensityMatrix DensityMatrix::make(Matrix m, double tol) {
  if (m.rows() != m.cols()) throw Error("density matrix must be square");
  if (!is_hermitian(m, tol)) {
    throw Error("density matrix is not Hermitian within tolerance");
  }
  if (std::abs(m.trace().real() - 1.0) > tol) {
    std::ostringstream os;
    os << "density matrix trace " << m.trace().real() << " differs from 1";
    throw Error(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -tol) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << min_ev;
    throw Error(os.str());
  }
  const bool pure = max_abs((m * m - m).eval()) <= 10 * tol;
  return DensityMatrix{std::move(m), pure};
}

DensityMatrix DensityMatrix::pure_state(const Vector& psi) {
  const double n2 = psi.squaredNorm();
  if (n2 <= 0.0) throw Error("pure state has zero norm");
  Matrix m = (psi * psi.adjoint()) / n2;
  return DensityMatrix{std::move(m), true};
}

namespace {

// Lexicographic comparison of eigenvectors, (Re, Im) pairs entrywise.
bool vector_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

// Fixes the overall phase so the first nonzero entry is real positive.
void fix_phase(Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-14) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      return;
    }
  }
}

}  // namespace

Purification purify(const DensityMatrix& rho, double rank_tol) {
  const int d = rho.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix);
  if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
  const double max_ev = es.eigenvalues().maxCoeff();
  if (es.eigenvalues().minCoeff() < -kProjTol) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue "
       << es.eigenvalues().minCoeff();
    throw Error(os.str());
  }

  struct Mode {
    double p;
    Vector v;
  };
  std::vector<Mode> modes;
  for (int i = 0; i < d; ++i) {
    const double p = es.eigenvalues()[i];
    if (p > rank_tol * max_ev) {
      Vector v = es.eigenvectors().col(i);
      fix_phase(v);
      modes.push_back({p, std::move(v)});
    }
  }
  std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
    if (a.p != b.p) return a.p > b.p;
    return vector_less(a.v, b.v);
  });

  const int r = static_cast<int>(modes.size());
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(d) * r);
  for (int i = 0; i < r; ++i) {
    const double amp = std::sqrt(modes[i].p);
    for (int j = 0; j < d; ++j) psi[j * r + i] = amp * modes[i].v[j];
  }
  return Purification{std::move(psi), r, d};
}

Matrix partial_trace_second(const Vector& psi, int d, int r) {
  if (psi.size() != static_cast<Eigen::Index>(d) * r) {
    throw Error("partial trace: state size does not match d*r");
  }
  Matrix rho = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < r; ++k) s += psi[i * r + k] * std::conj(psi[j * r + k]);
      rho(i, j) = s;
    }
  }
  return rho;
}

Matrix extend_operator(const Matrix& a, int r) {
  const auto d = a.rows();
  Matrix out = Matrix::Zero(d * r, a.cols() * r);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * r, j * r, r, r) = a(i, j) * Matrix::Identity(r, r);
    }
  }
  return out;
}

}  // namespace cohist
