#include "cohist/histories.hpp"

#include <set>
#include <sstream>

namespace cohist {

bool HistorySet::complete(double tol) const {
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& op : ops) sum += op.matrix;
  return max_abs((sum - Matrix::Identity(dim, dim)).eval()) <= tol;
}

namespace {

void check_ops(int dim, const std::vector<ClassOperator>& ops) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].matrix.rows() != dim || ops[i].matrix.cols() != dim) {
      std::ostringstream os;
      os << "class operator " << i << " is " << ops[i].matrix.rows() << "x"
         << ops[i].matrix.cols() << ", expected " << dim << "x" << dim;
      throw Error(os.str());
    }
  }
}

}  // namespace

HistorySet HistorySet::from_pure(Vector psi, std::vector<ClassOperator> ops,
                                 std::vector<std::string> labels,
                                 bool homogeneous) {
  const int d = static_cast<int>(psi.size());
  check_ops(d, ops);
  HistorySet s;
  s.dim = d;
  s.initial = DensityMatrix::pure_state(psi);
  s.pure_state = std::move(psi);
  s.ops = std::move(ops);
  s.labels = std::move(labels);
  s.homogeneous = homogeneous;
  return s;
}

HistorySet HistorySet::from_density(DensityMatrix rho,
                                    std::vector<ClassOperator> ops,
                                    std::vector<std::string> labels,
                                    bool homogeneous) {
  check_ops(rho.dim(), ops);
  HistorySet s;
  s.dim = rho.dim();
  s.initial = std::move(rho);
  s.ops = std::move(ops);
  s.labels = std::move(labels);
  s.homogeneous = homogeneous;
  return s;
}

std::vector<ClassOperator> build_chain_operators(
    const std::vector<std::vector<Projector>>& decomps) {
  if (decomps.empty()) throw Error("no decompositions given");
  const auto d = decomps.front().front().matrix.rows();
  for (const auto& dec : decomps) {
    auto check = validate_projector_decomposition(dec);
    if (!check.ok) throw Error("invalid decomposition: " + check.message);
    if (dec.front().matrix.rows() != d) {
      throw Error("decompositions do not share a dimension");
    }
  }
  // Cartesian product; choice index per step, earliest step fastest.
  std::vector<ClassOperator> out;
  std::size_t count = 1;
  for (const auto& dec : decomps) count *= dec.size();
  out.reserve(count);
  std::vector<std::size_t> idx(decomps.size(), 0);
  for (std::size_t c = 0; c < count; ++c) {
    Matrix m = Matrix::Identity(d, d);
    // Latest time leftmost: multiply steps in order, newest on the left.
    for (std::size_t k = 0; k < decomps.size(); ++k) {
      m = decomps[k][idx[k]].matrix * m;
    }
    out.push_back({std::move(m)});
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (++idx[k] < decomps[k].size()) break;
      idx[k] = 0;
    }
  }
  return out;
}

std::vector<std::string> chain_labels(
    const std::vector<std::vector<Projector>>& decomps) {
  std::size_t count = 1;
  for (const auto& dec : decomps) count *= dec.size();
  std::vector<std::string> out;
  out.reserve(count);
  std::vector<std::size_t> idx(decomps.size(), 0);
  for (std::size_t c = 0; c < count; ++c) {
    std::string label;
    for (std::size_t k = decomps.size(); k-- > 0;) {
      label += std::to_string(idx[k]);
      if (k != 0) label += '.';
    }
    out.push_back(std::move(label));
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (++idx[k] < decomps[k].size()) break;
      idx[k] = 0;
    }
  }
  return out;
}

std::vector<Vector> history_states(const HistorySet& set) {
  std::vector<Vector> states;
  states.reserve(set.ops.size());
  if (set.pure_state) {
    for (const auto& op : set.ops) states.push_back(op.matrix * *set.pure_state);
    return states;
  }
  const Purification pur = purify(set.initial);
  for (const auto& op : set.ops) {
    states.push_back(extend_operator(op.matrix, pur.rank) * pur.state);
  }
  return states;
}

DecoherenceMatrix decoherence_matrix(const HistorySet& set) {
  const auto states = history_states(set);
  const int n = static_cast<int>(states.size());
  Matrix d(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b <= a; ++b) {
      d(a, b) = states[b].dot(states[a]);  // u_b† u_a
      d(b, a) = std::conj(d(a, b));
    }
  }
  return DecoherenceMatrix{std::move(d), set.homogeneous};
}

DecoherenceMatrix decoherence_matrix_trace(const HistorySet& set) {
  const int n = set.size();
  Matrix d(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      d(a, b) =
          (set.ops[a].matrix * set.initial.matrix * set.ops[b].matrix.adjoint())
              .trace();
    }
  }
  return DecoherenceMatrix{std::move(d), set.homogeneous};
}

DecoherenceMatrix coarse_grain(const DecoherenceMatrix& d,
                               const CoarseGraining& g) {
  std::set<int> seen;
  for (const auto& cell : g.cells) {
    for (int i : cell) {
      if (i < 0 || i >= d.size()) {
        throw Error("coarse-graining index " + std::to_string(i) +
                    " out of range");
      }
      if (!seen.insert(i).second) {
        throw Error("coarse-graining cells overlap at index " +
                    std::to_string(i));
      }
    }
  }
  const int m = static_cast<int>(g.cells.size());
  Matrix out = Matrix::Zero(m, m);
  for (int b = 0; b < m; ++b) {
    for (int c = 0; c < m; ++c) {
      Complex s = 0.0;
      for (int a : g.cells[b]) {
        for (int bb : g.cells[c]) s += d.entries(a, bb);
      }
      out(b, c) = s;
    }
  }
  return DecoherenceMatrix{std::move(out), false};
}

DensityMatrix current_density_matrix(const HistorySet& set,
                                     const ClassOperator& past,
                                     double null_tol) {
  Matrix branch = past.matrix * set.initial.matrix * past.matrix.adjoint();
  const double weight = branch.trace().real();
  if (weight <= null_tol) {
    std::ostringstream os;
    os << "null branch: Tr(C rho C†) = " << weight;
    throw Error(os.str());
  }
  return DensityMatrix::make(branch / weight);
}

std::vector<int> null_histories(const DecoherenceMatrix& d, double null_tol) {
  std::vector<int> out;
  for (int a = 0; a < d.size(); ++a) {
    if (d.probability(a) <= null_tol) out.push_back(a);
  }
  return out;
}

}  // namespace cohist
