#include "cohist/io.hpp"

#include <cstdio>
#include <fstream>

namespace cohist {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(field + ": expected a [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw Error(field + ": expected a nested array of [re, im] pairs");
  }
  const auto rows = j.size();
  const auto cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw Error(field + ": row " + std::to_string(i) +
                  " has inconsistent length");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m(i, k) = complex_from_json(j[i][k], field + "[" + std::to_string(i) +
                                               "][" + std::to_string(k) + "]");
    }
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

Vector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw Error(field + ": expected an array of [re, im] pairs");
  }
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[i] = complex_from_json(j[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

json history_set_to_json(const HistorySet& set) {
  json out;
  out["dimension"] = set.dim;
  if (set.pure_state) {
    out["initial_state"] = {{"type", "pure"},
                            {"data", vector_to_json(*set.pure_state)}};
  } else {
    out["initial_state"] = {{"type", "mixed"},
                            {"data", matrix_to_json(set.initial.matrix)}};
  }
  json ops = json::array();
  for (const auto& op : set.ops) ops.push_back(matrix_to_json(op.matrix));
  out["histories"] = {{"type", "operators"}, {"ops", std::move(ops)}};
  out["labels"] = set.labels;
  out["homogeneous"] = set.homogeneous;
  return out;
}

HistorySet history_set_from_json(const json& j) {
  if (!j.contains("dimension") || !j["dimension"].is_number_integer()) {
    throw Error("dimension: missing or not an integer");
  }
  const int dim = j["dimension"].get<int>();
  if (dim < 1) throw Error("dimension: must be positive");
  if (!j.contains("initial_state") || !j.contains("histories")) {
    throw Error("missing initial_state or histories");
  }
  const auto& init = j["initial_state"];
  const auto& hist = j["histories"];
  const std::string init_type = init.value("type", "");
  const std::string hist_type = hist.value("type", "");

  std::vector<ClassOperator> ops;
  bool chain_built = false;
  if (hist_type == "operators") {
    if (!hist.contains("ops")) throw Error("histories.ops: missing");
    for (std::size_t i = 0; i < hist["ops"].size(); ++i) {
      Matrix m = matrix_from_json(hist["ops"][i],
                                  "histories.ops[" + std::to_string(i) + "]");
      if (m.rows() != dim || m.cols() != dim) {
        throw Error("histories.ops[" + std::to_string(i) +
                    "]: expected a " + std::to_string(dim) + "x" +
                    std::to_string(dim) + " matrix");
      }
      ops.push_back({std::move(m)});
    }
  } else if (hist_type == "chain") {
    if (!hist.contains("decompositions")) {
      throw Error("histories.decompositions: missing");
    }
    std::vector<std::vector<Projector>> decomps;
    for (std::size_t k = 0; k < hist["decompositions"].size(); ++k) {
      std::vector<Projector> dec;
      for (std::size_t i = 0; i < hist["decompositions"][k].size(); ++i) {
        const std::string field = "histories.decompositions[" +
                                  std::to_string(k) + "][" +
                                  std::to_string(i) + "]";
        Matrix m = matrix_from_json(hist["decompositions"][k][i], field);
        if (m.rows() != dim || m.cols() != dim) {
          throw Error(field + ": expected a " + std::to_string(dim) + "x" +
                      std::to_string(dim) + " matrix");
        }
        dec.push_back(Projector::make(std::move(m)));
      }
      decomps.push_back(std::move(dec));
    }
    ops = build_chain_operators(decomps);
    chain_built = true;
  } else {
    throw Error("histories.type: expected \"operators\" or \"chain\"");
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j["labels"].get<std::vector<std::string>>();
    if (!labels.empty() && labels.size() != ops.size()) {
      throw Error("labels: count does not match history count");
    }
  }
  // Chain-built sets are homogeneous by construction; raw sets default to
  // not, unless the file says otherwise.
  const bool homogeneous = j.value("homogeneous", chain_built);

  if (init_type == "pure") {
    Vector psi = vector_from_json(init["data"], "initial_state.data");
    if (psi.size() != dim) {
      throw Error("initial_state.data: expected " + std::to_string(dim) +
                  " entries");
    }
    return HistorySet::from_pure(std::move(psi), std::move(ops),
                                 std::move(labels), homogeneous);
  }
  if (init_type == "mixed") {
    Matrix rho = matrix_from_json(init["data"], "initial_state.data");
    if (rho.rows() != dim || rho.cols() != dim) {
      throw Error("initial_state.data: expected a " + std::to_string(dim) +
                  "x" + std::to_string(dim) + " matrix");
    }
    return HistorySet::from_density(DensityMatrix::make(std::move(rho)),
                                    std::move(ops), std::move(labels),
                                    homogeneous);
  }
  throw Error("initial_state.type: expected \"pure\" or \"mixed\"");
}

HistorySet read_history_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
  return history_set_from_json(j);
}

void write_history_set(const std::filesystem::path& path,
                       const HistorySet& set) {
  atomic_write(path, history_set_to_json(set).dump(2) + "\n");
}

json criterion_to_json(const CriterionResult& r, double epsilon) {
  return json{{"criterion", r.name},
              {"pass", r.pass},
              {"achieved_epsilon", r.achieved},
              {"worst_pair", {r.worst_pair.first, r.worst_pair.second}},
              {"params", {{"epsilon", epsilon}}}};
}

json mpv_to_json(const MpvResult& r) {
  return json{{"value", r.value},
              {"maximizer_indices", r.maximizer},
              {"method", r.method}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write(const std::filesystem::path& path,
                  const std::string& content) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cohist
