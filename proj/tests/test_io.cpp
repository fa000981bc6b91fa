#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "cohist/generators.hpp"
#include "cohist/io.hpp"
#include "helpers.hpp"

using namespace cohist;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("cohist-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("matrix and vector serialization round-trips") {
  std::mt19937_64 rng(3);
  const Matrix m = testing::random_matrix(rng, 3, 4);
  const Matrix m2 = matrix_from_json(matrix_to_json(m), "m");
  CHECK(max_abs(Matrix(m - m2)) == 0.0);

  const Vector v = testing::random_vector(rng, 5);
  const Vector v2 = vector_from_json(vector_to_json(v), "v");
  CHECK(max_abs(Matrix(v - v2)) == 0.0);
}

TEST_CASE("malformed entries are rejected with the field name") {
  const json bad = json::array({json::array({1.0, 2.0, 3.0})});
  CHECK_THROWS_WITH_AS(vector_from_json(bad, "state"),
                       doctest::Contains("state"), Error);
  const json ragged = json::parse("[[[1,0],[0,0]],[[1,0]]]");
  CHECK_THROWS_AS(matrix_from_json(ragged, "rho"), Error);
}

TEST_CASE("history sets survive a file round-trip") {
  TempDir tmp;
  const auto original = large_violation_set({3, 0.1}).set;
  const auto file = tmp.path / "set.json";
  write_history_set(file, original);
  const auto loaded = read_history_set(file);

  CHECK(loaded.dim == original.dim);
  CHECK(loaded.homogeneous == original.homogeneous);
  CHECK(loaded.labels == original.labels);
  REQUIRE(loaded.size() == original.size());
  for (int a = 0; a < original.size(); ++a) {
    CHECK(max_abs(Matrix(loaded.ops[a].matrix - original.ops[a].matrix)) <
          1e-14);
  }
  const auto d0 = decoherence_matrix(original);
  const auto d1 = decoherence_matrix(loaded);
  CHECK(max_abs(Matrix(d0.entries - d1.entries)) < 1e-14);
}

TEST_CASE("chain files build their operator products on load") {
  TempDir tmp;
  const double eps = 0.3;
  json file;
  file["dimension"] = 2;
  file["initial_state"] = {{"type", "pure"},
                           {"data", vector_to_json(Vector{{1.0, 0.0}})}};
  json decomps = json::array();
  for (int k = 1; k <= 2; ++k) {
    const double a = k * eps;
    Vector up(2), um(2);
    up << std::cos(a), std::sin(a);
    um << -std::sin(a), std::cos(a);
    decomps.push_back(json::array({matrix_to_json(up * up.adjoint()),
                                   matrix_to_json(um * um.adjoint())}));
  }
  file["histories"] = {{"type", "chain"}, {"decompositions", decomps}};
  const auto path = tmp.path / "chain.json";
  atomic_write(path, file.dump());
  const auto loaded = read_history_set(path);
  CHECK(loaded.size() == 4);
  CHECK(loaded.homogeneous);  // chain-built default
  const auto direct = zeno_set({2, eps});
  const auto d0 = decoherence_matrix(direct);
  const auto d1 = decoherence_matrix(loaded);
  CHECK(max_abs(Matrix(d0.entries - d1.entries)) < 1e-12);
}

TEST_CASE("mixed initial states round-trip") {
  TempDir tmp;
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 0.7;
  rho(1, 1) = 0.3;
  auto set = HistorySet::from_density(DensityMatrix::make(rho),
                                      {{Matrix::Identity(2, 2)}}, {}, false);
  const auto path = tmp.path / "mixed.json";
  write_history_set(path, set);
  const auto loaded = read_history_set(path);
  CHECK_FALSE(loaded.pure_state.has_value());
  CHECK(max_abs(Matrix(loaded.initial.matrix - rho)) < 1e-14);
}

TEST_CASE("schema violations carry diagnostics") {
  CHECK_THROWS_AS(history_set_from_json(json{{"dimension", 2}}), Error);
  json j;
  j["dimension"] = 2;
  j["initial_state"] = {{"type", "pure"},
                        {"data", vector_to_json(Vector{{1.0, 0.0}})}};
  j["histories"] = {{"type", "operators"},
                    {"ops", json::array({matrix_to_json(Matrix::Identity(3, 3))})}};
  CHECK_THROWS_WITH_AS(history_set_from_json(j), doctest::Contains("2x2"),
                       Error);
  j["histories"] = {{"type", "spaghetti"}};
  CHECK_THROWS_AS(history_set_from_json(j), Error);
  CHECK_THROWS_AS(read_history_set("/nonexistent/file.json"), Error);
}

TEST_CASE("doubles are formatted with full precision") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  const double v = 0.12345678901234567;
  CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("atomic write replaces the file completely") {
  TempDir tmp;
  const auto path = tmp.path / "out.txt";
  atomic_write(path, "first");
  atomic_write(path, "second");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(content == "second");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
}
