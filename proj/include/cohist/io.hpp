#ifndef COHIST_IO_HPP
#define COHIST_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cohist/consistency.hpp"
#include "cohist/histories.hpp"
#include "cohist/mpv.hpp"

namespace cohist {

/// Complex numbers serialize as [re, im]; matrices as row-major nested
/// arrays of such pairs.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& field);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j, const std::string& field);

/// History-set file schema: dimension, initial_state (pure vector or mixed
/// matrix), histories (raw operators or projector-chain decompositions),
/// labels, homogeneous flag.
nlohmann::json history_set_to_json(const HistorySet& set);
HistorySet history_set_from_json(const nlohmann::json& j);

HistorySet read_history_set(const std::filesystem::path& path);
void write_history_set(const std::filesystem::path& path,
                       const HistorySet& set);

nlohmann::json criterion_to_json(const CriterionResult& r, double epsilon);
nlohmann::json mpv_to_json(const MpvResult& r);

/// 17 significant digits, '.' decimal, no locale.
std::string format_double(double v);

/// Write-then-rename so readers never observe a partial file.
void atomic_write(const std::filesystem::path& path,
                  const std::string& content);

}  // namespace cohist

#endif  // COHIST_IO_HPP
