#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "r2r/oracle/transition_matrix.hpp"
#include "r2r/partition.hpp"
#include "r2r/spectrum.hpp"
#include "r2r/tableau.hpp"

namespace r2r::io {

using Json = nlohmann::ordered_json;

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

/// "2,1,1" or "[2,1,1]" -> [2,1,1]. Throws std::invalid_argument.
Partition parse_partition(const std::string& text);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const Json& j);
/// {"rows": [...], "inner": [...]}, inner cells as null.
Json to_json(const SkewTableau& t);

/// Every emitted file starts with this block.
struct RunMetadata {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
};
Json to_json(const RunMetadata& meta);
/// "# key=value" comment lines.
std::string csv_preamble(const RunMetadata& meta);

/// Serialized spectrum; zero-multiplicity entries are dropped unless asked.
std::string spectrum_json(const Spectrum& s, const RunMetadata& meta, bool include_zero = false);
std::string spectrum_csv(const Spectrum& s, const RunMetadata& meta, bool include_zero = false);

/// Column-oriented numeric table for curves and profiles.
struct Table {
  using Value = std::variant<std::int64_t, double, std::string>;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};
std::string table_json(const Table& table, const RunMetadata& meta, const Json& header = Json::object());
std::string table_csv(const Table& table, const RunMetadata& meta, const Json& header = Json::object());

std::string matrix_csv(const oracle::TransitionMatrix& m);
/// {"states":N, "denominator":d, "numerators":[[...],...]}.
std::string matrix_json(const oracle::TransitionMatrix& m);

}  // namespace r2r::io
