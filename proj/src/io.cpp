#include "r2r/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace r2r::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Partition parse_partition(const std::string& text) {
  std::string body;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ') body += ch;
  std::vector<int> parts;
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int value = 0;
      const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
      if (res.ec != std::errc{} || res.ptr != item.data() + item.size() || value <= 0)
        throw std::invalid_argument("bad partition part '" + item + "'");
      parts.push_back(value);
    }
  }
  return Partition(std::move(parts));
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const StandardTableau& t) { return Json(t.rows()); }

StandardTableau tableau_from_json(const Json& j) { return StandardTableau(j.get<TableauRows>()); }

Json to_json(const SkewTableau& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
      if (static_cast<int>(j) < t.inner()[i])
        row.push_back(nullptr);
      else
        row.push_back(t.rows()[i][j]);
    }
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}, {"inner", to_json(t.inner())}};
}

Json to_json(const RunMetadata& meta) {
  Json params = Json::object();
  for (const auto& [k, v] : meta.parameters) params[k] = v;
  return Json{{"tool", "r2r"}, {"version", R2R_VERSION}, {"command", meta.command}, {"parameters", std::move(params)}};
}

std::string csv_preamble(const RunMetadata& meta) {
  std::string out = "# tool=r2r\n# version=" + std::string(R2R_VERSION) + "\n# command=" + meta.command + "\n";
  for (const auto& [k, v] : meta.parameters) out += "# " + k + "=" + v + "\n";
  return out;
}

namespace {

std::string csv_partition(const Partition& p) { return "\"" + p.to_string() + "\""; }

}  // namespace

std::string spectrum_json(const Spectrum& s, const RunMetadata& meta, bool include_zero) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    if (!include_zero && e.multiplicity == 0) continue;
    entries.push_back(Json{{"lambda", to_json(e.lambda)},
                           {"mu", to_json(e.mu)},
                           {"value", std::to_string(e.value.num()) + "/" + std::to_string(e.value.den())},
                           {"num", e.value.num()},
                           {"den", e.value.den()},
                           {"multiplicity", e.multiplicity.str()}});
  }
  Json doc{{"metadata", to_json(meta)}, {"n", s.n}, {"evaluation", to_json(s.evaluation)}, {"entries", std::move(entries)}};
  return doc.dump(2) + "\n";
}

std::string spectrum_csv(const Spectrum& s, const RunMetadata& meta, bool include_zero) {
  std::string out = csv_preamble(meta);
  out += "# n=" + std::to_string(s.n) + "\n# evaluation=" + s.evaluation.to_string() + "\n";
  out += "lambda,mu,num,den,multiplicity\n";
  for (const auto& e : s.entries) {
    if (!include_zero && e.multiplicity == 0) continue;
    out += csv_partition(e.lambda) + "," + csv_partition(e.mu) + "," + std::to_string(e.value.num()) + "," +
           std::to_string(e.value.den()) + "," + e.multiplicity.str() + "\n";
  }
  return out;
}

namespace {

Json value_json(const Table::Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return Json(format_double(x));
        }
        return Json(x);
      },
      v);
}

std::string value_csv(const Table::Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>)
          return format_double(x);
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(x);
        else
          return x;
      },
      v);
}

}  // namespace

std::string table_json(const Table& table, const RunMetadata& meta, const Json& header) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c]] = value_json(row[c]);
    rows.push_back(std::move(obj));
  }
  Json doc{{"metadata", to_json(meta)}};
  for (const auto& [k, v] : header.items()) doc[k] = v;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string table_csv(const Table& table, const RunMetadata& meta, const Json& header) {
  std::string out = csv_preamble(meta);
  for (const auto& [key, value] : header.items()) {
    out += "# " + key + "=";
    if (value.is_string()) out += value.get<std::string>();
    else if (value.is_number_float()) out += format_double(value.get<double>());
    else out += value.dump();
    out += "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) out += (c ? "," : "") + table.columns[c];
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + value_csv(row[c]);
    out += "\n";
  }
  return out;
}

std::string matrix_csv(const oracle::TransitionMatrix& m) {
  std::string out;
  const double den = m.denominator;
  for (Eigen::Index i = 0; i < m.states(); ++i) {
    for (Eigen::Index j = 0; j < m.states(); ++j) out += (j ? "," : "") + format_double(m.counts(i, j) / den);
    out += "\n";
  }
  return out;
}

std::string matrix_json(const oracle::TransitionMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.states(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.states(); ++j) row.push_back(m.counts(i, j));
    rows.push_back(std::move(row));
  }
  Json doc{{"states", m.states()},
           {"evaluation", to_json(m.evaluation)},
           {"denominator", m.denominator},
           {"numerators", std::move(rows)}};
  return doc.dump() + "\n";
}

}  // namespace r2r::io
