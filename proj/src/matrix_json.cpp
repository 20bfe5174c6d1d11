#include "stomap/matrix_json.hpp"

#include "stomap/error.hpp"

namespace stomap {

nlohmann::ordered_json matrix_to_json(const StochasticMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

namespace {

std::size_t read_size(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned()) {
    throw ParseError(std::string("matrix document needs a non-negative integer '") +
                         key + "'",
                     0);
  }
  return doc[key].get<std::size_t>();
}

Scalar read_entry(const nlohmann::json& e, std::size_t i, std::size_t j) {
  const std::string where =
      " at entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
  if (e.is_number_unsigned()) return Scalar(e.get<std::uint64_t>());
  if (!e.is_string()) throw ParseError("entries must be fraction strings" + where, 0);
  try {
    return Scalar::parse(e.get<std::string>());
  } catch (const DomainError& err) {
    throw ParseError(err.what() + where, 0);
  }
}

}  // namespace

StochasticMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("matrix document must be an object", 0);
  const std::size_t n = read_size(doc, "rows");
  const std::size_t m = read_size(doc, "cols");
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError("matrix document needs an 'entries' array", 0);
  }
  const auto& rows = doc["entries"];
  if (rows.size() != n) {
    throw ParseError("'entries' has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(n),
                     0);
  }
  std::vector<Scalar> entries(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m) {
      throw ParseError("row " + std::to_string(i + 1) + " must hold " +
                           std::to_string(m) + " entries",
                       0);
    }
    for (std::size_t j = 0; j < m; ++j) entries[j * n + i] = read_entry(rows[i][j], i, j);
  }
  return StochasticMatrix(n, m, std::move(entries));
}

StochasticMatrix matrix_from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return matrix_from_json(doc);
}

}  // namespace stomap
