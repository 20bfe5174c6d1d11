#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "stomap/matrix.hpp"

namespace stomap {

/// {"rows": n, "cols": m, "entries": [["p/q", ...], ...]}, entries row-major.
nlohmann::ordered_json matrix_to_json(const StochasticMatrix& m);

/// Inverse of matrix_to_json. Malformed documents raise ParseError; data that
/// parses but is not column-stochastic raises NotStochasticError.
StochasticMatrix matrix_from_json(const nlohmann::json& doc);
StochasticMatrix matrix_from_json_text(std::string_view text);

}  // namespace stomap
