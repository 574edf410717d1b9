#pragma once

#include <json.hpp>
#include <string>

#include "boundstate/eps_series.hpp"

namespace coulombdr {

using nlohmann::json;

// {"terms": {basis: "num/den"}, "rendered": "..."}
json symbolic_json(const boundstate::SymExpr& e);
// {"lowest_order", "truncation", "coefficients": [terms...], "rendered"}
json series_json(const boundstate::EpsSeries& s);

// Inverse of symbolic_json's "terms" map; basis tags as produced by Monomial::name.
boundstate::SymExpr symbolic_from_json(const json& terms);

std::string csv_cell(const std::string& s);
// Left-aligned columns separated by two spaces.
std::string pretty_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace coulombdr
