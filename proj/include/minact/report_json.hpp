#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "minact/bounds.hpp"

namespace minact {

nlohmann::ordered_json report_to_json(const DimensionReport& report);
DimensionReport report_from_json(const nlohmann::ordered_json& j);

/// Wraps a report list in the versioned output schema.
std::string reports_to_json_text(const std::vector<DimensionReport>& reports,
                                 const std::string& command);
std::vector<DimensionReport> reports_from_json_text(const std::string& text);

std::string reports_to_csv(const std::vector<DimensionReport>& reports);

} // namespace minact
