#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/inequality/deficit.hpp"

namespace hardy::inequality {

/// {lhs, rhs_gradient_term, rhs_lp_term, deficit, gamma, p, group, mode, n,
///  d, quad_error, f_params, n_model}. d is null in starshaped mode.
nlohmann::json to_json(const HardyReport& report);
nlohmann::json to_json(const std::vector<HardyReport>& reports);

/// Indented JSON text with a trailing newline.
std::string report_text(const nlohmann::json& j);

}  // namespace hardy::inequality
