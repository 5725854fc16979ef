#include "hardy/inequality/report.hpp"

namespace hardy::inequality {

nlohmann::json to_json(const HardyReport& r) {
  nlohmann::json j;
  j["lhs"] = r.lhs;
  j["rhs_gradient_term"] = r.rhs_gradient_term;
  j["rhs_lp_term"] = r.rhs_lp_term;
  j["deficit"] = r.deficit;
  j["gamma"] = r.gamma;
  j["p"] = r.p;
  j["group"] = r.group;
  j["mode"] = to_string(r.mode);
  j["n"] = r.n;
  j["d"] = r.d ? nlohmann::json(*r.d) : nlohmann::json(nullptr);
  j["quad_error"] = r.quad_error;
  j["f_params"] = {{"kind", r.f_params.kind},
                   {"center", r.f_params.center},
                   {"radii", r.f_params.radii},
                   {"m", r.f_params.m}};
  j["n_model"] = "constant";
  return j;
}

nlohmann::json to_json(const std::vector<HardyReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string report_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace hardy::inequality
