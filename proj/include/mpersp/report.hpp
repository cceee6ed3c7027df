#pragma once

#include <vector>

#include <json.hpp>

#include "mpersp/campaign.hpp"

namespace mpersp {

nlohmann::json to_json(const TrialConfig& config);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const std::vector<CheckReport>& reports);

// Describes how per-trial seeds are derived.
std::string seed_rule();

}  // namespace mpersp
