#include "mpersp/report.hpp"

namespace mpersp {

using nlohmann::json;

std::string seed_rule() {
  return "trial_seed = splitmix64 chain of (seed, fnv1a64(theorem tag), trial_index, redraw); "
         "RNG = std::mt19937_64(trial_seed)";
}

json to_json(const TrialConfig& c) {
  return {{"dim_n", c.dim_n}, {"dim_m", c.dim_m},   {"trials", c.trials}, {"seed", c.seed},
          {"tol", c.tol},     {"floor", c.floor},   {"f", c.f},           {"h", c.h},
          {"s", c.s},         {"p", c.p},           {"q", c.q},           {"shrink", c.shrink},
          {"negative_control", c.negative_control}};
}

json to_json(const CheckReport& r) {
  json witness = {{"trial_index", r.witness.trial_index},
                  {"redraws", r.witness.redraws},
                  {"seed", r.witness.trial_seed},
                  {"slack", r.witness.slack},
                  {"instance", r.witness.instance}};
  return {{"theorem", std::string(theorem_tag(r.theorem))},
          {"trials", r.trials_run},
          {"failures", r.failures},
          {"rejected", r.rejected},
          {"worst_slack", r.worst_slack},
          {"tolerance", r.config.tol},
          {"passed", r.ok()},
          {"witness", std::move(witness)},
          {"seed_rule", seed_rule()},
          {"config", to_json(r.config)}};
}

json to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return {{"reports", std::move(arr)}};
}

}  // namespace mpersp
