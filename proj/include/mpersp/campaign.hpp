#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mpersp/checks.hpp"

namespace mpersp {

enum class Theorem {
  HansenPedersen,
  HansenPedersenContractive,
  Perspective,
  Marechal,
  RelEntropyConvexity,
  LiebS,
  LiebPq,
  Classical,
};

std::string_view theorem_tag(Theorem t);
std::optional<Theorem> theorem_from_tag(std::string_view tag);
const std::vector<Theorem>& all_theorems();

struct TrialConfig {
  int dim_n = 3;
  int dim_m = 3;
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double floor = kDefaultFloor;
  std::string f = "xlogx";      // "name" or "name:param"
  std::string h = "power:0.5";  // extended perspective only
  double s = 0.5;
  double p = 0.3;
  double q = 0.4;
  double shrink = 1.0;  // contraction factor bound for the contractive variant
  bool negative_control = false;
};

// Throws PreconditionError when the config cannot drive `theorem`.
void validate(Theorem theorem, const TrialConfig& config);

struct TrialRecord {
  int trial_index = 0;
  int redraws = 0;
  std::uint64_t trial_seed = 0;
  double c = 0.0;
  TrialCheck check;
  nlohmann::json instance;  // filled only when requested
};

// Runs one trial. Instances hitting a domain violation are redrawn with
// the next sub-seed, at most kMaxRedraws times.
inline constexpr int kMaxRedraws = 100;
TrialRecord run_trial(Theorem theorem, const TrialConfig& config, int trial_index, bool capture_instance = false);

// Mixing weight policy: trials 0, 1, 2 use c = 0, 1/2, 1; later trials
// draw c uniformly from [0, 1].
double mixing_weight(int trial_index, Rng& rng);

struct Witness {
  int trial_index = 0;
  int redraws = 0;
  std::uint64_t trial_seed = 0;
  double slack = 0.0;
  nlohmann::json instance;
};

struct CheckReport {
  Theorem theorem = Theorem::HansenPedersen;
  TrialConfig config;
  int trials_run = 0;
  int failures = 0;
  int rejected = 0;  // total redraws
  double worst_slack = 0.0;
  Witness witness;

  // Positive control: no failures. Negative control: at least one.
  bool ok() const { return config.negative_control ? failures > 0 : failures == 0; }
};

enum class Execution { Serial, Parallel };

CheckReport run_campaign(Theorem theorem, const TrialConfig& config, Execution exec = Execution::Parallel);

struct CampaignEntry {
  Theorem theorem;
  TrialConfig config;
};

std::vector<CheckReport> run_campaign(const std::vector<CampaignEntry>& entries,
                                      Execution exec = Execution::Parallel);

// The positive-control matrix: every theorem with the atoms, parameters
// and dimensions it is checked at. Trials, seed, tol and floor come from
// `base`.
std::vector<CampaignEntry> acceptance_plan(const TrialConfig& base);

}  // namespace mpersp
