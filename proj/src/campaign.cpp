#include "mpersp/campaign.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "mpersp/error.hpp"
#include "mpersp/matrix_json.hpp"

namespace mpersp {

using nlohmann::json;

namespace {

struct TagEntry {
  Theorem theorem;
  std::string_view tag;
};

constexpr std::array<TagEntry, 8> kTags{{
    {Theorem::HansenPedersen, "hp"},
    {Theorem::HansenPedersenContractive, "hp-contractive"},
    {Theorem::Perspective, "perspective"},
    {Theorem::Marechal, "marechal"},
    {Theorem::RelEntropyConvexity, "rel-entropy-convexity"},
    {Theorem::LiebS, "lieb-s"},
    {Theorem::LiebPq, "lieb-pq"},
    {Theorem::Classical, "classical"},
}};

}  // namespace

std::string_view theorem_tag(Theorem t) {
  for (const auto& e : kTags) {
    if (e.theorem == t) return e.tag;
  }
  return "unknown";
}

std::optional<Theorem> theorem_from_tag(std::string_view tag) {
  for (const auto& e : kTags) {
    if (e.tag == tag) return e.theorem;
  }
  return std::nullopt;
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> v;
    for (const auto& e : kTags) v.push_back(e.theorem);
    return v;
  }();
  return all;
}

void validate(Theorem theorem, const TrialConfig& config) {
  const auto fail = [&](const std::string& why) {
    throw PreconditionError(std::string(theorem_tag(theorem)) + ": " + why);
  };
  if (config.trials < 1) fail("trials must be >= 1");
  if (config.dim_n < 1 || config.dim_m < 1) fail("dimensions must be >= 1");
  if (!(config.tol > 0.0)) fail("tolerance must be > 0");
  if (!(config.floor > 0.0)) fail("positivity floor must be > 0");
  if (config.negative_control && theorem != Theorem::HansenPedersen) {
    fail("negative-control mode is only defined for hp");
  }
  switch (theorem) {
    case Theorem::HansenPedersen:
    case Theorem::HansenPedersenContractive: {
      const ScalarAtom f = parse_atom(config.f);
      if (2 * config.dim_m < config.dim_n) fail("isometry pair needs 2m >= n");
      if (config.negative_control) {
        if (f.operator_convex) fail("negative control needs an atom that is not operator convex");
      } else if (!f.operator_convex) {
        fail("atom '" + f.label() + "' is not operator convex; use --negative-control");
      }
      if (theorem == Theorem::HansenPedersenContractive) {
        if (!f.f0_nonpositive) fail("atom '" + f.label() + "' violates f(0) <= 0");
        if (!(config.shrink > 0.0 && config.shrink <= 1.0)) fail("shrink must lie in (0, 1]");
      }
      if (!(f.domain.lo == 0.0 || std::isinf(f.domain.lo))) fail("unsupported atom domain");
      break;
    }
    case Theorem::Perspective: {
      const ScalarAtom f = parse_atom(config.f);
      if (!f.operator_convex) fail("atom '" + f.label() + "' is not operator convex");
      break;
    }
    case Theorem::Marechal: {
      const ScalarAtom f = parse_atom(config.f);
      const ScalarAtom h = parse_atom(config.h);
      if (!f.operator_convex || !f.f0_nonpositive) fail("f must be operator convex with f(0) <= 0");
      if (!h.operator_concave) fail("h must be operator concave");
      break;
    }
    case Theorem::RelEntropyConvexity:
      break;
    case Theorem::LiebS:
      if (!(config.s > 0.0 && config.s < 1.0)) fail("s must lie in (0, 1)");
      break;
    case Theorem::LiebPq:
      if (!(config.p > 0.0 && config.q > 0.0 && config.p + config.q <= 1.0)) fail("need p, q > 0 and p + q <= 1");
      break;
    case Theorem::Classical: {
      const ScalarAtom f = parse_atom(config.f);
      if (!f.operator_convex) fail("atom '" + f.label() + "' is not convex-flagged");
      break;
    }
  }
}

double mixing_weight(int trial_index, Rng& rng) {
  switch (trial_index) {
    case 0:
      return 0.0;
    case 1:
      return 0.5;
    case 2:
      return 1.0;
    default:
      return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  }
}

namespace {

double draw_in(const Interval& d, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (std::isinf(d.lo)) return -10.0 + 20.0 * u(rng);
  if (d.lo_closed) return 10.0 * u(rng);
  return std::exp(std::log(1e-3) + std::log(1e4) * u(rng));
}

json pair_json(const CommutingPair& p) {
  json lam = json::array();
  json mu = json::array();
  for (Index i = 0; i < p.dim(); ++i) {
    lam.push_back(p.lambda()[i]);
    mu.push_back(p.mu()[i]);
  }
  return {{"basis", to_json(p.basis())}, {"lambda", lam}, {"mu", mu}};
}

// One draw of an instance plus its check. `out` receives the instance
// when non-null.
TrialCheck draw_and_check(Theorem theorem, const TrialConfig& cfg, Rng& rng, double& c, json* out) {
  const Index n = cfg.dim_n;
  const Index m = cfg.dim_m;
  switch (theorem) {
    case Theorem::HansenPedersen:
    case Theorem::HansenPedersenContractive: {
      const ScalarAtom f = parse_atom(cfg.f);
      const bool contractive = theorem == Theorem::HansenPedersenContractive;
      const BlockPair ab =
          contractive ? random_contraction_pair(m, n, rng, cfg.shrink) : random_isometry_pair(m, n, rng);
      const HermitianMatrix t = random_hermitian_in(f.domain, m, rng, cfg.floor);
      if (out) *out = {{"A", to_json(ab.a)}, {"B", to_json(ab.b)}, {"T", to_json(t)}};
      return contractive ? check_hansen_pedersen_contractive(f, ab, t, cfg.tol)
                         : check_hansen_pedersen(f, ab, t, cfg.tol);
    }
    case Theorem::Perspective:
    case Theorem::Marechal: {
      const CommutingPair p1 = random_commuting_pair(n, rng, cfg.floor);
      const CommutingPair p2 = random_commuting_pair(n, rng, cfg.floor);
      if (out) *out = {{"pair1", pair_json(p1)}, {"pair2", pair_json(p2)}, {"c", c}};
      const ScalarAtom f = parse_atom(cfg.f);
      if (theorem == Theorem::Perspective) return check_perspective_joint_convexity(f, p1, p2, c, cfg.tol);
      return check_marechal_joint_convexity(f, parse_atom(cfg.h), p1, p2, c, cfg.tol);
    }
    case Theorem::RelEntropyConvexity: {
      const DensityMatrix rho1 = random_density(n, rng, cfg.floor);
      const DensityMatrix sigma1 = random_density(n, rng, cfg.floor);
      const DensityMatrix rho2 = random_density(n, rng, cfg.floor);
      const DensityMatrix sigma2 = random_density(n, rng, cfg.floor);
      if (out) {
        *out = {{"rho1", to_json(rho1.matrix())},
                {"sigma1", to_json(sigma1.matrix())},
                {"rho2", to_json(rho2.matrix())},
                {"sigma2", to_json(sigma2.matrix())},
                {"c", c}};
      }
      return check_relative_entropy_joint_convexity(rho1, sigma1, rho2, sigma2, c, cfg.tol);
    }
    case Theorem::LiebS:
    case Theorem::LiebPq: {
      LiebInstance in{random_positive(n, rng, cfg.floor), random_positive(n, rng, cfg.floor),
                      random_positive(n, rng, cfg.floor), random_positive(n, rng, cfg.floor),
                      random_gaussian(n, n, rng)};
      if (out) {
        *out = {{"A1", to_json(in.a1)}, {"B1", to_json(in.b1)}, {"A2", to_json(in.a2)},
                {"B2", to_json(in.b2)}, {"K", to_json(in.k)},   {"c", c}};
      }
      if (theorem == Theorem::LiebS) return check_lieb_concavity(in, cfg.s, c, cfg.tol, cfg.floor);
      return check_lieb_pq_concavity(in, cfg.p, cfg.q, c, cfg.tol, cfg.floor);
    }
    case Theorem::Classical: {
      const ScalarAtom f = parse_atom(cfg.f);
      const double t1 = std::exp(std::log(1e-3) + std::log(1e4) * std::uniform_real_distribution<double>()(rng));
      const double t2 = std::exp(std::log(1e-3) + std::log(1e4) * std::uniform_real_distribution<double>()(rng));
      const double x1 = t1 * draw_in(f.domain, rng);
      const double x2 = t2 * draw_in(f.domain, rng);
      const auto len = static_cast<std::size_t>(n);
      const ProbabilityVector p1 = random_probability(len, rng);
      const ProbabilityVector p2 = random_probability(len, rng);
      const ProbabilityVector q1 = random_probability(len, rng);
      const ProbabilityVector q2 = random_probability(len, rng);
      if (out) {
        *out = {{"x1", x1}, {"t1", t1}, {"x2", x2},           {"t2", t2},           {"p1", p1.weights()},
                {"p2", p2.weights()}, {"q1", q1.weights()}, {"q2", q2.weights()}, {"c", c}};
      }
      const std::array<TrialCheck, 3> parts{
          check_classical_perspective_convexity(f, x1, t1, x2, t2, c, cfg.tol),
          check_entropy_concavity(p1, p2, c, cfg.tol),
          check_classical_relative_entropy_convexity(q1, p1, q2, p2, c, cfg.tol),
      };
      // Report the part closest to failing, relative to its threshold.
      const auto worst = std::min_element(parts.begin(), parts.end(), [](const TrialCheck& a, const TrialCheck& b) {
        return a.slack / a.scale < b.slack / b.scale;
      });
      TrialCheck r = *worst;
      r.passed = std::all_of(parts.begin(), parts.end(), [](const TrialCheck& x) { return x.passed; });
      return r;
    }
  }
  throw PreconditionError("unknown theorem");
}

bool uses_mixing_weight(Theorem t) {
  return t != Theorem::HansenPedersen && t != Theorem::HansenPedersenContractive;
}

}  // namespace

TrialRecord run_trial(Theorem theorem, const TrialConfig& config, int trial_index, bool capture_instance) {
  const std::string_view tag = theorem_tag(theorem);
  for (int redraw = 0; redraw <= kMaxRedraws; ++redraw) {
    TrialRecord rec;
    rec.trial_index = trial_index;
    rec.redraws = redraw;
    rec.trial_seed = derive_seed(config.seed, tag, static_cast<std::uint64_t>(trial_index),
                                 static_cast<std::uint64_t>(redraw));
    Rng rng(rec.trial_seed);
    rec.c = uses_mixing_weight(theorem) ? mixing_weight(trial_index, rng) : 0.0;
    try {
      rec.check = draw_and_check(theorem, config, rng, rec.c, capture_instance ? &rec.instance : nullptr);
      return rec;
    } catch (const DomainError&) {
      continue;
    }
  }
  throw Error(std::string(tag) + ": trial " + std::to_string(trial_index) + " exhausted " +
              std::to_string(kMaxRedraws) + " redraws");
}

namespace {

CheckReport aggregate(Theorem theorem, const TrialConfig& config, const std::vector<TrialRecord>& records) {
  CheckReport rep;
  rep.theorem = theorem;
  rep.config = config;
  rep.trials_run = static_cast<int>(records.size());
  int worst = 0;
  for (int i = 0; i < rep.trials_run; ++i) {
    const TrialRecord& r = records[static_cast<std::size_t>(i)];
    rep.failures += r.check.passed ? 0 : 1;
    rep.rejected += r.redraws;
    if (r.check.slack < records[static_cast<std::size_t>(worst)].check.slack) worst = i;
  }
  const TrialRecord replay = run_trial(theorem, config, worst, true);
  rep.worst_slack = records[static_cast<std::size_t>(worst)].check.slack;
  rep.witness = {replay.trial_index, replay.redraws, replay.trial_seed, replay.check.slack, replay.instance};
  return rep;
}

}  // namespace

CheckReport run_campaign(Theorem theorem, const TrialConfig& config, Execution exec) {
  validate(theorem, config);
  std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
  if (exec == Execution::Serial) {
    for (int i = 0; i < config.trials; ++i) records[static_cast<std::size_t>(i)] = run_trial(theorem, config, i);
  } else {
    // Each trial owns its RNG, so the schedule cannot change any record.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < config.trials; ++i) {
      try {
        records[static_cast<std::size_t>(i)] = run_trial(theorem, config, i);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return aggregate(theorem, config, records);
}

std::vector<CheckReport> run_campaign(const std::vector<CampaignEntry>& entries, Execution exec) {
  for (const auto& e : entries) validate(e.theorem, e.config);
  std::vector<CheckReport> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(run_campaign(e.theorem, e.config, exec));
  return out;
}

std::vector<CampaignEntry> acceptance_plan(const TrialConfig& base) {
  std::vector<CampaignEntry> plan;
  const auto add = [&](Theorem t, auto&& tweak) {
    TrialConfig c = base;
    c.negative_control = false;
    tweak(c);
    plan.push_back({t, c});
  };
  const std::array<std::pair<int, int>, 4> hp_dims{{{2, 2}, {3, 3}, {5, 5}, {3, 2}}};
  for (const char* f : {"xlogx", "neg_power:0.5", "neg_log", "square"}) {
    for (auto [m, n] : hp_dims) {
      add(Theorem::HansenPedersen, [&](TrialConfig& c) {
        c.f = f;
        c.dim_m = m;
        c.dim_n = n;
      });
    }
  }
  for (const char* f : {"xlogx", "neg_power:0.5", "square"}) {
    for (auto [m, n] : hp_dims) {
      add(Theorem::HansenPedersenContractive, [&](TrialConfig& c) {
        c.f = f;
        c.dim_m = m;
        c.dim_n = n;
      });
    }
  }
  for (const char* f : {"xlogx", "neg_power:0.5"}) {
    for (int n : {2, 3, 5}) {
      add(Theorem::Perspective, [&](TrialConfig& c) {
        c.f = f;
        c.dim_n = n;
      });
    }
  }
  for (auto [f, h] : {std::pair{"xlogx", "power:0.5"}, std::pair{"neg_power:0.5", "power:0.7"}}) {
    for (int n : {2, 3, 5}) {
      add(Theorem::Marechal, [&](TrialConfig& c) {
        c.f = f;
        c.h = h;
        c.dim_n = n;
      });
    }
  }
  for (int n : {2, 3, 4}) {
    add(Theorem::RelEntropyConvexity, [&](TrialConfig& c) { c.dim_n = n; });
  }
  for (double s : {0.25, 0.5, 0.75}) {
    add(Theorem::LiebS, [&](TrialConfig& c) {
      c.dim_n = 3;
      c.s = s;
    });
  }
  for (auto [p, q] : {std::pair{0.3, 0.4}, std::pair{0.5, 0.5}, std::pair{0.1, 0.9}}) {
    add(Theorem::LiebPq, [&](TrialConfig& c) {
      c.dim_n = 3;
      c.p = p;
      c.q = q;
    });
  }
  for (const char* f : {"xlogx", "square"}) {
    add(Theorem::Classical, [&](TrialConfig& c) {
      c.f = f;
      c.dim_n = 3;
    });
  }
  return plan;
}

}  // namespace mpersp
