#include "mpersp/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "mpersp/campaign.hpp"
#include "mpersp/error.hpp"
#include "mpersp/functionals.hpp"
#include "mpersp/matrix_json.hpp"
#include "mpersp/perspective.hpp"
#include "mpersp/report.hpp"

namespace mpersp {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct AtomFlags {
  std::optional<double> s, t, p, q;
};

// "neg_power" takes its exponent from --s and "power" from --t unless the
// selector already carries ":param".
std::string atom_selector(const std::string& name, const AtomFlags& fl) {
  if (name.find(':') != std::string::npos) return name;
  if (name == "neg_power" && fl.s) return name + ":" + fmt17(*fl.s);
  if (name == "power" && fl.t) return name + ":" + fmt17(*fl.t);
  return name;
}

struct VerifyArgs {
  std::string theorem;
  std::string atom;
  std::string h;
  AtomFlags fl;
  int dim = 3;
  std::optional<int> dim_m;
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double floor = kDefaultFloor;
  bool negative_control = false;
  bool serial = false;
  bool json_out = false;
  std::string out_path;
};

struct EvalArgs {
  std::string functional;
  std::string atom = "xlogx";
  std::string h = "power";
  AtomFlags fl;
  std::string rho, sigma, a, b, k, x, l, r, matrix;
  double floor = kDefaultFloor;
  bool json_out = false;
};

std::string summary_line(const CheckReport& r) {
  std::string line(theorem_tag(r.theorem));
  const TrialConfig& c = r.config;
  switch (r.theorem) {
    case Theorem::HansenPedersen:
    case Theorem::HansenPedersenContractive:
      line += " f=" + c.f + " m=" + std::to_string(c.dim_m) + " n=" + std::to_string(c.dim_n);
      break;
    case Theorem::Perspective:
    case Theorem::Classical:
      line += " f=" + c.f + " n=" + std::to_string(c.dim_n);
      break;
    case Theorem::Marechal:
      line += " f=" + c.f + " h=" + c.h + " n=" + std::to_string(c.dim_n);
      break;
    case Theorem::RelEntropyConvexity:
      line += " n=" + std::to_string(c.dim_n);
      break;
    case Theorem::LiebS:
      line += " s=" + fmt17(c.s) + " n=" + std::to_string(c.dim_n);
      break;
    case Theorem::LiebPq:
      line += " p=" + fmt17(c.p) + " q=" + fmt17(c.q) + " n=" + std::to_string(c.dim_n);
      break;
  }
  line += " trials=" + std::to_string(r.trials_run) + " failures=" + std::to_string(r.failures) +
          " worst_slack=" + fmt17(r.worst_slack);
  line += r.ok() ? " PASS" : " FAIL";
  return line;
}

int cmd_verify(const VerifyArgs& va, std::ostream& out) {
  TrialConfig base;
  base.dim_n = va.dim;
  base.dim_m = va.dim_m.value_or(va.dim);
  base.trials = va.trials;
  base.seed = va.seed;
  base.tol = va.tol;
  base.floor = va.floor;
  base.negative_control = va.negative_control;
  if (va.fl.s) base.s = *va.fl.s;
  if (va.fl.p) base.p = *va.fl.p;
  if (va.fl.q) base.q = *va.fl.q;

  std::vector<CampaignEntry> entries;
  if (va.theorem == "all") {
    if (va.negative_control) throw PreconditionError("--negative-control cannot be combined with --theorem all");
    entries = acceptance_plan(base);
  } else {
    const auto th = theorem_from_tag(va.theorem);
    if (!th) throw PreconditionError("unknown theorem tag '" + va.theorem + "'");
    TrialConfig c = base;
    if (!va.atom.empty()) {
      c.f = atom_selector(va.atom, va.fl);
    } else if (*th == Theorem::Marechal && va.fl.s) {
      c.f = atom_selector("neg_power", va.fl);
    }
    if (!va.h.empty()) c.h = atom_selector(va.h, va.fl);
    entries.push_back({*th, c});
  }

  const auto reports = run_campaign(entries, va.serial ? Execution::Serial : Execution::Parallel);
  const json doc = to_json(reports);
  if (!va.out_path.empty()) {
    std::ofstream f(va.out_path);
    if (!f) throw Error("cannot write " + va.out_path);
    f << doc.dump(2) << '\n';
  }
  if (va.json_out) {
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << summary_line(r) << '\n';
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
  return ok ? kExitOk : kExitCheckFailed;
}

const std::string& need(const std::string& path, const char* flag) {
  if (path.empty()) throw PreconditionError(std::string("missing required flag ") + flag);
  return path;
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw PreconditionError(std::string("missing required flag ") + flag);
  return *v;
}

int cmd_eval(const EvalArgs& ea, std::ostream& out) {
  json inputs = json::object();
  json value;
  const std::string& fn = ea.functional;
  if (fn == "rel-entropy" || fn == "rel-entropy-perspective") {
    const DensityMatrix rho(read_hermitian_file(need(ea.rho, "--rho")), ea.floor);
    const DensityMatrix sigma(read_hermitian_file(need(ea.sigma, "--sigma")), ea.floor);
    inputs = {{"rho", ea.rho}, {"sigma", ea.sigma}};
    value = fn == "rel-entropy" ? quantum_relative_entropy_direct(rho, sigma)
                                : quantum_relative_entropy_perspective(rho, sigma);
  } else if (fn == "lieb-s") {
    const double s = need(ea.fl.s, "--s");
    inputs = {{"a", ea.a}, {"b", ea.b}, {"k", ea.k}, {"s", s}};
    value = lieb_functional(read_hermitian_file(need(ea.a, "--a")), read_hermitian_file(need(ea.b, "--b")),
                            read_matrix_file(need(ea.k, "--k")), s, ea.floor);
  } else if (fn == "lieb-pq") {
    const double p = need(ea.fl.p, "--p");
    const double q = need(ea.fl.q, "--q");
    inputs = {{"a", ea.a}, {"b", ea.b}, {"x", ea.x}, {"p", p}, {"q", q}};
    value = lieb_pq_functional(read_hermitian_file(need(ea.a, "--a")), read_hermitian_file(need(ea.b, "--b")),
                               read_matrix_file(need(ea.x, "--x")), p, q, ea.floor);
  } else if (fn == "perspective" || fn == "marechal") {
    const ScalarAtom f = parse_atom(atom_selector(ea.atom, ea.fl));
    const HermitianMatrix l = read_hermitian_file(need(ea.l, "--l"));
    const HermitianMatrix r = read_hermitian_file(need(ea.r, "--r"));
    inputs = {{"l", ea.l}, {"r", ea.r}, {"atom", f.label()}};
    if (fn == "perspective") {
      value = to_json(perspective_symmetrized(f, l, r, ea.floor));
    } else {
      const ScalarAtom h = parse_atom(atom_selector(ea.h, ea.fl));
      inputs["h"] = h.label();
      value = to_json(marechal_symmetrized(f, h, l, r, ea.floor));
    }
  } else if (fn == "matrix-function") {
    const ScalarAtom f = parse_atom(atom_selector(ea.atom, ea.fl));
    inputs = {{"matrix", ea.matrix}, {"atom", f.label()}};
    value = to_json(apply_scalar_function(f, read_hermitian_file(need(ea.matrix, "--matrix"))));
  } else {
    throw PreconditionError("unknown functional '" + fn + "'");
  }

  if (ea.json_out) {
    json doc = {{"functional", fn}, {"value", value}, {"inputs", inputs}};
    out << doc.dump() << '\n';
  } else if (value.is_number()) {
    out << fmt17(value.get<double>()) << '\n';
  } else {
    out << value.dump() << '\n';
  }
  return kExitOk;
}

int cmd_atoms(bool json_out, std::ostream& out) {
  json arr = json::array();
  for (const auto& name : atom_names()) {
    std::optional<double> example;
    if (name == "neg_power" || name == "power") example = 0.5;
    if (name == "constant") example = 0.0;
    const ScalarAtom a = lookup_atom(name, example);
    arr.push_back({{"name", name},
                   {"parameter", name == "neg_power" ? "s in (0,1)"
                                 : name == "power"   ? "t in (0,1]"
                                 : name == "constant" ? "c real"
                                                      : ""},
                   {"domain", a.domain.describe()},
                   {"operator_convex", a.operator_convex},
                   {"operator_concave", a.operator_concave},
                   {"f0_nonpositive", name == "constant" ? json("c <= 0") : json(a.f0_nonpositive)},
                   {"strictly_positive_required", a.strictly_positive_required}});
  }
  if (json_out) {
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& a : arr) {
    out << a["name"].get<std::string>();
    if (!a["parameter"].get<std::string>().empty()) out << " (" << a["parameter"].get<std::string>() << ")";
    out << "  domain " << a["domain"].get<std::string>() << "  convex=" << a["operator_convex"]
        << " concave=" << a["operator_concave"] << " f(0)<=0=" << a["f0_nonpositive"] << '\n';
  }
  return kExitOk;
}

void add_atom_flags(CLI::App* cmd, AtomFlags& fl) {
  cmd->add_option("--s", fl.s, "Exponent s (neg_power, Lieb)");
  cmd->add_option("--t", fl.t, "Exponent t (power)");
  cmd->add_option("--p", fl.p, "Exponent p (Lieb p,q)");
  cmd->add_option("--q", fl.q, "Exponent q (Lieb p,q)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix perspectives and Loewner-order inequality checks"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run randomized inequality campaigns");
  verify->add_option("--theorem", va.theorem, "hp, hp-contractive, perspective, marechal, rel-entropy-convexity, "
                                              "lieb-s, lieb-pq, classical or all")
      ->required();
  verify->add_option("--atom", va.atom, "Atom f, e.g. xlogx or neg_power:0.5");
  verify->add_option("--h", va.h, "Atom h for the extended perspective");
  add_atom_flags(verify, va.fl);
  verify->add_option("--dim", va.dim, "Dimension n")->check(CLI::PositiveNumber);
  verify->add_option("--dim-m", va.dim_m, "Dimension m (defaults to --dim)")->check(CLI::PositiveNumber);
  verify->add_option("--trials", va.trials, "Trials per campaign")->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Campaign seed");
  verify->add_option("--tol", va.tol, "Relative tolerance");
  verify->add_option("--floor", va.floor, "Strict positivity floor");
  verify->add_flag("--negative-control", va.negative_control, "Expect a violation (hp with quartic)");
  verify->add_flag("--serial", va.serial, "Run trials on one thread");
  verify->add_option("--out", va.out_path, "Report JSON path");
  verify->add_flag("--json", va.json_out, "Print the report JSON");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a functional on matrix files");
  eval->add_option("--functional", ea.functional,
                   "rel-entropy, rel-entropy-perspective, lieb-s, lieb-pq, perspective, marechal, matrix-function")
      ->required();
  eval->add_option("--atom", ea.atom, "Atom f");
  eval->add_option("--h", ea.h, "Atom h");
  add_atom_flags(eval, ea.fl);
  for (auto [flag, dst] : {std::pair{"--rho", &ea.rho}, {"--sigma", &ea.sigma}, {"--a", &ea.a}, {"--b", &ea.b},
                           {"--k", &ea.k}, {"--x", &ea.x}, {"--l", &ea.l}, {"--r", &ea.r},
                           {"--matrix", &ea.matrix}}) {
    eval->add_option(flag, *dst, "Matrix JSON file");
  }
  eval->add_option("--floor", ea.floor, "Strict positivity floor");
  eval->add_flag("--json", ea.json_out, "Emit a JSON object");

  bool atoms_json = false;
  auto* atoms = app.add_subcommand("atoms", "List registered atoms");
  atoms->add_flag("--json", atoms_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(va, out);
    if (*eval) return cmd_eval(ea, out);
    return cmd_atoms(atoms_json, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace mpersp
