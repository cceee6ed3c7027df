#include "mpersp/atoms.hpp"

#include <cmath>
#include <sstream>

#include "mpersp/error.hpp"

namespace mpersp {

bool Interval::contains(double x, double tol) const {
  if (std::isnan(x)) return false;
  const bool above = lo_closed ? x >= lo - tol : x > lo;
  const bool below = hi_closed ? x <= hi + tol : x < hi;
  return above && below;
}

double Interval::clamp(double x) const {
  if (lo_closed && x < lo) return lo;
  if (hi_closed && x > hi) return hi;
  return x;
}

std::string Interval::describe() const {
  std::ostringstream os;
  os << (lo_closed ? '[' : '(') << lo << ", " << hi << (hi_closed ? ']' : ')');
  return os.str();
}

double ScalarAtom::value_at(double x) const {
  switch (kind) {
    case AtomKind::XLogX:
      return x == 0.0 ? 0.0 : x * std::log(x);
    case AtomKind::NegPower:
      return -std::pow(x, *parameter);
    case AtomKind::Power:
      return std::pow(x, *parameter);
    case AtomKind::NegLog:
      return -std::log(x);
    case AtomKind::Square:
      return x * x;
    case AtomKind::Identity:
      return x;
    case AtomKind::Constant:
      return *parameter;
    case AtomKind::Quartic: {
      const double x2 = x * x;
      return x2 * x2;
    }
  }
  return 0.0;
}

std::string ScalarAtom::label() const {
  if (!parameter) return name;
  std::ostringstream os;
  os << name << ':' << *parameter;
  return os.str();
}

namespace {

ScalarAtom base(AtomKind kind, std::string name, Interval domain) {
  ScalarAtom a{kind, std::move(name), std::nullopt, domain};
  a.strictly_positive_required = !domain.lo_closed && domain.lo == 0.0;
  return a;
}

double require_param(std::string_view name, std::optional<double> p) {
  if (!p) throw PreconditionError("atom '" + std::string(name) + "' needs a parameter");
  if (!std::isfinite(*p)) throw PreconditionError("atom '" + std::string(name) + "' parameter is not finite");
  return *p;
}

void reject_param(std::string_view name, std::optional<double> p) {
  if (p) throw PreconditionError("atom '" + std::string(name) + "' takes no parameter");
}

}  // namespace

ScalarAtom lookup_atom(std::string_view name, std::optional<double> parameter) {
  if (name == "xlogx") {
    reject_param(name, parameter);
    auto a = base(AtomKind::XLogX, "xlogx", Interval::nonnegative());
    a.operator_convex = true;
    a.f0_nonpositive = true;
    return a;
  }
  if (name == "neg_power") {
    const double s = require_param(name, parameter);
    if (!(s > 0.0 && s < 1.0)) {
      throw PreconditionError("neg_power exponent must lie in (0, 1), got " + std::to_string(s));
    }
    auto a = base(AtomKind::NegPower, "neg_power", Interval::nonnegative());
    a.parameter = s;
    a.operator_convex = true;
    a.f0_nonpositive = true;
    return a;
  }
  if (name == "power") {
    const double t = require_param(name, parameter);
    if (!(t > 0.0 && t <= 1.0)) {
      throw PreconditionError("power exponent must lie in (0, 1], got " + std::to_string(t));
    }
    auto a = base(AtomKind::Power, "power", Interval::positive());
    a.parameter = t;
    a.operator_concave = true;
    a.operator_convex = t == 1.0;
    a.f0_nonpositive = true;  // y^t -> 0 as y -> 0
    return a;
  }
  if (name == "neg_log") {
    reject_param(name, parameter);
    auto a = base(AtomKind::NegLog, "neg_log", Interval::positive());
    a.operator_convex = true;
    return a;
  }
  if (name == "square") {
    reject_param(name, parameter);
    auto a = base(AtomKind::Square, "square", Interval::real_line());
    a.operator_convex = true;
    a.f0_nonpositive = true;
    return a;
  }
  if (name == "identity") {
    reject_param(name, parameter);
    auto a = base(AtomKind::Identity, "identity", Interval::real_line());
    a.operator_convex = true;
    a.operator_concave = true;
    a.f0_nonpositive = true;
    return a;
  }
  if (name == "constant") {
    const double c = require_param(name, parameter);
    auto a = base(AtomKind::Constant, "constant", Interval::real_line());
    a.parameter = c;
    a.operator_convex = true;
    a.operator_concave = true;
    a.f0_nonpositive = c <= 0.0;
    return a;
  }
  if (name == "quartic") {
    reject_param(name, parameter);
    auto a = base(AtomKind::Quartic, "quartic", Interval::real_line());
    a.f0_nonpositive = true;
    return a;
  }
  throw PreconditionError("unknown atom '" + std::string(name) + "'");
}

ScalarAtom parse_atom(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return lookup_atom(spec);
  const std::string num(spec.substr(colon + 1));
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(num, &used);
  } catch (const std::exception&) {
    throw PreconditionError("bad atom parameter in '" + std::string(spec) + "'");
  }
  if (used != num.size()) throw PreconditionError("bad atom parameter in '" + std::string(spec) + "'");
  return lookup_atom(spec.substr(0, colon), value);
}

double eval_atom(const ScalarAtom& f, double x) {
  if (!f.domain.contains(x)) {
    std::ostringstream os;
    os << f.label() << ": argument " << x << " outside domain " << f.domain.describe();
    throw DomainError(os.str(), x);
  }
  return f.value_at(f.domain.clamp(x));
}

std::vector<std::string> atom_names() {
  return {"xlogx", "neg_power", "power", "neg_log", "square", "identity", "constant", "quartic"};
}

}  // namespace mpersp
