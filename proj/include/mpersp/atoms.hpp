#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mpersp {

inline constexpr double kEndpointTol = 1e-10;

// Real interval with optionally open endpoints; +-infinity allowed.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval real_line() { return {}; }
  static Interval nonnegative() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }
  static Interval positive() { return {0.0, std::numeric_limits<double>::infinity(), false, false}; }

  // Closed endpoints accept values within `tol` outside them; open
  // endpoints are strict.
  bool contains(double x, double tol = kEndpointTol) const;
  // Moves a value lying within `tol` outside a closed endpoint onto it.
  double clamp(double x) const;
  std::string describe() const;
};

enum class AtomKind { XLogX, NegPower, Power, NegLog, Square, Identity, Constant, Quartic };

// A scalar function together with what is known about its matrix lift.
// The flags are hypotheses recorded from the literature; module verify
// stress-tests them.
struct ScalarAtom {
  AtomKind kind;
  std::string name;
  std::optional<double> parameter;
  Interval domain;
  bool operator_convex = false;
  bool operator_concave = false;
  bool f0_nonpositive = false;
  bool strictly_positive_required = false;

  // Closed-form value without domain checks.
  double value_at(double x) const;
  bool is_affine() const { return operator_convex && operator_concave; }
  std::string label() const;
};

// Throws PreconditionError for unknown names or out-of-range parameters.
ScalarAtom lookup_atom(std::string_view name, std::optional<double> parameter = std::nullopt);

// Parses "name" or "name:param".
ScalarAtom parse_atom(std::string_view spec);

// Domain-checked evaluation; throws DomainError outside the domain.
double eval_atom(const ScalarAtom& f, double x);

std::vector<std::string> atom_names();

}  // namespace mpersp
