#include "mpersp/atoms.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "mpersp/error.hpp"

namespace mpersp {
namespace {

TEST(LookupAtom, RegisteredFlags) {
  const auto xlogx = lookup_atom("xlogx");
  EXPECT_TRUE(xlogx.operator_convex);
  EXPECT_TRUE(xlogx.f0_nonpositive);
  const auto np = lookup_atom("neg_power", 0.5);
  EXPECT_TRUE(np.operator_convex);
  EXPECT_TRUE(np.f0_nonpositive);
  const auto pw = lookup_atom("power", 0.5);
  EXPECT_TRUE(pw.operator_concave);
  EXPECT_FALSE(pw.operator_convex);
  EXPECT_TRUE(pw.strictly_positive_required);
  EXPECT_FALSE(lookup_atom("quartic").operator_convex);
  EXPECT_FALSE(lookup_atom("neg_log").f0_nonpositive);
  EXPECT_FALSE(lookup_atom("constant", 1.0).f0_nonpositive);
  EXPECT_TRUE(lookup_atom("constant", -1.0).f0_nonpositive);
}

TEST(LookupAtom, Errors) {
  EXPECT_THROW(lookup_atom("cube"), PreconditionError);
  EXPECT_THROW(lookup_atom("neg_power", 1.5), PreconditionError);
  EXPECT_THROW(lookup_atom("neg_power", 0.0), PreconditionError);
  EXPECT_THROW(lookup_atom("neg_power"), PreconditionError);
  EXPECT_THROW(lookup_atom("power", 1.2), PreconditionError);
  EXPECT_THROW(lookup_atom("xlogx", 2.0), PreconditionError);
  EXPECT_THROW(parse_atom("neg_power:abc"), PreconditionError);
  EXPECT_EQ(parse_atom("neg_power:0.25").parameter, 0.25);
}

TEST(LookupAtom, OnlyAffineAtomsAreBothConvexAndConcave) {
  for (const auto& name : atom_names()) {
    std::optional<double> p;
    if (name == "neg_power" || name == "power") p = 0.5;
    if (name == "constant") p = 2.0;
    const auto a = lookup_atom(name, p);
    if (a.operator_convex && a.operator_concave) {
      EXPECT_TRUE(name == "identity" || name == "constant") << name;
    }
  }
  EXPECT_TRUE(lookup_atom("power", 1.0).is_affine());
}

TEST(EvalAtom, Examples) {
  EXPECT_EQ(eval_atom(lookup_atom("xlogx"), 0.0), 0.0);
  EXPECT_EQ(eval_atom(lookup_atom("xlogx"), 1.0), 0.0);
  EXPECT_DOUBLE_EQ(eval_atom(lookup_atom("neg_power", 0.5), 4.0), -2.0);
  EXPECT_DOUBLE_EQ(eval_atom(lookup_atom("quartic"), -2.0), 16.0);
  EXPECT_DOUBLE_EQ(eval_atom(lookup_atom("constant", 3.0), -7.0), 3.0);
}

TEST(EvalAtom, DomainErrors) {
  EXPECT_THROW(eval_atom(lookup_atom("neg_log"), 0.0), DomainError);
  EXPECT_THROW(eval_atom(lookup_atom("power", 0.5), 0.0), DomainError);
  EXPECT_THROW(eval_atom(lookup_atom("xlogx"), -1e-3), DomainError);
  // Closed endpoints accept and clamp values within 1e-10.
  EXPECT_EQ(eval_atom(lookup_atom("xlogx"), -1e-12), 0.0);
  EXPECT_EQ(eval_atom(lookup_atom("neg_power", 0.5), -1e-12), -0.0);
}

TEST(EvalAtom, ParameterIdentities) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(1e-3, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    EXPECT_DOUBLE_EQ(eval_atom(lookup_atom("power", 1.0), x), x);
  }
  for (double s : {0.1, 0.5, 0.9}) EXPECT_DOUBLE_EQ(eval_atom(lookup_atom("neg_power", s), 1.0), -1.0);
}

TEST(EvalAtom, ClosedFormsAtRationalPoints) {
  for (int num = 1; num <= 40; ++num) {
    for (int den : {1, 2, 3, 7}) {
      const double x = static_cast<double>(num) / den;
      EXPECT_NEAR(eval_atom(lookup_atom("xlogx"), x), x * std::log(x), 1e-14 * (1 + std::abs(x * std::log(x))));
      EXPECT_NEAR(eval_atom(lookup_atom("neg_log"), x), -std::log(x), 1e-14 * (1 + std::abs(std::log(x))));
      EXPECT_NEAR(eval_atom(lookup_atom("square"), x), x * x, 1e-14 * x * x);
      EXPECT_NEAR(eval_atom(lookup_atom("neg_power", 0.5), x), -std::sqrt(x), 1e-14 * std::sqrt(x));
    }
  }
}

// Property: convexity at n = 1 for every operator-convex atom, and
// f(0) <= 0 where flagged.
TEST(EvalAtom, ScalarConvexityOfOperatorConvexAtoms) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& name : atom_names()) {
    std::optional<double> p;
    if (name == "neg_power" || name == "power") p = 0.5;
    if (name == "constant") p = -1.0;
    const auto f = lookup_atom(name, p);
    if (f.f0_nonpositive && f.domain.contains(0.0)) EXPECT_LE(eval_atom(f, 0.0), 1e-14) << name;
    if (!f.operator_convex) continue;
    for (int i = 0; i < 500; ++i) {
      const bool positive = f.domain.lo == 0.0;
      const double x = positive ? 20 * u(rng) + 1e-9 : 40 * u(rng) - 20;
      const double y = positive ? 20 * u(rng) + 1e-9 : 40 * u(rng) - 20;
      const double c = u(rng);
      const double lhs = eval_atom(f, c * x + (1 - c) * y);
      const double rhs = c * eval_atom(f, x) + (1 - c) * eval_atom(f, y);
      EXPECT_LE(lhs, rhs + 1e-12 * (1 + std::abs(rhs))) << name;
    }
  }
}

}  // namespace
}  // namespace mpersp
