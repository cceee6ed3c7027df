#include "mpersp/checks.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "mpersp/error.hpp"
#include "mpersp/perspective.hpp"
#include "oracles.hpp"

namespace mpersp {
namespace {

TEST(MakeCheck, ThresholdIsScaled) {
  const TrialCheck c = make_check(-1e-9, 10.0, 1e-10);
  EXPECT_DOUBLE_EQ(c.threshold, 1e-9);
  EXPECT_TRUE(c.passed);
  EXPECT_FALSE(make_check(-1.1e-9, 10.0, 1e-10).passed);
  EXPECT_TRUE(make_check(0.0, 1.0, 0.0).passed);
}

TEST(HansenPedersen, EqualSplitOfIdentityIsTight) {
  Rng rng(1);
  const double r = 1.0 / std::sqrt(2.0);
  const BlockPair ab{r * CMatrix::Identity(3, 3), r * CMatrix::Identity(3, 3)};
  const HermitianMatrix t = random_positive(3, rng);
  for (const char* name : {"xlogx", "square", "neg_log"}) {
    const TrialCheck c = check_hansen_pedersen(lookup_atom(name), ab, t, 1e-10);
    EXPECT_NEAR(c.slack, 0.0, 1e-12 * c.scale) << name;
    EXPECT_TRUE(c.passed);
  }
}

TEST(HansenPedersen, SquareMatchesCompressionGap) {
  // For f(x) = x^2 the gap is (A*T^2A + B*T^2B) - (A*TA + B*TB)^2.
  for (Index n : {2, 3, 5}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      const BlockPair ab = random_isometry_pair(n, n, rng);
      const HermitianMatrix t = random_hermitian_in(Interval::real_line(), n, rng);
      const CMatrix& tm = t.matrix();
      const CMatrix y = ab.a.adjoint() * tm * ab.a + ab.b.adjoint() * tm * ab.b;
      const CMatrix gap = ab.a.adjoint() * tm * tm * ab.a + ab.b.adjoint() * tm * tm * ab.b - y * y;
      const TrialCheck c = check_hansen_pedersen(lookup_atom("square"), ab, t, 1e-10);
      EXPECT_NEAR(c.slack, min_eigenvalue(HermitianMatrix(gap)), 1e-10 * c.scale);
      EXPECT_TRUE(c.passed);
    }
  }
}

TEST(HansenPedersen, Errors) {
  const BlockPair bad{CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)};
  EXPECT_THROW(check_hansen_pedersen(lookup_atom("square"), bad, HermitianMatrix::identity(2), 1e-8), HypothesisError);
  const BlockPair iso{CMatrix::Identity(2, 2), CMatrix::Zero(2, 2)};
  EXPECT_THROW(check_hansen_pedersen(lookup_atom("square"), iso, HermitianMatrix::identity(3), 1e-8), DimensionError);
}

TEST(HansenPedersen, QuarticRefutedBeyondTwoByTwo) {
  const ScalarAtom quartic = lookup_atom("quartic");
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 2000 && failures == 0; ++seed) {
    Rng rng(seed);
    const BlockPair ab = random_isometry_pair(3, 2, rng);
    const HermitianMatrix t = random_hermitian_in(Interval::real_line(), 3, rng);
    if (!check_hansen_pedersen(quartic, ab, t, 1e-8).passed) ++failures;
  }
  EXPECT_GT(failures, 0);
}

TEST(HansenPedersenContractive, ZeroBlocksGiveMinusFZero) {
  const BlockPair zero{CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)};
  Rng rng(2);
  const HermitianMatrix t = random_positive(2, rng);
  const TrialCheck c = check_hansen_pedersen_contractive(lookup_atom("xlogx"), zero, t, 1e-10);
  EXPECT_EQ(c.slack, 0.0);
  const TrialCheck k = check_hansen_pedersen_contractive(parse_atom("constant:-2"), zero, t, 1e-10);
  EXPECT_DOUBLE_EQ(k.slack, 2.0);
}

TEST(HansenPedersenContractive, Errors) {
  const BlockPair zero{CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)};
  EXPECT_THROW(check_hansen_pedersen_contractive(parse_atom("constant:1"), zero, HermitianMatrix::identity(2), 1e-8),
               PreconditionError);
  const BlockPair big{CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)};
  EXPECT_THROW(check_hansen_pedersen_contractive(lookup_atom("square"), big, HermitianMatrix::identity(2), 1e-8),
               HypothesisError);
}

TEST(PerspectiveConvexity, DegenerateMixturesAreTight) {
  Rng rng(3);
  const CommutingPair p1 = random_commuting_pair(3, rng, 1e-2);
  const CommutingPair p2 = random_commuting_pair(3, rng, 1e-2);
  const ScalarAtom f = lookup_atom("xlogx");
  EXPECT_NEAR(check_perspective_joint_convexity(f, p1, p1, 0.3, 1e-8).slack, 0.0, 1e-11);
  for (double c : {0.0, 1.0}) {
    const TrialCheck k = check_perspective_joint_convexity(f, p1, p2, c, 1e-8);
    EXPECT_LE(std::abs(k.slack), 1e-9 * k.scale);
  }
  EXPECT_THROW(check_perspective_joint_convexity(f, p1, p2, 1.5, 1e-8), PreconditionError);
  EXPECT_THROW(check_perspective_joint_convexity(parse_atom("power:0.5"), p1, p2, 0.5, 1e-8), PreconditionError);
}

TEST(PerspectiveConvexity, RandomPairsHold) {
  for (const char* name : {"xlogx", "neg_power:0.5", "square", "neg_log"}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const CommutingPair p1 = random_commuting_pair(3, rng, 1e-2);
      const CommutingPair p2 = random_commuting_pair(3, rng, 1e-2);
      EXPECT_TRUE(check_perspective_joint_convexity(parse_atom(name), p1, p2, 0.37, 1e-8).passed) << name;
    }
  }
}

TEST(MarechalConvexity, IdentityHReducesToPerspective) {
  const ScalarAtom f = lookup_atom("xlogx");
  const ScalarAtom id = lookup_atom("identity");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const CommutingPair p1 = random_commuting_pair(3, rng);
    const CommutingPair p2 = random_commuting_pair(3, rng);
    const TrialCheck a = check_marechal_joint_convexity(f, id, p1, p2, 0.4, 1e-8);
    const TrialCheck b = check_perspective_joint_convexity(f, p1, p2, 0.4, 1e-8);
    EXPECT_EQ(a.slack, b.slack);
    EXPECT_EQ(a.scale, b.scale);
  }
}

TEST(RelativeEntropyConvexity, Examples) {
  Rng rng(5);
  const DensityMatrix r = random_density(3, rng);
  const DensityMatrix s = random_density(3, rng);
  EXPECT_NEAR(check_relative_entropy_joint_convexity(r, s, r, s, 0.3, 1e-10).slack, 0.0, 1e-13);
  const DensityMatrix r2 = random_density(3, rng);
  const DensityMatrix s2 = random_density(3, rng);
  EXPECT_NEAR(check_relative_entropy_joint_convexity(r, s, r2, s2, 0.0, 1e-10).slack, 0.0, 1e-13);
  const TrialCheck mid = check_relative_entropy_joint_convexity(r, s, r2, s2, 0.5, 1e-10);
  EXPECT_TRUE(mid.passed);
  EXPECT_THROW(check_relative_entropy_joint_convexity(r, s, DensityMatrix(HermitianMatrix::identity(2)), s2, 0.5, 1e-10),
               DimensionError);
}

LiebInstance random_lieb(Rng& rng, Index n) {
  LiebInstance in{random_positive(n, rng), random_positive(n, rng), random_positive(n, rng), random_positive(n, rng),
                  random_gaussian(n, n, rng)};
  return in;
}

TEST(LiebConcavity, Examples) {
  Rng rng(6);
  LiebInstance in = random_lieb(rng, 3);
  LiebInstance same = in;
  same.a2 = in.a1;
  same.b2 = in.b1;
  EXPECT_NEAR(check_lieb_concavity(same, 0.5, 0.3, 1e-10).slack, 0.0, 1e-12 * (1 + in.k.squaredNorm() * 100));
  LiebInstance zero = in;
  zero.k = CMatrix::Zero(3, 3);
  EXPECT_EQ(check_lieb_concavity(zero, 0.5, 0.3, 1e-10).slack, 0.0);
  EXPECT_TRUE(check_lieb_concavity(in, 0.25, 0.6, 1e-10).passed);
  EXPECT_THROW(check_lieb_concavity(in, 1.0, 0.5, 1e-10), PreconditionError);
}

TEST(LiebPqConcavity, ComplementaryExponentsMatchLieb) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const LiebInstance in = random_lieb(rng, 3);
    const TrialCheck pq = check_lieb_pq_concavity(in, 0.7, 0.3, 0.45, 1e-10);
    const TrialCheck s = check_lieb_concavity(in, 0.3, 0.45, 1e-10);
    EXPECT_NEAR(pq.slack, s.slack, 1e-12 * s.scale);
  }
  Rng rng(1);
  const LiebInstance in = random_lieb(rng, 2);
  EXPECT_THROW(check_lieb_pq_concavity(in, 0.7, 0.4, 0.5, 1e-10), PreconditionError);
}

TEST(ClassicalChecks, Examples) {
  const double gap = std::log(2.0) - 1.5 * std::log(1.5);
  const TrialCheck c = check_classical_perspective_convexity(lookup_atom("xlogx"), 1, 1, 2, 1, 0.5, 1e-12);
  EXPECT_NEAR(c.slack, gap, 1e-15);
  EXPECT_NEAR(c.slack, 0.0849, 1e-4);

  const ProbabilityVector p1({0.9, 0.1});
  const ProbabilityVector p2({0.1, 0.9});
  const TrialCheck h = check_entropy_concavity(p1, p2, 0.5, 1e-12);
  const double expect = std::log(2.0) + (0.9 * std::log(0.9) + 0.1 * std::log(0.1));
  EXPECT_NEAR(h.slack, expect, 1e-15);

  const double d = oracle::classical_divergence({0.5, 0.5}, {0.9, 0.1});
  const ProbabilityVector u({0.5, 0.5});
  const TrialCheck r = check_classical_relative_entropy_convexity(u, p1, u, p1, 0.3, 1e-12);
  EXPECT_NEAR(r.slack, 0.0, 1e-15);
  EXPECT_NEAR(classical_relative_entropy(u, p1), d, 1e-15);
}

}  // namespace
}  // namespace mpersp
