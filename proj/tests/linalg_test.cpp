#include "mpersp/linalg.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "mpersp/error.hpp"
#include "mpersp/matrix_json.hpp"
#include "mpersp/random.hpp"
#include "oracles.hpp"

namespace mpersp {
namespace {

const double kE = std::exp(1.0);

RVector vec(std::initializer_list<double> xs) {
  RVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

TEST(HermitianMatrix, SymmetrizesAndRecordsDefect) {
  CMatrix m(2, 2);
  m << Complex(1, 0), Complex(2, 1), Complex(2, -0.5), Complex(3, 0);
  const HermitianMatrix h(m);
  EXPECT_NEAR(h.defect(), std::abs(Complex(2, 1) - std::conj(Complex(2, -0.5))), 1e-15);
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
  EXPECT_EQ(h(0, 1), Complex(2, 0.75));
}

TEST(HermitianMatrix, RejectsNonSquareAndEmpty) {
  EXPECT_THROW(HermitianMatrix(CMatrix(2, 3)), DimensionError);
  EXPECT_THROW(HermitianMatrix(CMatrix(0, 0)), DimensionError);
}

TEST(SpectralDecompose, DiagonalInput) {
  const auto sd = spectral_decompose(HermitianMatrix::diagonal(vec({3, 1})));
  EXPECT_DOUBLE_EQ(sd.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(sd.eigenvalues[1], 3.0);
  // Columns are a permutation of identity columns up to phase.
  EXPECT_NEAR(std::abs(sd.eigenvectors(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(sd.eigenvectors(0, 1)), 1.0, 1e-15);
}

TEST(SpectralDecompose, IdentityReconstructs) {
  const auto sd = spectral_decompose(HermitianMatrix::identity(4));
  for (Index i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(sd.eigenvalues[i], 1.0);
  EXPECT_LE(oracle::max_abs(sd.reconstruct() - CMatrix::Identity(4, 4)), 1e-10);
}

TEST(SpectralDecompose, RecoversKnownSpectrum) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const CMatrix u = random_unitary(3, rng);
    const HermitianMatrix t = HermitianMatrix::from_spectrum(u, vec({5, 1, 2}));
    const auto sd = spectral_decompose(t);
    EXPECT_NEAR(sd.eigenvalues[0], 1.0, 1e-10);
    EXPECT_NEAR(sd.eigenvalues[1], 2.0, 1e-10);
    EXPECT_NEAR(sd.eigenvalues[2], 5.0, 1e-10);
    const double norm = operator_norm(t);
    EXPECT_LE(oracle::max_abs(sd.reconstruct() - t.matrix()), 1e-10 * (1 + norm));
    EXPECT_LE(oracle::max_abs(sd.eigenvectors.adjoint() * sd.eigenvectors - CMatrix::Identity(3, 3)), 1e-10);
  }
}

TEST(ApplyScalarFunction, Examples) {
  const auto sq = apply_scalar_function(lookup_atom("square"), HermitianMatrix::diagonal(vec({1, 2})));
  EXPECT_LE(oracle::max_abs(sq.matrix() - HermitianMatrix::diagonal(vec({1, 4})).matrix()), 1e-14);

  const auto zero = apply_scalar_function(lookup_atom("xlogx"), HermitianMatrix::identity(3));
  EXPECT_LE(zero.max_abs(), 1e-15);

  const auto ex = apply_scalar_function(lookup_atom("xlogx"), HermitianMatrix::diagonal(vec({kE, kE * kE})));
  EXPECT_NEAR(ex(0, 0).real(), kE, 1e-14);
  EXPECT_NEAR(ex(1, 1).real(), 2 * kE * kE, 1e-13);
}

TEST(ApplyScalarFunction, DomainViolationNamesEigenvalue) {
  try {
    apply_scalar_function(lookup_atom("neg_log"), HermitianMatrix::diagonal(vec({1, -0.5})));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_DOUBLE_EQ(e.offending(), -0.5);
  }
}

TEST(ApplyScalarFunction, ClampsTinyNegativeEigenvalues) {
  const auto r = apply_scalar_function(lookup_atom("xlogx"), HermitianMatrix::diagonal(vec({-1e-16, 1})));
  EXPECT_EQ(r(0, 0).real(), 0.0);
  EXPECT_THROW(apply_scalar_function(lookup_atom("xlogx"), HermitianMatrix::diagonal(vec({-1e-6, 1}))),
               DomainError);
}

TEST(ApplyScalarFunction, MatchesSchurParlettOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const HermitianMatrix t = random_positive(4, rng, 1e-3);
    const auto lg = apply_scalar_function(lookup_atom("neg_log"), t);
    EXPECT_LE(oracle::max_abs(lg.matrix() + oracle::log_m(t.matrix())), 1e-9);
    const auto pw = apply_scalar_function(lookup_atom("power", 0.3), t);
    EXPECT_LE(oracle::max_abs(pw.matrix() - oracle::pow_m(t.matrix(), 0.3)), 1e-9);
  }
}

TEST(ApplyScalarFunction, CommutesWithArgument) {
  Rng rng(3);
  const HermitianMatrix t = random_positive(5, rng);
  const auto ft = apply_scalar_function(lookup_atom("xlogx"), t);
  const CMatrix comm = t.matrix() * ft.matrix() - ft.matrix() * t.matrix();
  EXPECT_LE(oracle::max_abs(comm), 1e-10 * (1 + operator_norm(t)) * (1 + operator_norm(ft)));
}

// Property: f(U T U*) = U f(T) U*.
TEST(ApplyScalarFunction, UnitaryCovariance) {
  const ScalarAtom f = lookup_atom("xlogx");
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(100 + seed);
    const HermitianMatrix t = random_positive(4, rng);
    const CMatrix u = random_unitary(4, rng);
    const HermitianMatrix rotated(CMatrix(u * t.matrix() * u.adjoint()));
    const auto ft = apply_scalar_function(f, t);
    const auto lhs = apply_scalar_function(f, rotated);
    const CMatrix rhs = u * ft.matrix() * u.adjoint();
    EXPECT_LE(oracle::max_abs(lhs.matrix() - rhs), 1e-10 * (1 + operator_norm(ft)));
  }
}

TEST(ApplyScalarFunction, IdentityAtomIsIdentity) {
  Rng rng(8);
  const HermitianMatrix t = random_hermitian_in(Interval::real_line(), 5, rng);
  const auto r = apply_scalar_function(lookup_atom("identity"), t);
  EXPECT_LE(oracle::max_abs(r.matrix() - t.matrix()), 1e-10 * (1 + operator_norm(t)));
}

TEST(LoewnerLeq, Examples) {
  auto v = loewner_leq(HermitianMatrix::zero(2), HermitianMatrix::diagonal(vec({1, 2})), 1e-8);
  EXPECT_TRUE(v.holds);
  EXPECT_NEAR(v.slack, 1.0, 1e-15);

  const auto b = HermitianMatrix::diagonal(vec({1, 4}));
  v = loewner_leq(b, b, 0.0);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.slack, 0.0);

  v = loewner_leq(HermitianMatrix::diagonal(vec({2, 0})), HermitianMatrix::diagonal(vec({1, 1})), 0.0);
  EXPECT_FALSE(v.holds);
  EXPECT_NEAR(v.slack, -1.0, 1e-15);
}

TEST(LoewnerLeq, ToleranceScalesWithNormOfDifference) {
  const auto a = HermitianMatrix::diagonal(vec({1e6 + 1e-3, 0}));
  const auto b = HermitianMatrix::diagonal(vec({0, 0}));
  // ||B - A|| is ~1e6, so 1e-8 relative allows a slack of about -1e-2.
  const auto small = loewner_leq(HermitianMatrix::diagonal(vec({1e-3, -1e6})), b, 1e-8);
  EXPECT_TRUE(small.holds);
  EXPECT_NEAR(small.tolerance_used, 1e-8 * (1 + 1e6), 1e-12);
  EXPECT_FALSE(loewner_leq(a, b, 1e-8).holds);
  EXPECT_THROW(loewner_leq(HermitianMatrix::zero(2), HermitianMatrix::zero(3), 0.0), DimensionError);
}

// Property: reflexive; mutual order at tol 0 forces equality up to noise.
TEST(LoewnerLeq, ReflexiveAndAntisymmetric) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const HermitianMatrix a = random_hermitian_in(Interval::real_line(), 4, rng);
    EXPECT_TRUE(loewner_leq(a, a, 0.0).holds);
    const HermitianMatrix b = random_hermitian_in(Interval::real_line(), 4, rng);
    const bool both = loewner_leq(a, b, 0.0).holds && loewner_leq(b, a, 0.0).holds;
    if (both) EXPECT_LE(operator_norm(a - b), 1e-12);
  }
}

TEST(HsInner, Examples) {
  EXPECT_EQ(hs_inner(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)), Complex(2, 0));
  const CMatrix x = HermitianMatrix::diagonal(vec({1, 2})).matrix();
  EXPECT_EQ(hs_inner(x, x), Complex(5, 0));
  EXPECT_EQ(hs_inner(oracle::matrix_unit(2, 0, 0), oracle::matrix_unit(2, 1, 1)), Complex(0, 0));
  EXPECT_THROW(hs_inner(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)), DimensionError);
}

// Property: <X, X> >= 0 with equality only at X = 0, conjugate symmetry,
// and agreement with Trace X Y*.
TEST(HsInner, InnerProductAxioms) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const CMatrix x = random_gaussian(3, 3, rng);
    const CMatrix y = random_gaussian(3, 3, rng);
    const Complex xx = hs_inner(x, x);
    EXPECT_GT(xx.real(), 0.0);
    EXPECT_NEAR(xx.imag(), 0.0, 1e-14);
    EXPECT_LE(std::abs(hs_inner(x, y) - std::conj(hs_inner(y, x))), 1e-12);
    EXPECT_LE(std::abs(hs_inner(x, y) - (x * y.adjoint()).trace()), 1e-12);
  }
  EXPECT_EQ(hs_inner(CMatrix::Zero(3, 3), CMatrix::Zero(3, 3)), Complex(0, 0));
}

TEST(MatrixJson, RoundTripIsBitExact) {
  Rng rng(11);
  for (int k = 0; k < 10; ++k) {
    const CMatrix m = random_gaussian(3, 3, rng) * 1e-3;
    const CMatrix back = matrix_from_json(nlohmann::json::parse(to_json(m).dump()));
    EXPECT_TRUE((back.array() == m.array()).all());
  }
  const CMatrix rect = random_gaussian(3, 2, rng);
  const nlohmann::json j = to_json(rect);
  EXPECT_EQ(j["rows"], 3);
  EXPECT_EQ(j["cols"], 2);
  EXPECT_TRUE((matrix_from_json(j).array() == rect.array()).all());
}

TEST(MatrixJson, RejectsNonHermitianAndMalformed) {
  const nlohmann::json bad = {{"dim", 2}, {"entries", {{{1, 0}, {0, 1e-6}}, {{0, 0}, {1, 0}}}}};
  EXPECT_THROW(hermitian_from_json(bad), ParseError);
  const nlohmann::json ok = {{"dim", 2}, {"entries", {{{1, 0}, {0, 1e-9}}, {{0, 0}, {1, 0}}}}};
  EXPECT_NO_THROW(hermitian_from_json(ok));
  EXPECT_THROW(matrix_from_json(nlohmann::json{{"dim", 2}, {"entries", {{{1, 0}}}}}), ParseError);
  EXPECT_THROW(matrix_from_json(nlohmann::json{{"entries", 1}}), ParseError);
}

}  // namespace
}  // namespace mpersp
