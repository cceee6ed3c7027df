#include "mpersp/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mpersp/error.hpp"
#include "mpersp/perspective.hpp"

namespace mpersp {

TrialCheck make_check(double slack, double scale, double tol) {
  TrialCheck c;
  c.slack = slack;
  c.scale = scale;
  c.threshold = tol * scale;
  c.passed = slack >= -c.threshold;
  return c;
}

namespace {

constexpr double kHypothesisTol = 1e-10;

void require_weight(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw PreconditionError("mixing weight must lie in [0, 1]");
}

TrialCheck loewner_check(const HermitianMatrix& minorant, const HermitianMatrix& majorant, double tol) {
  const double slack = min_eigenvalue(majorant - minorant);
  const double scale = 1.0 + std::max(operator_norm(minorant), operator_norm(majorant));
  return make_check(slack, scale, tol);
}

TrialCheck scalar_check(double gap, double big, double tol) { return make_check(gap, 1.0 + std::abs(big), tol); }

// A*XA + B*XB.
HermitianMatrix compress(const BlockPair& ab, const HermitianMatrix& x) {
  const CMatrix& a = ab.a;
  const CMatrix& b = ab.b;
  return HermitianMatrix(CMatrix(a.adjoint() * x.matrix() * a + b.adjoint() * x.matrix() * b));
}

void require_shapes(const BlockPair& ab, const HermitianMatrix& t) {
  if (ab.a.rows() != ab.b.rows() || ab.a.cols() != ab.b.cols() || ab.a.rows() != t.dim()) {
    throw DimensionError("Hansen-Pedersen: A, B must be m x n and T m x m");
  }
}

TrialCheck jensen_slack(const ScalarAtom& f, const BlockPair& ab, const HermitianMatrix& t, double tol) {
  const HermitianMatrix lhs = apply_scalar_function(f, compress(ab, t));
  const HermitianMatrix rhs = compress(ab, apply_scalar_function(f, t));
  return loewner_check(lhs, rhs, tol);
}

void require_commuting(const CommutingPair& p) {
  const double bound = kHypothesisTol * (1.0 + p.left().max_abs() * p.right().max_abs());
  if (p.commutator_norm() > bound) throw HypothesisError("commuting pair violates [L, R] = 0");
}

struct Combination {
  HermitianMatrix l;
  HermitianMatrix r;
};

Combination combine(const CommutingPair& p1, const CommutingPair& p2, double c) {
  if (p1.dim() != p2.dim()) throw DimensionError("joint convexity: pairs differ in dimension");
  require_weight(c);
  require_commuting(p1);
  require_commuting(p2);
  return {c * p1.left() + (1.0 - c) * p2.left(), c * p1.right() + (1.0 - c) * p2.right()};
}

}  // namespace

TrialCheck check_hansen_pedersen(const ScalarAtom& f, const BlockPair& ab, const HermitianMatrix& t, double tol) {
  require_shapes(ab, t);
  const CMatrix id = CMatrix::Identity(ab.a.cols(), ab.a.cols());
  const double defect = (ab.gram() - id).cwiseAbs().maxCoeff();
  if (defect > kHypothesisTol) {
    std::ostringstream os;
    os << "A*A + B*B differs from I by " << defect;
    throw HypothesisError(os.str());
  }
  return jensen_slack(f, ab, t, tol);
}

TrialCheck check_hansen_pedersen_contractive(const ScalarAtom& f, const BlockPair& ab, const HermitianMatrix& t,
                                             double tol) {
  if (!f.f0_nonpositive) {
    throw PreconditionError("contractive Jensen inequality needs f(0) <= 0; '" + f.label() +
                            "' does not satisfy it (A = B = 0 would give f(0) <= 0 as the claim)");
  }
  require_shapes(ab, t);
  const Index n = ab.a.cols();
  const LoewnerVerdict v = loewner_leq(HermitianMatrix(ab.gram()), HermitianMatrix::identity(n), kHypothesisTol);
  if (!v.holds) {
    std::ostringstream os;
    os << "A*A + B*B is not below I (slack " << v.slack << ")";
    throw HypothesisError(os.str());
  }
  return jensen_slack(f, ab, t, tol);
}

TrialCheck check_perspective_joint_convexity(const ScalarAtom& f, const CommutingPair& pair1,
                                             const CommutingPair& pair2, double c, double tol) {
  if (!f.operator_convex) throw PreconditionError("perspective convexity needs an operator convex f");
  const Combination mix = combine(pair1, pair2, c);
  const double floor = std::min(pair1.floor(), pair2.floor());
  const HermitianMatrix g = perspective_symmetrized(f, mix.l, mix.r, floor);
  const HermitianMatrix bound = c * perspective_eigen(f, pair1) + (1.0 - c) * perspective_eigen(f, pair2);
  return loewner_check(g, bound, tol);
}

TrialCheck check_marechal_joint_convexity(const ScalarAtom& f, const ScalarAtom& h, const CommutingPair& pair1,
                                          const CommutingPair& pair2, double c, double tol) {
  const Combination mix = combine(pair1, pair2, c);
  const double floor = std::min(pair1.floor(), pair2.floor());
  const HermitianMatrix g = marechal_symmetrized(f, h, mix.l, mix.r, floor);
  const HermitianMatrix bound = c * marechal_eigen(f, h, pair1) + (1.0 - c) * marechal_eigen(f, h, pair2);
  return loewner_check(g, bound, tol);
}

TrialCheck check_relative_entropy_joint_convexity(const DensityMatrix& rho1, const DensityMatrix& sigma1,
                                                  const DensityMatrix& rho2, const DensityMatrix& sigma2, double c,
                                                  double tol) {
  require_weight(c);
  const Index n = rho1.dim();
  if (sigma1.dim() != n || rho2.dim() != n || sigma2.dim() != n) {
    throw DimensionError("relative entropy convexity: density matrices differ in dimension");
  }
  constexpr double tiny = std::numeric_limits<double>::min();
  const DensityMatrix rho(c * rho1.matrix() + (1.0 - c) * rho2.matrix(), tiny);
  const DensityMatrix sigma(c * sigma1.matrix() + (1.0 - c) * sigma2.matrix(), tiny);
  const double s1 = quantum_relative_entropy_direct(rho1, sigma1);
  const double s2 = quantum_relative_entropy_direct(rho2, sigma2);
  const double s = quantum_relative_entropy_direct(rho, sigma);
  const double mixture = c * s1 + (1.0 - c) * s2;
  return scalar_check(mixture - s, std::max(std::abs(s), c * std::abs(s1) + (1.0 - c) * std::abs(s2)), tol);
}

namespace {

template <class F>
TrialCheck concavity_check(const LiebInstance& in, double c, double tol, F&& value) {
  require_weight(c);
  const double f1 = value(in.a1, in.b1);
  const double f2 = value(in.a2, in.b2);
  const double f = value(c * in.a1 + (1.0 - c) * in.a2, c * in.b1 + (1.0 - c) * in.b2);
  const double mixture = c * f1 + (1.0 - c) * f2;
  return scalar_check(f - mixture, std::max(std::abs(f), c * std::abs(f1) + (1.0 - c) * std::abs(f2)), tol);
}

}  // namespace

TrialCheck check_lieb_concavity(const LiebInstance& in, double s, double c, double tol, double floor) {
  if (!(s > 0.0 && s < 1.0)) throw PreconditionError("Lieb concavity needs 0 < s < 1");
  return concavity_check(in, c, tol, [&](const HermitianMatrix& a, const HermitianMatrix& b) {
    return lieb_functional(a, b, in.k, s, floor);
  });
}

TrialCheck check_lieb_pq_concavity(const LiebInstance& in, double p, double q, double c, double tol, double floor) {
  if (!(p > 0.0 && q > 0.0 && p + q <= 1.0)) throw PreconditionError("Lieb p,q concavity needs p, q > 0, p + q <= 1");
  return concavity_check(in, c, tol, [&](const HermitianMatrix& a, const HermitianMatrix& b) {
    return lieb_pq_functional(a, b, in.k, p, q, floor);
  });
}

TrialCheck check_classical_perspective_convexity(const ScalarAtom& f, double x1, double t1, double x2, double t2,
                                                 double c, double tol) {
  require_weight(c);
  const auto g = [&f](double x, double t) { return classical_perspective(f, {x}, t).front(); };
  const double g1 = g(x1, t1);
  const double g2 = g(x2, t2);
  const double gm = g(c * x1 + (1.0 - c) * x2, c * t1 + (1.0 - c) * t2);
  const double mixture = c * g1 + (1.0 - c) * g2;
  return scalar_check(mixture - gm, std::max(std::abs(gm), c * std::abs(g1) + (1.0 - c) * std::abs(g2)), tol);
}

namespace {

ProbabilityVector mix(const ProbabilityVector& a, const ProbabilityVector& b, double c) {
  if (a.size() != b.size()) throw DimensionError("probability vectors differ in length");
  std::vector<double> w(a.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = c * a[i] + (1.0 - c) * b[i];
  return ProbabilityVector(std::move(w));
}

}  // namespace

TrialCheck check_entropy_concavity(const ProbabilityVector& p1, const ProbabilityVector& p2, double c, double tol) {
  require_weight(c);
  const double h1 = classical_entropy(p1);
  const double h2 = classical_entropy(p2);
  const double h = classical_entropy(mix(p1, p2, c));
  return scalar_check(h - (c * h1 + (1.0 - c) * h2), std::max(h, c * h1 + (1.0 - c) * h2), tol);
}

TrialCheck check_classical_relative_entropy_convexity(const ProbabilityVector& q1, const ProbabilityVector& p1,
                                                      const ProbabilityVector& q2, const ProbabilityVector& p2,
                                                      double c, double tol) {
  require_weight(c);
  const double d1 = classical_relative_entropy(q1, p1);
  const double d2 = classical_relative_entropy(q2, p2);
  const double d = classical_relative_entropy(mix(q1, q2, c), mix(p1, p2, c));
  const double mixture = c * d1 + (1.0 - c) * d2;
  return scalar_check(mixture - d, std::max(std::abs(d), mixture), tol);
}

}  // namespace mpersp
