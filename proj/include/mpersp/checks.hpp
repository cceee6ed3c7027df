#pragma once

#include "mpersp/commuting.hpp"
#include "mpersp/functionals.hpp"
#include "mpersp/random.hpp"

namespace mpersp {

// Outcome of one inequality evaluation. For Loewner inequalities the
// slack is the minimum eigenvalue of (majorant - minorant); for scalar
// inequalities it is the signed gap. A trial passes iff
// slack >= -tol * scale, where scale is 1 plus the size of the larger
// side of the inequality.
struct TrialCheck {
  double slack = 0.0;
  double scale = 1.0;
  double threshold = 0.0;  // tol * scale
  bool passed = true;
};

TrialCheck make_check(double slack, double scale, double tol);

// f(A*TA + B*TB) <= A*f(T)A + B*f(T)B under A*A + B*B = I.
TrialCheck check_hansen_pedersen(const ScalarAtom& f, const BlockPair& ab, const HermitianMatrix& t, double tol);

// Same inequality under A*A + B*B <= I; needs f(0) <= 0.
TrialCheck check_hansen_pedersen_contractive(const ScalarAtom& f, const BlockPair& ab, const HermitianMatrix& t,
                                             double tol);

// g(L, R) <= c g(L1, R1) + (1 - c) g(L2, R2) with (L, R) the convex
// combination, evaluated by the symmetrized formula.
TrialCheck check_perspective_joint_convexity(const ScalarAtom& f, const CommutingPair& pair1,
                                             const CommutingPair& pair2, double c, double tol);

TrialCheck check_marechal_joint_convexity(const ScalarAtom& f, const ScalarAtom& h, const CommutingPair& pair1,
                                          const CommutingPair& pair2, double c, double tol);

TrialCheck check_relative_entropy_joint_convexity(const DensityMatrix& rho1, const DensityMatrix& sigma1,
                                                  const DensityMatrix& rho2, const DensityMatrix& sigma2, double c,
                                                  double tol);

struct LiebInstance {
  HermitianMatrix a1, b1, a2, b2;
  CMatrix k;
};

TrialCheck check_lieb_concavity(const LiebInstance& in, double s, double c, double tol,
                                double floor = kDefaultFloor);
TrialCheck check_lieb_pq_concavity(const LiebInstance& in, double p, double q, double c, double tol,
                                   double floor = kDefaultFloor);

TrialCheck check_classical_perspective_convexity(const ScalarAtom& f, double x1, double t1, double x2, double t2,
                                                 double c, double tol);
// H(c p1 + (1-c) p2) >= c H(p1) + (1-c) H(p2).
TrialCheck check_entropy_concavity(const ProbabilityVector& p1, const ProbabilityVector& p2, double c, double tol);
// H(q||p) jointly convex in (q, p).
TrialCheck check_classical_relative_entropy_convexity(const ProbabilityVector& q1, const ProbabilityVector& p1,
                                                      const ProbabilityVector& q2, const ProbabilityVector& p2,
                                                      double c, double tol);

}  // namespace mpersp
