#pragma once

#include "mpersp/commuting.hpp"

namespace mpersp {

// Matrix perspective g(L, R) = f(L/R) R and the extended perspective
// (f # h)(L, R) = f(L / h(R)) h(R).
//
// Each comes in two forms. The eigen form works on a CommutingPair and is
// exact on the joint spectrum. The symmetrized form
//   R^{1/2} f(R^{-1/2} L R^{-1/2}) R^{1/2}
// accepts non-commuting positive arguments, which is what a convex
// combination of two commuting pairs generally is. On commuting input the
// two agree and the eigen form is authoritative.

HermitianMatrix perspective_eigen(const ScalarAtom& f, const CommutingPair& pair);

HermitianMatrix perspective_symmetrized(const ScalarAtom& f, const HermitianMatrix& l,
                                        const HermitianMatrix& r, double floor = kDefaultFloor);

// Requires f operator convex with f(0) <= 0 and h operator concave with
// h > 0 on the spectrum of R.
HermitianMatrix marechal_eigen(const ScalarAtom& f, const ScalarAtom& h, const CommutingPair& pair);

HermitianMatrix marechal_symmetrized(const ScalarAtom& f, const ScalarAtom& h,
                                     const HermitianMatrix& l, const HermitianMatrix& r,
                                     double floor = kDefaultFloor);

// <g(L, R)(K*), K*> with L(X) = sigma X, R(X) = X rho.
double perspective_quadratic_form(const ScalarAtom& f, const MultiplicationPair& mp, const CMatrix& k);

// <(f # h)(L, R)(X*), X*> with L(Y) = sigma Y, R(Y) = Y rho.
double marechal_quadratic_form(const ScalarAtom& f, const ScalarAtom& h, const MultiplicationPair& mp,
                               const CMatrix& x);

}  // namespace mpersp
