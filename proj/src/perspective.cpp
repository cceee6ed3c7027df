#include "mpersp/perspective.hpp"

#include <cmath>
#include <sstream>

#include "mpersp/error.hpp"

namespace mpersp {

namespace {

void require_matrix_class(const ScalarAtom& f) {
  if (!f.operator_convex && !f.operator_concave) {
    throw PreconditionError("perspective of '" + f.label() + "': atom is neither operator convex nor concave");
  }
}

void require_marechal_atoms(const ScalarAtom& f, const ScalarAtom& h) {
  if (!f.operator_convex || !f.f0_nonpositive) {
    throw PreconditionError("extended perspective needs f operator convex with f(0) <= 0, got '" + f.label() +
                            "'");
  }
  if (!h.operator_concave) {
    throw PreconditionError("extended perspective needs h operator concave, got '" + h.label() + "'");
  }
}

double h_value(const ScalarAtom& h, double y) {
  const double v = eval_atom(h, y);
  if (!(v > 0.0)) {
    std::ostringstream os;
    os << "h = " << h.label() << " is not positive at " << y << " (value " << v << ")";
    throw DomainError(os.str(), y);
  }
  return v;
}

// R^{1/2} f(R^{-1/2} L R^{-1/2}) R^{1/2}
HermitianMatrix sandwich(const ScalarAtom& f, const HermitianMatrix& l, const HermitianMatrix& r, double floor) {
  if (l.dim() != r.dim()) throw DimensionError("perspective: L and R differ in dimension");
  const RootPair roots = positive_roots(r, floor);
  const CMatrix& is = roots.inv_sqrt.matrix();
  const HermitianMatrix inner(CMatrix(is * l.matrix() * is));
  const HermitianMatrix fm = apply_scalar_function(f, inner);
  const CMatrix& s = roots.sqrt.matrix();
  return HermitianMatrix(CMatrix(s * fm.matrix() * s));
}

double quadratic_form(const HermitianMatrix& op, const CMatrix& y) {
  const CMatrix image = apply_superop(op.matrix(), y);
  const Complex v = hs_inner(image, y);
  const double scale = 1.0 + operator_norm(op) * y.squaredNorm();
  if (std::abs(v.imag()) > 1e-12 * scale) {
    std::ostringstream os;
    os << "quadratic form has imaginary residue " << v.imag() << " beyond 1e-12 * " << scale;
    throw Error(os.str());
  }
  return v.real();
}

}  // namespace

HermitianMatrix perspective_eigen(const ScalarAtom& f, const CommutingPair& pair) {
  require_matrix_class(f);
  const RVector& lambda = pair.lambda();
  const RVector& mu = pair.mu();
  RVector d(pair.dim());
  for (Index i = 0; i < pair.dim(); ++i) d[i] = eval_atom(f, lambda[i] / mu[i]) * mu[i];
  return HermitianMatrix::from_spectrum(pair.basis(), d);
}

HermitianMatrix perspective_symmetrized(const ScalarAtom& f, const HermitianMatrix& l, const HermitianMatrix& r,
                                        double floor) {
  require_matrix_class(f);
  return sandwich(f, l, r, floor);
}

HermitianMatrix marechal_eigen(const ScalarAtom& f, const ScalarAtom& h, const CommutingPair& pair) {
  require_marechal_atoms(f, h);
  const RVector& lambda = pair.lambda();
  const RVector& mu = pair.mu();
  RVector d(pair.dim());
  for (Index i = 0; i < pair.dim(); ++i) {
    const double hm = h_value(h, mu[i]);
    d[i] = eval_atom(f, lambda[i] / hm) * hm;
  }
  return HermitianMatrix::from_spectrum(pair.basis(), d);
}

HermitianMatrix marechal_symmetrized(const ScalarAtom& f, const ScalarAtom& h, const HermitianMatrix& l,
                                     const HermitianMatrix& r, double floor) {
  require_marechal_atoms(f, h);
  if (h.kind == AtomKind::Identity) return sandwich(f, l, r, floor);
  const auto sd = spectral_decompose(r);
  RVector hv(sd.dim());
  for (Index i = 0; i < sd.dim(); ++i) hv[i] = h_value(h, sd.eigenvalues[i]);
  return sandwich(f, l, HermitianMatrix::from_spectrum(sd.eigenvectors, hv), floor);
}

double perspective_quadratic_form(const ScalarAtom& f, const MultiplicationPair& mp, const CMatrix& k) {
  if (k.rows() != mp.dim() || k.cols() != mp.dim()) throw DimensionError("quadratic form: K has wrong shape");
  const CommutingPair big = realize_multiplication_pair(mp);
  return quadratic_form(perspective_eigen(f, big), k.adjoint());
}

double marechal_quadratic_form(const ScalarAtom& f, const ScalarAtom& h, const MultiplicationPair& mp,
                               const CMatrix& x) {
  if (x.rows() != mp.dim() || x.cols() != mp.dim()) throw DimensionError("quadratic form: X has wrong shape");
  const CommutingPair big = realize_multiplication_pair(mp);
  return quadratic_form(marechal_eigen(f, h, big), x.adjoint());
}

}  // namespace mpersp
