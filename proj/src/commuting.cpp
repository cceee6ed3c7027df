#include "mpersp/commuting.hpp"

#include <cmath>
#include <sstream>

#include "mpersp/error.hpp"

namespace mpersp {

namespace {

void check_floor(const RVector& v, double floor, const char* what) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!(v[i] >= floor)) {
      std::ostringstream os;
      os << what << "[" << i << "] = " << v[i] << " below positivity floor " << floor;
      throw PositivityError(os.str(), v[i]);
    }
  }
}

}  // namespace

CommutingPair CommutingPair::make(const CMatrix& basis, const RVector& lambda, const RVector& mu, double floor) {
  const Index n = basis.rows();
  if (basis.cols() != n || lambda.size() != n || mu.size() != n || n < 1) {
    throw DimensionError("commuting pair: basis and spectra sizes disagree");
  }
  if (!is_unitary(basis, 1e-10)) throw PreconditionError("commuting pair: basis is not unitary to 1e-10");
  check_floor(lambda, floor, "lambda");
  check_floor(mu, floor, "mu");
  return CommutingPair(basis, lambda, mu, floor);
}

CommutingPair CommutingPair::from_matrices(const HermitianMatrix& l, const HermitianMatrix& r, double floor) {
  if (l.dim() != r.dim()) throw DimensionError("commuting pair: L and R differ in dimension");
  const CMatrix& lm = l.matrix();
  const CMatrix& rm = r.matrix();
  const double comm = operator_norm(CMatrix(lm * rm - rm * lm));
  const double bound = 1e-8 * (1.0 + operator_norm(l) * operator_norm(r));
  if (comm > bound) {
    std::ostringstream os;
    os << "L and R do not commute: ||[L,R]|| = " << comm << " > " << bound;
    throw PreconditionError(os.str());
  }
  // A generic combination separates the joint eigenspaces; the basis
  // then diagonalizes both factors.
  const double w = 0.5 * (1.0 + std::sqrt(5.0)) / std::max(1.0, operator_norm(r));
  const HermitianMatrix mix = l + w * r;
  const auto sd = spectral_decompose(mix);
  const CMatrix& u = sd.eigenvectors;
  RVector lambda = (u.adjoint() * lm * u).diagonal().real();
  RVector mu = (u.adjoint() * rm * u).diagonal().real();
  CommutingPair pair = make(u, lambda, mu, floor);
  const double err = std::max((pair.left().matrix() - lm).cwiseAbs().maxCoeff(),
                              (pair.right().matrix() - rm).cwiseAbs().maxCoeff());
  if (err > 1e-8 * (1.0 + std::max(l.max_abs(), r.max_abs()))) {
    throw PreconditionError("simultaneous diagonalization failed to reproduce L and R");
  }
  return pair;
}

HermitianMatrix CommutingPair::left() const { return HermitianMatrix::from_spectrum(basis_, lambda_); }

HermitianMatrix CommutingPair::right() const { return HermitianMatrix::from_spectrum(basis_, mu_); }

double CommutingPair::commutator_norm() const {
  const CMatrix l = left().matrix();
  const CMatrix r = right().matrix();
  return operator_norm(CMatrix(l * r - r * l));
}

CommutingPair CommutingPair::swapped() const { return CommutingPair(basis_, mu_, lambda_, floor_); }

CommutingPair CommutingPair::scaled(double c) const {
  if (!(c > 0.0)) throw PreconditionError("commuting pair: scale factor must be positive");
  return CommutingPair(basis_, c * lambda_, c * mu_, floor_);
}

MultiplicationPair::MultiplicationPair(HermitianMatrix sigma, HermitianMatrix rho, double floor)
    : sigma_(std::move(sigma)), rho_(std::move(rho)), floor_(floor) {
  if (sigma_.dim() != rho_.dim()) throw DimensionError("multiplication pair: sigma and rho differ in dimension");
  require_strictly_positive(sigma_, floor_, "sigma");
  require_strictly_positive(rho_, floor_, "rho");
}

HermitianMatrix quotient(const CommutingPair& pair) {
  return HermitianMatrix::from_spectrum(pair.basis(), pair.lambda().cwiseQuotient(pair.mu()));
}

double log_quotient_identity_check(const CommutingPair& pair) {
  const auto log = [](double x) { return std::log(x); };
  const HermitianMatrix lhs = apply_function(log, spectral_decompose(quotient(pair)));
  const HermitianMatrix log_l = apply_function(log, spectral_decompose(pair.left()));
  const HermitianMatrix log_r = apply_function(log, spectral_decompose(pair.right()));
  return operator_norm(lhs - (log_l - log_r));
}

CommutingPair realize_multiplication_pair(const MultiplicationPair& mp) {
  const Index n = mp.dim();
  const auto ss = spectral_decompose(mp.sigma());
  const auto rs = spectral_decompose(mp.rho());
  const Index big = n * n;
  CMatrix basis(big, big);
  RVector lambda(big);
  RVector mu(big);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index k = i * n + j;
      // vec(u_i v_j*) = conj(v_j) (x) u_i under column stacking.
      const CMatrix unit = ss.eigenvectors.col(i) * rs.eigenvectors.col(j).adjoint();
      basis.col(k) = vectorize(unit);
      lambda[k] = ss.eigenvalues[i];
      mu[k] = rs.eigenvalues[j];
    }
  }
  return CommutingPair::make(basis, lambda, mu, mp.floor());
}

CVector vectorize(const CMatrix& x) { return Eigen::Map<const CVector>(x.data(), x.size()); }

CMatrix unvectorize(const CVector& v, Index n) {
  if (v.size() != n * n) throw DimensionError("unvectorize: length is not n^2");
  return Eigen::Map<const CMatrix>(v.data(), n, n);
}

CMatrix apply_superop(const CMatrix& op, const CMatrix& x) {
  const Index n = x.rows();
  if (x.cols() != n || op.rows() != n * n || op.cols() != n * n) {
    throw DimensionError("apply_superop: operator is not n^2 x n^2 for an n x n argument");
  }
  return unvectorize(op * vectorize(x), n);
}

CMatrix apply_superop(const CommutingPair& pair, Side which, const CMatrix& x) {
  const HermitianMatrix op = which == Side::Left ? pair.left() : pair.right();
  return apply_superop(op.matrix(), x);
}

}  // namespace mpersp
