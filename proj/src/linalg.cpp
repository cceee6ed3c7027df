#include "mpersp/linalg.hpp"

#include <cmath>
#include <sstream>

#include "mpersp/error.hpp"

namespace mpersp {

HermitianMatrix::HermitianMatrix(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("Hermitian matrix must be square, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  if (m.rows() < 1) throw DimensionError("Hermitian matrix must have dim >= 1");
  const CMatrix anti = m - m.adjoint();
  defect_ = anti.cwiseAbs().maxCoeff();
  m_ = (m + m.adjoint()) / 2.0;
}

HermitianMatrix HermitianMatrix::identity(Index n) { return HermitianMatrix(CMatrix::Identity(n, n), 0.0); }

HermitianMatrix HermitianMatrix::zero(Index n) { return HermitianMatrix(CMatrix::Zero(n, n), 0.0); }

HermitianMatrix HermitianMatrix::diagonal(const RVector& d) {
  return HermitianMatrix(d.cast<Complex>().asDiagonal().toDenseMatrix(), 0.0);
}

HermitianMatrix HermitianMatrix::from_spectrum(const CMatrix& u, const RVector& d) {
  return HermitianMatrix(u * d.cast<Complex>().asDiagonal() * u.adjoint());
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("sum of Hermitian matrices with different dims");
  return HermitianMatrix(a.m_ + b.m_, 0.0);
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("difference of Hermitian matrices with different dims");
  return HermitianMatrix(a.m_ - b.m_, 0.0);
}

HermitianMatrix operator*(double c, const HermitianMatrix& a) { return HermitianMatrix(c * a.m_, 0.0); }

CMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition spectral_decompose(const HermitianMatrix& t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(t.matrix());
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigensolver did not converge (dim " << t.dim() << ", max |entry| " << t.max_abs() << ")";
    throw ConvergenceError(os.str());
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

HermitianMatrix apply_function(const std::function<double(double)>& f, const SpectralDecomposition& sd) {
  RVector fx(sd.dim());
  for (Index i = 0; i < sd.dim(); ++i) fx[i] = f(sd.eigenvalues[i]);
  return HermitianMatrix::from_spectrum(sd.eigenvectors, fx);
}

HermitianMatrix apply_scalar_function(const ScalarAtom& f, const SpectralDecomposition& sd) {
  RVector fx(sd.dim());
  for (Index i = 0; i < sd.dim(); ++i) {
    const double x = sd.eigenvalues[i];
    if (!f.domain.contains(x)) {
      std::ostringstream os;
      os << f.label() << ": eigenvalue " << x << " outside domain " << f.domain.describe();
      throw DomainError(os.str(), x);
    }
    fx[i] = f.value_at(f.domain.clamp(x));
  }
  return HermitianMatrix::from_spectrum(sd.eigenvectors, fx);
}

HermitianMatrix apply_scalar_function(const ScalarAtom& f, const HermitianMatrix& t) {
  return apply_scalar_function(f, spectral_decompose(t));
}

double min_eigenvalue(const HermitianMatrix& t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(t.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()[0];
}

double operator_norm(const HermitianMatrix& t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(t.matrix(), Eigen::EigenvaluesOnly);
  const RVector& ev = solver.eigenvalues();
  return std::max(std::abs(ev[0]), std::abs(ev[ev.size() - 1]));
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()[0];
}

LoewnerVerdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  if (a.dim() != b.dim()) {
    throw DimensionError("loewner_leq: dims " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  if (!(tol >= 0.0)) throw PreconditionError("loewner_leq: tolerance must be >= 0");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((b - a).matrix(), Eigen::EigenvaluesOnly);
  const RVector& ev = solver.eigenvalues();
  const double norm = std::max(std::abs(ev[0]), std::abs(ev[ev.size() - 1]));
  LoewnerVerdict v;
  v.slack = ev[0];
  v.tolerance_used = tol * (1.0 + norm);
  v.holds = v.slack >= -v.tolerance_used;
  return v;
}

Complex hs_inner(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionError("hs_inner: dimension mismatch");
  return (x.array() * y.conjugate().array()).sum();
}

void require_strictly_positive(const HermitianMatrix& t, double floor, const char* what) {
  const double lo = min_eigenvalue(t);
  if (!(lo >= floor)) {
    std::ostringstream os;
    os << what << ": minimum eigenvalue " << lo << " below positivity floor " << floor;
    throw PositivityError(os.str(), lo);
  }
}

RootPair positive_roots(const HermitianMatrix& t, double floor) {
  const auto sd = spectral_decompose(t);
  if (!(sd.eigenvalues[0] >= floor)) {
    std::ostringstream os;
    os << "matrix not invertible at floor " << floor << ": minimum eigenvalue " << sd.eigenvalues[0];
    throw PositivityError(os.str(), sd.eigenvalues[0]);
  }
  RVector r = sd.eigenvalues.cwiseSqrt();
  RVector ir = r.cwiseInverse();
  return {HermitianMatrix::from_spectrum(sd.eigenvectors, r), HermitianMatrix::from_spectrum(sd.eigenvectors, ir)};
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const CMatrix d = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace mpersp
