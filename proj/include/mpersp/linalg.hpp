#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "mpersp/atoms.hpp"

namespace mpersp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kDefaultFloor = 1e-8;

// Complex square matrix equal to its conjugate transpose. Construction
// symmetrizes (M + M*)/2 and keeps the size of the discarded
// anti-Hermitian part as defect().
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const CMatrix& m);

  static HermitianMatrix identity(Index n);
  static HermitianMatrix zero(Index n);
  static HermitianMatrix diagonal(const RVector& d);
  // U diag(d) U*.
  static HermitianMatrix from_spectrum(const CMatrix& u, const RVector& d);

  Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }
  // max |M_ij - conj(M_ji)| of the input before symmetrization.
  double defect() const { return defect_; }
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }
  double trace() const { return m_.trace().real(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double c, const HermitianMatrix& a);

 private:
  HermitianMatrix(CMatrix m, double defect) : m_(std::move(m)), defect_(defect) {}

  CMatrix m_;
  double defect_ = 0.0;
};

struct SpectralDecomposition {
  RVector eigenvalues;  // ascending
  CMatrix eigenvectors;  // unitary; column k belongs to eigenvalues[k]

  CMatrix reconstruct() const;
  Index dim() const { return eigenvalues.size(); }
};

struct LoewnerVerdict {
  bool holds = false;
  double slack = 0.0;  // minimum eigenvalue of B - A
  double tolerance_used = 0.0;
};

SpectralDecomposition spectral_decompose(const HermitianMatrix& t);

// f(T) = U diag(f(lambda)) U*, with eigenvalues checked against (and
// clamped to) f's domain.
HermitianMatrix apply_scalar_function(const ScalarAtom& f, const HermitianMatrix& t);
HermitianMatrix apply_scalar_function(const ScalarAtom& f, const SpectralDecomposition& sd);

// Functional calculus for an arbitrary callable; no domain bookkeeping.
HermitianMatrix apply_function(const std::function<double(double)>& f, const SpectralDecomposition& sd);

// A <= B in Loewner order, tolerance scaled by 1 + ||B - A||.
LoewnerVerdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol);

// <X, Y> = Trace X Y*.
Complex hs_inner(const CMatrix& x, const CMatrix& y);

double min_eigenvalue(const HermitianMatrix& t);
// Spectral norm of a Hermitian matrix (max |eigenvalue|).
double operator_norm(const HermitianMatrix& t);
// Spectral norm of an arbitrary matrix.
double operator_norm(const CMatrix& m);

// Throws PositivityError when the minimum eigenvalue is below `floor`.
void require_strictly_positive(const HermitianMatrix& t, double floor, const char* what);

// Square root and inverse square root of a matrix with spectrum >= floor.
struct RootPair {
  HermitianMatrix sqrt;
  HermitianMatrix inv_sqrt;
};
RootPair positive_roots(const HermitianMatrix& t, double floor);

bool is_unitary(const CMatrix& u, double tol);

}  // namespace mpersp
