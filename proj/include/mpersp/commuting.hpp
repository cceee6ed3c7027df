#pragma once

#include "mpersp/linalg.hpp"

namespace mpersp {

// Two strictly positive matrices L = U diag(lambda) U*, R = U diag(mu) U*
// sharing the joint eigenbasis U. Storing the basis makes [L, R] = 0 hold
// by construction.
class CommutingPair {
 public:
  // Throws PreconditionError for a non-unitary basis and PositivityError
  // for eigenvalues below `floor`.
  static CommutingPair make(const CMatrix& basis, const RVector& lambda, const RVector& mu,
                            double floor = kDefaultFloor);

  // Diagnostic entry point for two raw matrices: simultaneously
  // diagonalizes them and rejects pairs with
  // ||LR - RL|| > 1e-8 (1 + ||L|| ||R||).
  static CommutingPair from_matrices(const HermitianMatrix& l, const HermitianMatrix& r,
                                     double floor = kDefaultFloor);

  Index dim() const { return lambda_.size(); }
  const CMatrix& basis() const { return basis_; }
  const RVector& lambda() const { return lambda_; }
  const RVector& mu() const { return mu_; }
  double floor() const { return floor_; }

  HermitianMatrix left() const;
  HermitianMatrix right() const;
  double commutator_norm() const;
  // Exchanges the roles of L and R.
  CommutingPair swapped() const;
  // Spectra scaled by c > 0.
  CommutingPair scaled(double c) const;

 private:
  CommutingPair(CMatrix basis, RVector lambda, RVector mu, double floor)
      : basis_(std::move(basis)), lambda_(std::move(lambda)), mu_(std::move(mu)), floor_(floor) {}

  CMatrix basis_;
  RVector lambda_;
  RVector mu_;
  double floor_;
};

// sigma and rho inducing L(X) = sigma X and R(X) = X rho on M_n.
class MultiplicationPair {
 public:
  MultiplicationPair(HermitianMatrix sigma, HermitianMatrix rho, double floor = kDefaultFloor);

  const HermitianMatrix& sigma() const { return sigma_; }
  const HermitianMatrix& rho() const { return rho_; }
  Index dim() const { return sigma_.dim(); }
  double floor() const { return floor_; }

 private:
  HermitianMatrix sigma_;
  HermitianMatrix rho_;
  double floor_;
};

enum class Side { Left, Right };

// U diag(lambda_i / mu_i) U*.
HermitianMatrix quotient(const CommutingPair& pair);

// ||log(L/R) - (log L - log R)|| in operator norm.
double log_quotient_identity_check(const CommutingPair& pair);

// Superoperator pair on the n^2-dimensional Hilbert-Schmidt space.
// Vectorization stacks columns, so X -> sigma X is I (x) sigma and
// X -> X rho is rho^T (x) I. Joint eigenvector k = i*n + j is vec(u_i v_j*)
// with lambda_k = s_i and mu_k = r_j.
CommutingPair realize_multiplication_pair(const MultiplicationPair& mp);

// Column-stacking vec and its inverse.
CVector vectorize(const CMatrix& x);
CMatrix unvectorize(const CVector& v, Index n);

// Applies an N x N superoperator (N = n^2) to an n x n matrix.
CMatrix apply_superop(const CMatrix& op, const CMatrix& x);
// Left (sigma X) or right (X rho) action of a realized pair.
CMatrix apply_superop(const CommutingPair& pair, Side which, const CMatrix& x);

}  // namespace mpersp
