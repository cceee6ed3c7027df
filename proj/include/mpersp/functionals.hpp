#pragma once

#include <vector>

#include "mpersp/linalg.hpp"

namespace mpersp {

// Strictly positive weights summing to 1 within 1e-12.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> weights);

  const std::vector<double>& weights() const { return w_; }
  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

 private:
  std::vector<double> w_;
};

// Strictly positive unit-trace Hermitian matrix. The constructor
// normalizes the trace and rejects a minimum eigenvalue below `floor`.
class DensityMatrix {
 public:
  explicit DensityMatrix(const HermitianMatrix& m, double floor = kDefaultFloor);

  const HermitianMatrix& matrix() const { return m_; }
  Index dim() const { return m_.dim(); }

 private:
  HermitianMatrix m_;
};

// Componentwise f(x_i / t) t.
std::vector<double> classical_perspective(const ScalarAtom& f, const std::vector<double>& x, double t);

// H(p) = -sum p_i log p_i, in nats.
double classical_entropy(const ProbabilityVector& p);

// H(q||p) = sum p_i log p_i - p_i log q_i. Note that p sits inside the
// sum; this is the divergence of p from q in the usual notation.
double classical_relative_entropy(const ProbabilityVector& q, const ProbabilityVector& p);

// S(rho||sigma) = Trace rho log rho - rho log sigma.
double quantum_relative_entropy_direct(const DensityMatrix& rho, const DensityMatrix& sigma);

// Same quantity as <L (R/L) log(R/L)(I), I> with L(X) = sigma X and
// R(X) = X rho on the Hilbert-Schmidt space.
double quantum_relative_entropy_perspective(const DensityMatrix& rho, const DensityMatrix& sigma);

// Trace A^s K* B^{1-s} K for 0 < s < 1.
double lieb_functional(const HermitianMatrix& a, const HermitianMatrix& b, const CMatrix& k, double s,
                       double floor = kDefaultFloor);

// Trace A^q X* B^p X for p, q > 0 with p + q <= 1.
double lieb_pq_functional(const HermitianMatrix& a, const HermitianMatrix& b, const CMatrix& x, double p,
                          double q, double floor = kDefaultFloor);

// The same value through the extended perspective, using s = q and
// t = p / (1 - q).
double lieb_pq_via_marechal(const HermitianMatrix& a, const HermitianMatrix& b, const CMatrix& x, double p,
                            double q, double floor = kDefaultFloor);

// The Lieb functional through the perspective of -x^s.
double lieb_via_perspective(const HermitianMatrix& a, const HermitianMatrix& b, const CMatrix& k, double s,
                            double floor = kDefaultFloor);

}  // namespace mpersp
