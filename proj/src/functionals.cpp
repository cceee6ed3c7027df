#include "mpersp/functionals.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "mpersp/commuting.hpp"
#include "mpersp/error.hpp"
#include "mpersp/perspective.hpp"

namespace mpersp {

ProbabilityVector::ProbabilityVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw PreconditionError("probability vector is empty");
  for (double w : w_) {
    if (!(w > 0.0)) throw DomainError("probability weights must be strictly positive", w);
  }
  const double total = std::accumulate(w_.begin(), w_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "probability weights sum to " << total << ", not 1";
    throw PreconditionError(os.str());
  }
}

DensityMatrix::DensityMatrix(const HermitianMatrix& m, double floor) : m_(m) {
  const double tr = m.trace();
  if (!(tr > 0.0)) throw PositivityError("density matrix has non-positive trace", tr);
  m_ = (1.0 / tr) * m;
  require_strictly_positive(m_, floor, "density matrix");
}

std::vector<double> classical_perspective(const ScalarAtom& f, const std::vector<double>& x, double t) {
  if (!(t > 0.0)) throw DomainError("classical perspective needs t > 0", t);
  std::vector<double> out;
  out.reserve(x.size());
  for (double xi : x) out.push_back(eval_atom(f, xi / t) * t);
  return out;
}

double classical_entropy(const ProbabilityVector& p) {
  double h = 0.0;
  for (double w : p.weights()) h -= w * std::log(w);
  return h;
}

double classical_relative_entropy(const ProbabilityVector& q, const ProbabilityVector& p) {
  if (q.size() != p.size()) throw DimensionError("relative entropy: lengths differ");
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) h += p[i] * std::log(p[i]) - p[i] * std::log(q[i]);
  return h;
}

namespace {

HermitianMatrix log_of(const HermitianMatrix& m) {
  return apply_function([](double x) { return std::log(x); }, spectral_decompose(m));
}

HermitianMatrix power_of(const HermitianMatrix& m, double e) {
  return apply_function([e](double x) { return std::pow(x, e); }, spectral_decompose(m));
}

double real_trace(const CMatrix& m, const char* what) {
  const Complex tr = m.trace();
  const double scale = 1.0 + m.cwiseAbs().sum();
  if (std::abs(tr.imag()) > 1e-12 * scale) {
    std::ostringstream os;
    os << what << ": trace has imaginary residue " << tr.imag();
    throw Error(os.str());
  }
  return tr.real();
}

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b, const CMatrix& k) {
  if (a.dim() != b.dim() || k.rows() != a.dim() || k.cols() != a.dim()) {
    throw DimensionError("trace functional: A, B and K must share one dimension");
  }
}

}  // namespace

double quantum_relative_entropy_direct(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("relative entropy: rho and sigma differ in dimension");
  const CMatrix& r = rho.matrix().matrix();
  const CMatrix diff = log_of(rho.matrix()).matrix() - log_of(sigma.matrix()).matrix();
  return real_trace(CMatrix(r * diff), "relative entropy");
}

double quantum_relative_entropy_perspective(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("relative entropy: rho and sigma differ in dimension");
  const Index n = rho.dim();
  const MultiplicationPair mp(sigma.matrix(), rho.matrix(), 0.0);
  // L (R/L) log(R/L): the quotient is R/L and the outer factor is L, so
  // this is the perspective of x log x on the pair with roles exchanged.
  const CommutingPair big = realize_multiplication_pair(mp).swapped();
  const HermitianMatrix g = perspective_eigen(lookup_atom("xlogx"), big);
  const CMatrix id = CMatrix::Identity(n, n);
  const Complex v = hs_inner(apply_superop(g.matrix(), id), id);
  return v.real();
}

double lieb_functional(const HermitianMatrix& a, const HermitianMatrix& b, const CMatrix& k, double s,
                       double floor) {
  if (!(s > 0.0 && s < 1.0)) throw PreconditionError("Lieb functional needs 0 < s < 1");
  require_same_dim(a, b, k);
  require_strictly_positive(a, floor, "A");
  require_strictly_positive(b, floor, "B");
  const CMatrix prod = power_of(a, s).matrix() * k.adjoint() * power_of(b, 1.0 - s).matrix() * k;
  return real_trace(prod, "Lieb functional");
}

double lieb_pq_functional(const HermitianMatrix& a, const HermitianMatrix& b, const CMatrix& x, double p, double q,
                          double floor) {
  if (!(p > 0.0 && q > 0.0 && p + q <= 1.0)) throw PreconditionError("Lieb p,q functional needs p, q > 0, p + q <= 1");
  require_same_dim(a, b, x);
  require_strictly_positive(a, floor, "A");
  require_strictly_positive(b, floor, "B");
  const CMatrix prod = power_of(a, q).matrix() * x.adjoint() * power_of(b, p).matrix() * x;
  return real_trace(prod, "Lieb p,q functional");
}

double lieb_via_perspective(const HermitianMatrix& a, const HermitianMatrix& b, const CMatrix& k, double s,
                            double floor) {
  if (!(s > 0.0 && s < 1.0)) throw PreconditionError("Lieb functional needs 0 < s < 1");
  require_same_dim(a, b, k);
  const MultiplicationPair mp(a, b, floor);
  return -perspective_quadratic_form(lookup_atom("neg_power", s), mp, k);
}

double lieb_pq_via_marechal(const HermitianMatrix& a, const HermitianMatrix& b, const CMatrix& x, double p, double q,
                            double floor) {
  if (!(p > 0.0 && q > 0.0 && p + q <= 1.0)) throw PreconditionError("Lieb p,q functional needs p, q > 0, p + q <= 1");
  require_same_dim(a, b, x);
  // p = (1 - s) t with s = q; p > 0 forces q < 1, so t is defined.
  const double t = std::min(1.0, p / (1.0 - q));
  const MultiplicationPair mp(a, b, floor);
  return -marechal_quadratic_form(lookup_atom("neg_power", q), lookup_atom("power", t), mp, x);
}

}  // namespace mpersp
