#include "mpersp/random.hpp"

#include <cmath>

#include "mpersp/error.hpp"

namespace mpersp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace

std::uint64_t derive_seed(std::uint64_t campaign_seed, std::string_view tag, std::uint64_t trial_index,
                          std::uint64_t redraw) {
  std::uint64_t h = splitmix64(campaign_seed);
  h = splitmix64(h ^ fnv1a(tag));
  h = splitmix64(h ^ trial_index);
  return splitmix64(h ^ redraw);
}

CMatrix random_gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  // Fill row by row so the stream order does not depend on storage order.
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

CMatrix random_unitary(Index n, Rng& rng) {
  const CMatrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

RVector log_uniform_spectrum(Index n, double lo, double hi, Rng& rng) {
  if (!(lo > 0.0 && hi >= lo)) throw PreconditionError("log-uniform spectrum needs 0 < lo <= hi");
  const double a = std::log(lo);
  const double b = std::log(hi);
  RVector d(n);
  for (Index i = 0; i < n; ++i) d[i] = std::exp(a + (b - a) * uniform01(rng));
  return d;
}

DensityMatrix random_density(Index n, Rng& rng, double floor) {
  if (n < 1) throw DimensionError("random_density: n must be >= 1");
  const CMatrix g = random_gaussian(n, n, rng);
  CMatrix w = g * g.adjoint();
  w += floor * CMatrix::Identity(n, n);
  const HermitianMatrix h(w);
  // Positivity at floor / trace is guaranteed by the shift.
  return DensityMatrix(h, floor / h.trace() * (1.0 - 1e-6));
}

DensityMatrix random_density(Index n, std::uint64_t seed, double floor) {
  Rng rng(seed);
  return random_density(n, rng, floor);
}

BlockPair random_isometry_pair(Index m, Index n, Rng& rng) {
  if (m < 1 || n < 1) throw DimensionError("isometry pair: dimensions must be >= 1");
  if (2 * m < n) throw PreconditionError("isometry pair: no 2m x n isometry exists when 2m < n");
  const CMatrix g = random_gaussian(2 * m, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(2 * m, n);
  return {q.topRows(m), q.bottomRows(m)};
}

BlockPair random_isometry_pair(Index m, Index n, std::uint64_t seed) {
  Rng rng(seed);
  return random_isometry_pair(m, n, rng);
}

BlockPair random_contraction_pair(Index m, Index n, Rng& rng, double shrink) {
  if (!(shrink > 0.0 && shrink <= 1.0)) throw PreconditionError("contraction pair: shrink must lie in (0, 1]");
  BlockPair iso = random_isometry_pair(m, n, rng);
  const double factor = shrink * (1.0 - uniform01(rng));
  return iso.scaled(factor);
}

BlockPair random_contraction_pair(Index m, Index n, std::uint64_t seed, double shrink) {
  Rng rng(seed);
  return random_contraction_pair(m, n, rng, shrink);
}

HermitianMatrix random_positive(Index n, Rng& rng, double floor) {
  const CMatrix u = random_unitary(n, rng);
  return HermitianMatrix::from_spectrum(u, log_uniform_spectrum(n, floor, 10.0, rng));
}

HermitianMatrix random_hermitian_in(const Interval& domain, Index n, Rng& rng, double floor) {
  if (domain.lo == 0.0 && std::isinf(domain.hi)) return random_positive(n, rng, floor);
  if (!std::isinf(domain.lo) || !std::isinf(domain.hi)) {
    throw PreconditionError("random_hermitian_in: unsupported domain " + domain.describe());
  }
  const CMatrix u = random_unitary(n, rng);
  RVector d(n);
  for (Index i = 0; i < n; ++i) d[i] = -5.0 + 10.0 * uniform01(rng);
  return HermitianMatrix::from_spectrum(u, d);
}

CommutingPair random_commuting_pair(Index n, Rng& rng, double floor) {
  const CMatrix u = random_unitary(n, rng);
  RVector lambda = log_uniform_spectrum(n, floor, 10.0, rng);
  RVector mu = log_uniform_spectrum(n, floor, 10.0, rng);
  return CommutingPair::make(u, lambda, mu, floor);
}

ProbabilityVector random_probability(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = expo(rng) + 1e-12;
    total += x;
  }
  for (double& x : w) x /= total;
  // Put the rounding residue on the largest weight.
  double sum = 0.0;
  std::size_t big = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += w[i];
    if (w[i] > w[big]) big = i;
  }
  w[big] += 1.0 - sum;
  return ProbabilityVector(std::move(w));
}

}  // namespace mpersp
