#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "mpersp/commuting.hpp"
#include "mpersp/functionals.hpp"

namespace mpersp {

using Rng = std::mt19937_64;

// Stable per-trial seed: splitmix64 chain over the campaign seed, the
// FNV-1a hash of the theorem tag, the trial index and the redraw index.
std::uint64_t derive_seed(std::uint64_t campaign_seed, std::string_view tag, std::uint64_t trial_index,
                          std::uint64_t redraw = 0);

// Entries with independent standard normal real and imaginary parts.
CMatrix random_gaussian(Index rows, Index cols, Rng& rng);
// Haar-distributed unitary (QR of a Gaussian matrix with phase correction).
CMatrix random_unitary(Index n, Rng& rng);
// n values log-uniform on [lo, hi].
RVector log_uniform_spectrum(Index n, double lo, double hi, Rng& rng);

// G G* + floor I normalized to unit trace, G standard complex Gaussian.
DensityMatrix random_density(Index n, Rng& rng, double floor = kDefaultFloor);
DensityMatrix random_density(Index n, std::uint64_t seed, double floor = kDefaultFloor);

// Two m x n blocks.
struct BlockPair {
  CMatrix a;
  CMatrix b;

  // A*A + B*B.
  CMatrix gram() const { return a.adjoint() * a + b.adjoint() * b; }
  BlockPair scaled(double factor) const { return {factor * a, factor * b}; }
};

// Top and bottom halves of an orthonormalized 2m x n Gaussian matrix, so
// A*A + B*B = I_n. Requires 2m >= n.
BlockPair random_isometry_pair(Index m, Index n, Rng& rng);
BlockPair random_isometry_pair(Index m, Index n, std::uint64_t seed);
// Isometry pair times a factor drawn uniformly from (0, shrink].
BlockPair random_contraction_pair(Index m, Index n, Rng& rng, double shrink = 1.0);
BlockPair random_contraction_pair(Index m, Index n, std::uint64_t seed, double shrink = 1.0);

// U diag(d) U* with U Haar and d log-uniform on [floor, 10].
HermitianMatrix random_positive(Index n, Rng& rng, double floor = kDefaultFloor);
// Hermitian matrix whose spectrum lies inside `domain`: log-uniform on
// [floor, 10] for half-lines at 0, uniform on [-5, 5] otherwise.
HermitianMatrix random_hermitian_in(const Interval& domain, Index n, Rng& rng, double floor = kDefaultFloor);
// One random unitary, two independent spectra log-uniform on [floor, 10].
CommutingPair random_commuting_pair(Index n, Rng& rng, double floor = kDefaultFloor);
// Strictly positive weights from normalized exponentials.
ProbabilityVector random_probability(std::size_t n, Rng& rng);

}  // namespace mpersp
