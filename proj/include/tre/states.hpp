// Copyright 2026 The telescope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRE_STATES_HPP
#define TRE_STATES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>

#include "tre/matfun.hpp"

namespace tre {

/// Trace tolerance for a valid state.
inline constexpr double kTraceTolerance = 1e-10;
/// tr(rho sigma) at or below this counts as orthogonal.
inline constexpr double kOrthogonalityTolerance = 1e-12;

/// A validated density matrix: Hermitian, trace one, PSD up to the rank
/// tolerance.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, RankTolerance tol = {});

  static DensityMatrix diagonal(std::span<const double> probabilities);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// Mixing parameter a and optional Renyi order p, both in [0,1].
struct TelescopeParams {
  double a = 0.5;
  std::optional<double> p;

  TelescopeParams(double a, std::optional<double> p = std::nullopt);

  bool a_at_zero() const { return a == 0.0; }
  bool a_at_one() const { return a == 1.0; }
  bool p_at_endpoint() const { return p && (*p == 0.0 || *p == 1.0); }
};

/// Reproducible random source. Identical (seed, counter) pairs give
/// bit-identical streams; Gaussians come from Box-Muller on raw mt19937_64
/// output so the stream does not depend on the standard library.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed, std::uint64_t counter = 0);

  /// Sampler for one fuzz trial: seed = master XOR trial index.
  static SeededSampler for_trial(std::uint64_t master_seed, std::uint64_t trial_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();
  double uniform();  // [0,1), 53 bits
  double uniform(double lo, double hi);
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);  // inclusive
  double gaussian();
  Complex complex_gaussian();  // E|z|^2 = 1

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

DensityMatrix pure_from_vector(const ComplexVector& v);

/// rho = |0><0| and sigma a pure qubit state whose Bloch vector makes angle
/// theta with rho's.
std::pair<DensityMatrix, DensityMatrix> qubit_pair_with_angle(double theta);

/// Qubit state (1 + x X + y Y + z Z) / 2, |(x,y,z)| <= 1.
DensityMatrix from_bloch(double x, double y, double z);

/// a rho + (1 - a) sigma.
DensityMatrix telescope_mix(const DensityMatrix& rho, const DensityMatrix& sigma, double a);

DensityMatrix haar_random_pure(Eigen::Index dim, SeededSampler& sampler);

/// G G* / tr(G G*) for a dim x rank complex Ginibre matrix G.
DensityMatrix random_mixed_hs(Eigen::Index dim, Eigen::Index rank, SeededSampler& sampler);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Matrix haar_random_unitary(Eigen::Index dim, SeededSampler& sampler);

/// Random pair with tr(rho sigma) = 0: both states live on complementary
/// blocks of a Haar-random basis.
std::pair<DensityMatrix, DensityMatrix> random_orthogonal_pair(Eigen::Index dim,
                                                               SeededSampler& sampler);

bool is_orthogonal(const DensityMatrix& rho, const DensityMatrix& sigma,
                   double tol = kOrthogonalityTolerance);

double trace_norm_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace tre

#endif  // TRE_STATES_HPP
