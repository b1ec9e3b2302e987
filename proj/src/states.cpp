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

#include "tre/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tre/error.hpp"

namespace tre {

DensityMatrix::DensityMatrix(Matrix m, RankTolerance tol) {
  require_hermitian(m);
  m_ = (m + m.adjoint()) / 2.0;
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream os;
    os << "density matrix must have unit trace, got " << tr;
    throw DomainError(os.str());
  }
  psd_decompose(m_, tol);  // throws NotPsdError
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(probabilities.size()),
                          static_cast<Eigen::Index>(probabilities.size()));
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    m(k, k) = probabilities[i];
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  if (dim < 1) throw DomainError("dimension must be positive");
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

TelescopeParams::TelescopeParams(double a_, std::optional<double> p_) : a(a_), p(p_) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("mixing parameter a must lie in [0,1]");
  if (p && !(*p >= 0.0 && *p <= 1.0)) throw DomainError("Renyi order p must lie in [0,1]");
}

SeededSampler::SeededSampler(std::uint64_t seed, std::uint64_t counter)
    : seed_(seed), engine_(seed) {
  for (std::uint64_t i = 0; i < counter; ++i) next_u64();
}

SeededSampler SeededSampler::for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
  return SeededSampler(master_seed ^ trial_index);
}

std::uint64_t SeededSampler::next_u64() {
  ++counter_;
  return engine_();
}

double SeededSampler::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1p-53;
}

double SeededSampler::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t SeededSampler::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw DomainError("uniform_int: empty range");
  const std::uint64_t span = hi - lo + 1;
  return span == 0 ? next_u64() : lo + next_u64() % span;
}

double SeededSampler::gaussian() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();  // (0,1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  return r * std::cos(phi);
}

Complex SeededSampler::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

DensityMatrix pure_from_vector(const ComplexVector& v) {
  const double norm2 = v.squaredNorm();
  if (v.size() == 0 || !(norm2 > 0.0)) throw DomainError("pure state needs a nonzero vector");
  return DensityMatrix(v * v.adjoint() / norm2);
}

std::pair<DensityMatrix, DensityMatrix> qubit_pair_with_angle(double theta) {
  ComplexVector zero(2), psi(2);
  zero << 1.0, 0.0;
  psi << std::cos(theta / 2.0), std::sin(theta / 2.0);
  return {pure_from_vector(zero), pure_from_vector(psi)};
}

DensityMatrix from_bloch(double x, double y, double z) {
  const double r2 = x * x + y * y + z * z;
  if (r2 > 1.0 + 1e-12) throw DomainError("Bloch vector must have length at most 1");
  Matrix m(2, 2);
  m << Complex(1.0 + z, 0.0), Complex(x, -y), Complex(x, y), Complex(1.0 - z, 0.0);
  return DensityMatrix(m / 2.0);
}

DensityMatrix telescope_mix(const DensityMatrix& rho, const DensityMatrix& sigma, double a) {
  require_same_dim(rho.matrix(), sigma.matrix());
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("telescope_mix: a must lie in [0,1]");
  if (a == 1.0) return rho;
  if (a == 0.0) return sigma;
  return DensityMatrix(a * rho.matrix() + (1.0 - a) * sigma.matrix());
}

DensityMatrix haar_random_pure(Eigen::Index dim, SeededSampler& sampler) {
  if (dim < 1) throw DomainError("dimension must be positive");
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = sampler.complex_gaussian();
  return pure_from_vector(v);
}

DensityMatrix random_mixed_hs(Eigen::Index dim, Eigen::Index rank, SeededSampler& sampler) {
  if (dim < 1) throw DomainError("dimension must be positive");
  if (rank < 1 || rank > dim) throw DomainError("random_mixed_hs: rank must lie in [1, dim]");
  Matrix g(dim, rank);
  for (Eigen::Index j = 0; j < rank; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = sampler.complex_gaussian();
  const Matrix w = g * g.adjoint();
  return DensityMatrix(w / w.trace().real());
}

Matrix haar_random_unitary(Eigen::Index dim, SeededSampler& sampler) {
  Matrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = sampler.complex_gaussian();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

std::pair<DensityMatrix, DensityMatrix> random_orthogonal_pair(Eigen::Index dim,
                                                               SeededSampler& sampler) {
  if (dim < 2) throw DomainError("orthogonal pairs need dimension at least 2");
  const Matrix u = haar_random_unitary(dim, sampler);
  const auto k = static_cast<Eigen::Index>(sampler.uniform_int(1, static_cast<std::uint64_t>(dim - 1)));
  const auto block_state = [&](Eigen::Index n) {
    const auto r = static_cast<Eigen::Index>(sampler.uniform_int(1, static_cast<std::uint64_t>(n)));
    return random_mixed_hs(n, r, sampler).matrix();
  };
  const Matrix a = block_state(k);
  const Matrix b = block_state(dim - k);
  const Matrix rho = u.leftCols(k) * a * u.leftCols(k).adjoint();
  const Matrix sigma = u.rightCols(dim - k) * b * u.rightCols(dim - k).adjoint();
  return {DensityMatrix(rho), DensityMatrix(sigma)};
}

bool is_orthogonal(const DensityMatrix& rho, const DensityMatrix& sigma, double tol) {
  return trace_product(rho.matrix(), sigma.matrix()) <= tol;
}

double trace_norm_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_norm_distance(rho.matrix(), sigma.matrix());
}

}  // namespace tre
