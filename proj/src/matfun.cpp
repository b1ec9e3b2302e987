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

#include "tre/matfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include "tre/error.hpp"

namespace tre {

namespace {

// Below this relative gap a divided difference falls back to the derivative
// at the midpoint.
constexpr double kDividedDifferenceGap = 1e-8;

std::atomic<double> g_default_rank_factor{0x1p-52};

// Roundoff in sums and rotations of PSD matrices can push a zero eigenvalue
// a little past the rank cutoff on the negative side. Such eigenvalues are
// clamped to 0 rather than rejected unless they exceed this factor (in the
// relative-cutoff sense).
constexpr double kNegativeRoundoffFactor = 0x1p-46;

void require_square(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream os;
    os << "expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw DomainError(os.str());
  }
}

PsdSpectrum require_positive_definite(const Matrix& a, RankTolerance tol, const char* what) {
  PsdSpectrum ps = psd_decompose(a, tol);
  if (ps.rank() != a.rows()) {
    std::ostringstream os;
    os << what << ": argument has rank " << ps.rank() << " < " << a.rows()
       << "; compress to its support first";
    throw DomainError(os.str());
  }
  return ps;
}

// Daleckii-Krein: in the eigenbasis of A, multiply entrywise by the divided
// differences of f and rotate back.
template <typename G>
Matrix divided_difference_map(const SpectralDecomposition& sd, const Matrix& delta, G&& g) {
  const Matrix& u = sd.eigenvectors;
  Matrix d = u.adjoint() * delta * u;
  const Eigen::Index n = sd.dim();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) d(i, j) *= g(sd.eigenvalues(i), sd.eigenvalues(j));
  return u * d * u.adjoint();
}

}  // namespace

double RankTolerance::default_rank_factor() {
  return g_default_rank_factor.load(std::memory_order_relaxed);
}

void RankTolerance::set_default_rank_factor(double factor) {
  if (!(factor >= 0.0) || !std::isfinite(factor)) {
    throw DomainError("rank tolerance must be finite and nonnegative");
  }
  g_default_rank_factor.store(factor, std::memory_order_relaxed);
}

RankTolerance RankTolerance::absolute(double eps) {
  if (!(eps >= 0.0)) throw DomainError("rank tolerance must be nonnegative");
  return {eps, Mode::absolute};
}

RankTolerance RankTolerance::relative(double factor) {
  if (!(factor >= 0.0)) throw DomainError("rank tolerance must be nonnegative");
  return {factor, Mode::relative};
}

double RankTolerance::cutoff(const RealVector& eigenvalues) const {
  if (mode == Mode::absolute) return epsilon;
  const double scale = eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
  return epsilon * static_cast<double>(eigenvalues.size()) * scale;
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

Eigen::Index PsdSpectrum::rank() const {
  return (spectral.eigenvalues.array() > 0.0).count();
}

Matrix PsdSpectrum::support_basis() const {
  const Eigen::Index r = rank();
  // eigenvalues are ascending, so the support is the trailing block
  return spectral.eigenvectors.rightCols(r);
}

Matrix PsdSpectrum::support_projector() const {
  const Matrix v = support_basis();
  return v * v.adjoint();
}

void require_hermitian(const Matrix& h, double tol) {
  require_square(h);
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  for (Eigen::Index j = 0; j < h.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      if (std::abs(h(i, j) - std::conj(h(j, i))) > tol * scale) {
        std::ostringstream os;
        os << "matrix is not Hermitian: entries (" << i << "," << j << ") and (" << j << ","
           << i << ") differ by " << std::abs(h(i, j) - std::conj(h(j, i)));
        throw DomainError(os.str());
      }
    }
  }
}

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch(a.rows(), b.rows());
}

SpectralDecomposition spectral_decompose(const Matrix& h) {
  require_hermitian(h);
  const Matrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) throw DomainError("eigendecomposition did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

PsdSpectrum psd_decompose(const Matrix& a, RankTolerance tol) {
  PsdSpectrum ps{spectral_decompose(a), 0.0};
  RealVector& ev = ps.spectral.eigenvalues;
  ps.cutoff = tol.cutoff(ev);
  const double floor = std::max(ps.cutoff, RankTolerance::relative(kNegativeRoundoffFactor).cutoff(ev));
  if (ev(0) < -floor) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite: eigenvalue " << ev(0) << " below -" << floor;
    throw NotPsdError(os.str());
  }
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) <= ps.cutoff) ev(i) = 0.0;
  return ps;
}

Matrix matrix_function(const Matrix& h, const std::function<double(double)>& f) {
  const SpectralDecomposition sd = spectral_decompose(h);
  return sd.map([&](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
      std::ostringstream os;
      os << "matrix function undefined at eigenvalue " << x;
      throw DomainError(os.str());
    }
    return y;
  });
}

Matrix support_projector(const Matrix& a, RankTolerance tol) {
  return psd_decompose(a, tol).support_projector();
}

Matrix positive_part(const Matrix& x) {
  return spectral_decompose(x).map([](double l) { return l > 0.0 ? l : 0.0; });
}

double trace_norm(const Matrix& x) {
  return spectral_decompose(x).eigenvalues.cwiseAbs().sum();
}

double trace_norm_distance(const Matrix& rho, const Matrix& sigma) {
  require_same_dim(rho, sigma);
  const RealVector ev = spectral_decompose(rho - sigma).eigenvalues;
  double t = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.0) t += ev(i);
  return t;
}

double trace_product(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  // tr(AB) = sum_ij A_ij B_ji
  return (a.array() * b.transpose().array()).sum().real();
}

Matrix compress(const Matrix& a, const Matrix& basis) {
  return basis.adjoint() * a * basis;
}

double log_divided_difference(double x, double y) {
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  const double gap = hi - lo;
  if (gap < kDividedDifferenceGap * hi) return 2.0 / (hi + lo);
  return std::log1p(gap / lo) / gap;
}

double power_divided_difference(double x, double y, double p) {
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  const double gap = hi - lo;
  if (gap < kDividedDifferenceGap * hi) return p * std::pow((hi + lo) / 2.0, p - 1.0);
  return std::pow(lo, p) * std::expm1(p * std::log1p(gap / lo)) / gap;
}

Matrix frechet_log_map(const Matrix& a, const Matrix& delta, RankTolerance tol) {
  require_same_dim(a, delta);
  const PsdSpectrum ps = require_positive_definite(a, tol, "frechet_log_map");
  return divided_difference_map(ps.spectral, delta, log_divided_difference);
}

Matrix frechet_power_map(const Matrix& a, const Matrix& delta, double p, RankTolerance tol) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("frechet_power_map: p must lie in (0,1)");
  require_same_dim(a, delta);
  const PsdSpectrum ps = require_positive_definite(a, tol, "frechet_power_map");
  return divided_difference_map(ps.spectral, delta,
                                [p](double x, double y) { return power_divided_difference(x, y, p); });
}

}  // namespace tre
