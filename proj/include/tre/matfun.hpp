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

#ifndef TRE_MATFUN_HPP
#define TRE_MATFUN_HPP

// Spectral calculus for small dense Hermitian matrices: matrix functions,
// support projectors, positive parts, the trace norm, and the Frechet
// derivatives of log and x^p in divided-difference (Daleckii-Krein) form.
//
// All functions are pure and thread-safe.

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace tre {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute Hermiticity tolerance, scaled by max(1, max |H_ij|).
inline constexpr double kHermitianTolerance = 1e-10;

/// Numerical-rank cutoff used to separate supp X from ker X.
///
/// In relative mode the cutoff is epsilon * dim * lambda_max (default
/// epsilon = 2^-52, the usual numerical-rank convention); in absolute mode
/// it is epsilon itself. A default-constructed tolerance takes its factor
/// from default_rank_factor().
struct RankTolerance {
  enum class Mode { absolute, relative };

  /// Factor used by default-constructed tolerances. Set it once at startup,
  /// before any computation runs; it is not meant to change mid-flight.
  static double default_rank_factor();
  static void set_default_rank_factor(double factor);

  double epsilon = default_rank_factor();
  Mode mode = Mode::relative;

  static RankTolerance absolute(double eps);
  static RankTolerance relative(double factor);

  /// Cutoff for a spectrum (ascending or not).
  double cutoff(const RealVector& eigenvalues) const;
};

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns

  Eigen::Index dim() const { return eigenvalues.size(); }
  Matrix reconstruct() const;

  /// U diag(f(lambda)) U*.
  template <typename F>
  Matrix map(F&& f) const {
    RealVector fl(dim());
    for (Eigen::Index i = 0; i < dim(); ++i) fl(i) = f(eigenvalues(i));
    return eigenvectors * fl.asDiagonal() * eigenvectors.adjoint();
  }
};

/// Spectrum of a PSD matrix after applying the rank tolerance: eigenvalues
/// at or below the cutoff are set to exactly 0. Negative eigenvalues are
/// rejected once they exceed both the cutoff and 64 dim 2^-52 lambda_max in
/// magnitude.
struct PsdSpectrum {
  SpectralDecomposition spectral;
  double cutoff = 0.0;

  Eigen::Index rank() const;
  /// Columns of U spanning the support (eigenvalues > 0 after clamping).
  Matrix support_basis() const;
  Matrix support_projector() const;
};

/// Throws DomainError naming the first entry pair (i,j) with
/// |H_ij - conj(H_ji)| above tolerance.
void require_hermitian(const Matrix& h, double tol = kHermitianTolerance);

void require_same_dim(const Matrix& a, const Matrix& b);

SpectralDecomposition spectral_decompose(const Matrix& h);

PsdSpectrum psd_decompose(const Matrix& a, RankTolerance tol = {});

/// U diag(f(lambda)) U*; DomainError if f is not finite at some eigenvalue.
Matrix matrix_function(const Matrix& h, const std::function<double(double)>& f);

/// {A}: orthogonal projector onto supp A.
Matrix support_projector(const Matrix& a, RankTolerance tol = {});

/// X_+ = (X + |X|) / 2.
Matrix positive_part(const Matrix& x);

/// Sum of absolute eigenvalues.
double trace_norm(const Matrix& x);

/// T(rho, sigma) = tr (rho - sigma)_+.
double trace_norm_distance(const Matrix& rho, const Matrix& sigma);

/// Re tr(A B) without forming the product.
double trace_product(const Matrix& a, const Matrix& b);

/// V* A V, the compression of A onto the span of the columns of V.
Matrix compress(const Matrix& a, const Matrix& basis);

/// T_A(Delta) = d/dt log(A + t Delta) at t = 0. A must be positive definite;
/// rank-deficient arguments should be compressed to their support first.
Matrix frechet_log_map(const Matrix& a, const Matrix& delta, RankTolerance tol = {});

/// T_{A;p}(Delta) = d/dt (A + t Delta)^p at t = 0, 0 < p < 1.
Matrix frechet_power_map(const Matrix& a, const Matrix& delta, double p,
                         RankTolerance tol = {});

/// First divided differences of log and x^p, accurate for nearby x, y.
double log_divided_difference(double x, double y);
double power_divided_difference(double x, double y, double p);

}  // namespace tre

#endif  // TRE_MATFUN_HPP
