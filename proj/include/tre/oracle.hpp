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

#ifndef TRE_ORACLE_HPP
#define TRE_ORACLE_HPP

// Independent numerical oracles. Everything here is computed from resolvents
// (A + s)^{-1} obtained by Cholesky solves and integrated with Gauss-Legendre
// rules on a transformed axis; no eigendecomposition enters an integrand.
// The spectral implementations in matfun/entropy/renyi are checked against
// these.

#include <vector>

#include "tre/states.hpp"

namespace tre::oracle {

inline constexpr int kDefaultNodes = 501;
inline constexpr int kQuickNodes = 201;
inline constexpr int kMinimumNodes = 16;

/// Gauss-Legendre nodes and weights on (0,1). Also returns 1 - u for each
/// node, computed without cancellation.
struct GaussLegendre {
  std::vector<double> u;
  std::vector<double> one_minus_u;
  std::vector<double> w;

  static GaussLegendre on_unit_interval(int n);
};

/// Quadrature for integrals over s in (0, inf): sum_k weight_k f(node_k).
class QuadratureScheme {
 public:
  /// s = u / (1 - u) with Gauss-Legendre u on (0,1).
  static QuadratureScheme rational(int n = kDefaultNodes);

  /// s = exp(y), y uniform-mapped Gauss-Legendre on [log lo, log hi].
  static QuadratureScheme log_window(int n, double lo, double hi);

  /// Log window sized so that an integrand whose mass (in log s) decays like
  /// s^decay_below as s -> 0 and s^-decay_above as s -> inf loses less than
  /// `tail` relative mass outside the window, given a spectrum in [lo, hi].
  static QuadratureScheme log_window_for_decay(int n, double lo, double hi, double decay_below,
                                               double decay_above, double tail = 1e-10);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  QuadratureScheme(std::vector<double> s, std::vector<double> w);
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Window for the projector integral on density matrices: [1e-10, 1e8].
QuadratureScheme projector_scheme(int n = kDefaultNodes);

/// Window adapted to x^p on [x_lo, x_hi].
QuadratureScheme power_scheme(double p, double x_lo, double x_hi, int n = kDefaultNodes);

/// Bounds lambda_min >= 1/||A^{-1}||_F and lambda_max <= ||A||_F for a
/// positive definite A, from a Cholesky factorisation.
struct SpectralBounds {
  double lo;
  double hi;
};
SpectralBounds spectral_bounds(const Matrix& a);

/// log x = int (1/(1+s) - 1/(x+s)) ds.
double quad_log(double x, const QuadratureScheme& scheme);

/// T_A(Delta) = int (A+s)^{-1} Delta (A+s)^{-1} ds, A positive definite.
Matrix quad_frechet_log(const Matrix& a, const Matrix& delta, const QuadratureScheme& scheme);

/// int (rho+s)^{-1} rho (rho+s)^{-1} ds = {rho}.
Matrix quad_projector_integral(const Matrix& rho, const QuadratureScheme& scheme);

/// S_a from (1/log a) int tr rho (rho+s)^{-1} (1-a)(sigma-rho) (tau+s)^{-1} ds
/// on supp(rho + sigma).
double quad_tre(const DensityMatrix& rho, const DensityMatrix& sigma, double a,
                const QuadratureScheme& scheme);
/// As above with a window adapted to the compressed tau.
double quad_tre(const DensityMatrix& rho, const DensityMatrix& sigma, double a,
                int n = kDefaultNodes);

/// x^p = (sin(p pi)/pi) int s^{p-1} x/(x+s) ds.
double quad_power(double x, double p, const QuadratureScheme& scheme);
/// Log window [x/1e3, 1e3 x] with series for both tails.
double quad_power(double x, double p, int n = kDefaultNodes);

/// T_{A;p}(Delta) = (sin(p pi)/pi) int s^p (A+s)^{-1} Delta (A+s)^{-1} ds.
Matrix quad_frechet_power(const Matrix& a, const Matrix& delta, double p,
                          const QuadratureScheme& scheme);
/// Log window up to 1e3 ||A|| plus a series for the slowly decaying tail.
Matrix quad_frechet_power(const Matrix& a, const Matrix& delta, double p,
                          int n = kDefaultNodes);

enum class FrechetKind { log, power };

/// (f(A + h Delta) - f(A - h Delta)) / (2h), f = log or x^p.
Matrix finite_diff_frechet(FrechetKind kind, const Matrix& a, const Matrix& delta, double h,
                           double p = 0.5);

}  // namespace tre::oracle

#endif  // TRE_ORACLE_HPP
