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

#include "tre/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tre/error.hpp"

namespace tre::oracle {

namespace {

void require_node_count(int n) {
  if (n < kMinimumNodes) {
    std::ostringstream os;
    os << "quadrature needs at least " << kMinimumNodes << " nodes, got " << n;
    throw DomainError(os.str());
  }
}

// (A + s)^{-1} by Cholesky; throws if A + s is not positive definite.
Matrix resolvent(const Matrix& a, double s) {
  const Eigen::Index n = a.rows();
  const Matrix shifted = a + s * Matrix::Identity(n, n);
  Eigen::LLT<Matrix> llt(shifted);
  if (llt.info() != Eigen::Success) {
    std::ostringstream os;
    os << "resolvent: A + " << s << " is not positive definite";
    throw DomainError(os.str());
  }
  return llt.solve(Matrix::Identity(n, n));
}

void require_square_hermitian(const Matrix& a) {
  require_hermitian(a);
}

}  // namespace

GaussLegendre GaussLegendre::on_unit_interval(int n) {
  require_node_count(n);
  GaussLegendre gl;
  gl.u.resize(n);
  gl.one_minus_u.resize(n);
  gl.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_n from the Tricomi initial guess
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute the derivative at the converged root
    {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
    }
    // z > 0 here; weights on [-1,1] halve on (0,1)
    const double weight = 1.0 / ((1.0 - z * z) * dp * dp);
    const int hi = n - 1 - i;
    gl.u[hi] = (1.0 + z) / 2.0;
    gl.one_minus_u[hi] = (1.0 - z) / 2.0;
    gl.w[hi] = weight;
    gl.u[i] = (1.0 - z) / 2.0;
    gl.one_minus_u[i] = (1.0 + z) / 2.0;
    gl.w[i] = weight;
  }
  return gl;
}

QuadratureScheme::QuadratureScheme(std::vector<double> s, std::vector<double> w)
    : nodes_(std::move(s)), weights_(std::move(w)) {}

QuadratureScheme QuadratureScheme::rational(int n) {
  const GaussLegendre gl = GaussLegendre::on_unit_interval(n);
  std::vector<double> s(n), w(n);
  for (int k = 0; k < n; ++k) {
    const double v = gl.one_minus_u[k];
    s[k] = gl.u[k] / v;
    w[k] = gl.w[k] / (v * v);
  }
  return {std::move(s), std::move(w)};
}

QuadratureScheme QuadratureScheme::log_window(int n, double lo, double hi) {
  if (!(lo > 0.0 && hi > lo)) throw DomainError("log_window: need 0 < lo < hi");
  const GaussLegendre gl = GaussLegendre::on_unit_interval(n);
  const double ylo = std::log(lo);
  const double width = std::log(hi) - ylo;
  std::vector<double> s(n), w(n);
  for (int k = 0; k < n; ++k) {
    s[k] = std::exp(ylo + width * gl.u[k]);
    w[k] = gl.w[k] * width * s[k];
  }
  return {std::move(s), std::move(w)};
}

QuadratureScheme QuadratureScheme::log_window_for_decay(int n, double lo, double hi,
                                                        double decay_below, double decay_above,
                                                        double tail) {
  if (!(decay_below > 0.0 && decay_above > 0.0 && tail > 0.0))
    throw DomainError("log_window_for_decay: decay rates and tail must be positive");
  const double below = std::log(1.0 / (tail * decay_below)) / decay_below;
  const double above = std::log(1.0 / (tail * decay_above)) / decay_above;
  const double wlo = lo * std::exp(-below);
  const double whi = hi * std::exp(above);
  if (!(wlo > 0.0) || !std::isfinite(whi))
    throw DomainError("log_window_for_decay: window does not fit in double range");
  return log_window(n, wlo, whi);
}

QuadratureScheme projector_scheme(int n) {
  return QuadratureScheme::log_window(n, 1e-10, 1e8);
}

QuadratureScheme power_scheme(double p, double x_lo, double x_hi, int n) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("power_scheme: p must lie in (0,1)");
  return QuadratureScheme::log_window_for_decay(n, x_lo, x_hi, p, 1.0 - p);
}

SpectralBounds spectral_bounds(const Matrix& a) {
  require_square_hermitian(a);
  return {1.0 / resolvent(a, 0.0).norm(), a.norm()};
}

double quad_log(double x, const QuadratureScheme& scheme) {
  if (!(x > 0.0)) throw DomainError("quad_log: x must be positive");
  double sum = 0.0;
  for (int k = 0; k < scheme.size(); ++k) {
    const double s = scheme.nodes()[k];
    // 1/(1+s) - 1/(x+s) without cancellation
    sum += scheme.weights()[k] * (x - 1.0) / ((1.0 + s) * (x + s));
  }
  return sum;
}

Matrix quad_frechet_log(const Matrix& a, const Matrix& delta, const QuadratureScheme& scheme) {
  require_square_hermitian(a);
  require_same_dim(a, delta);
  resolvent(a, 0.0);  // positive definite or throw
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  for (int k = 0; k < scheme.size(); ++k) {
    const Matrix r = resolvent(a, scheme.nodes()[k]);
    sum += scheme.weights()[k] * (r * delta * r);
  }
  return sum;
}

Matrix quad_projector_integral(const Matrix& rho, const QuadratureScheme& scheme) {
  require_square_hermitian(rho);
  Matrix sum = Matrix::Zero(rho.rows(), rho.cols());
  for (int k = 0; k < scheme.size(); ++k) {
    Matrix r;
    try {
      r = resolvent(rho, scheme.nodes()[k]);
    } catch (const DomainError& e) {
      // rho + s fails Cholesky only if rho has an eigenvalue below -s.
      throw NotPsdError(std::string("quad_projector_integral: input is not PSD (") + e.what() + ")");
    }
    sum += scheme.weights()[k] * (r * rho * r);
  }
  return sum;
}

double quad_tre(const DensityMatrix& rho, const DensityMatrix& sigma, double a,
                const QuadratureScheme& scheme) {
  require_same_dim(rho.matrix(), sigma.matrix());
  if (!(a > 0.0 && a < 1.0)) throw DomainError("quad_tre: a must lie in (0,1)");
  const Matrix v = psd_decompose(rho.matrix() + sigma.matrix()).support_basis();
  const Matrix r = compress(rho.matrix(), v);
  const Matrix sg = compress(sigma.matrix(), v);
  const Matrix tau = a * r + (1.0 - a) * sg;
  const Matrix diff = (1.0 - a) * (sg - r);
  double sum = 0.0;
  for (int k = 0; k < scheme.size(); ++k) {
    const double s = scheme.nodes()[k];
    const Matrix lhs = r * resolvent(r, s) * diff;
    sum += scheme.weights()[k] * trace_product(lhs, resolvent(tau, s));
  }
  return sum / std::log(a);
}

double quad_tre(const DensityMatrix& rho, const DensityMatrix& sigma, double a, int n) {
  const Matrix v = psd_decompose(rho.matrix() + sigma.matrix()).support_basis();
  const Matrix tau = compress(a * rho.matrix() + (1.0 - a) * sigma.matrix(), v);
  const SpectralBounds b = spectral_bounds(tau);
  return quad_tre(rho, sigma, a, QuadratureScheme::log_window_for_decay(n, b.lo, b.hi, 1.0, 1.0, 1e-12));
}

double quad_power(double x, double p, const QuadratureScheme& scheme) {
  if (!(x >= 0.0)) throw DomainError("quad_power: x must be nonnegative");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quad_power: p must lie in (0,1)");
  if (x == 0.0) return 0.0;
  double sum = 0.0;
  for (int k = 0; k < scheme.size(); ++k) {
    const double s = scheme.nodes()[k];
    sum += scheme.weights()[k] * std::pow(s, p - 1.0) * x / (x + s);
  }
  return std::sin(p * std::numbers::pi) / std::numbers::pi * sum;
}

double quad_power(double x, double p, int n) {
  if (!(x >= 0.0)) throw DomainError("quad_power: x must be nonnegative");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quad_power: p must lie in (0,1)");
  if (x == 0.0) return 0.0;
  // Window [x/1e3, 1e3 x]; outside it x/(x+s) is expanded in s/x or x/s.
  const double lo = 1e-3 * x;
  const double hi = 1e3 * x;
  double tail = 0.0;
  for (int m = 0; m < 5; ++m) {
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    tail += sign * std::pow(lo, p + m) / ((p + m) * std::pow(x, m));
    tail += sign * std::pow(x, m + 1) * std::pow(hi, p - 1.0 - m) / (1.0 + m - p);
  }
  return quad_power(x, p, QuadratureScheme::log_window(n, lo, hi)) +
         std::sin(p * std::numbers::pi) / std::numbers::pi * tail;
}

Matrix quad_frechet_power(const Matrix& a, const Matrix& delta, double p,
                          const QuadratureScheme& scheme) {
  require_square_hermitian(a);
  require_same_dim(a, delta);
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quad_frechet_power: p must lie in (0,1)");
  resolvent(a, 0.0);
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  for (int k = 0; k < scheme.size(); ++k) {
    const double s = scheme.nodes()[k];
    const Matrix r = resolvent(a, s);
    sum += scheme.weights()[k] * std::pow(s, p) * (r * delta * r);
  }
  return std::sin(p * std::numbers::pi) / std::numbers::pi * sum;
}

Matrix quad_frechet_power(const Matrix& a, const Matrix& delta, double p, int n) {
  require_same_dim(a, delta);
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quad_frechet_power: p must lie in (0,1)");
  const SpectralBounds b = spectral_bounds(a);
  // The mass above s decays only like s^(p-1), so the window stops at
  // H = 1e3 ||A|| and the rest comes from (A+s)^-1 = sum (-A)^k s^(-k-1):
  // int_H^inf s^(p-2-m) ds = H^(p-1-m) / (1+m-p).
  const double top = 1e3 * b.hi;
  const double below = std::log(1.0 / (1e-10 * (1.0 + p))) / (1.0 + p);
  const QuadratureScheme scheme = QuadratureScheme::log_window(n, b.lo * std::exp(-below), top);
  Matrix result = quad_frechet_power(a, delta, p, scheme);

  constexpr int kTailTerms = 5;
  std::vector<Matrix> powers{Matrix::Identity(a.rows(), a.cols())};
  for (int k = 1; k < kTailTerms; ++k) powers.push_back(powers.back() * a);
  Matrix tail = Matrix::Zero(a.rows(), a.cols());
  for (int m = 0; m < kTailTerms; ++m) {
    Matrix c = Matrix::Zero(a.rows(), a.cols());
    for (int j = 0; j <= m; ++j) c += powers[j] * delta * powers[m - j];
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    tail += sign * std::pow(top, p - 1.0 - m) / (1.0 + m - p) * c;
  }
  return result + std::sin(p * std::numbers::pi) / std::numbers::pi * tail;
}

Matrix finite_diff_frechet(FrechetKind kind, const Matrix& a, const Matrix& delta, double h,
                           double p) {
  require_same_dim(a, delta);
  if (!(h > 0.0)) throw DomainError("finite_diff_frechet: h must be positive");
  if (kind == FrechetKind::power && !(p > 0.0 && p < 1.0))
    throw DomainError("finite_diff_frechet: p must lie in (0,1)");
  const Matrix plus = a + h * delta;
  const Matrix minus = a - h * delta;
  for (const Matrix* m : {&plus, &minus}) {
    if (Eigen::LLT<Matrix>(*m).info() != Eigen::Success)
      throw DomainError("finite_diff_frechet: A +- h Delta is not positive definite; reduce h");
  }
  const auto f = [&](const Matrix& m) {
    if (kind == FrechetKind::log) return matrix_function(m, [](double x) { return std::log(x); });
    return matrix_function(m, [p](double x) { return std::pow(x, p); });
  };
  return (f(plus) - f(minus)) / (2.0 * h);
}

}  // namespace tre::oracle
