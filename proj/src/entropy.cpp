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

#include "tre/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tre/error.hpp"

namespace tre {

namespace {

// Values in [-kNegativeClamp, 0) are roundoff and are reported as 0.
constexpr double kNegativeClamp = 1e-10;

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << name << " must lie in [0,1], got " << x;
    throw DomainError(os.str());
  }
}

double entropy_of_spectrum(const RealVector& ev) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.0) s -= ev(i) * std::log(ev(i));
  return s;
}

// 1 - tr(x {y}), clipped to [0,1].
double support_deficit(const Matrix& x, const Matrix& y) {
  const Matrix v = psd_decompose(y).support_basis();
  const double captured = compress(x, v).trace().real();
  return std::clamp(1.0 - captured, 0.0, 1.0);
}

}  // namespace

EntropyValue EntropyValue::finite(double v) {
  if (!(v >= -kNegativeClamp) || !std::isfinite(v)) {
    std::ostringstream os;
    os << "entropy value must be finite and nonnegative, got " << v;
    throw DomainError(os.str());
  }
  return EntropyValue(false, v < 0.0 ? 0.0 : v);
}

double EntropyValue::value() const {
  if (infinite_) throw DomainError("entropy value is infinite");
  return value_;
}

double EntropyValue::as_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return std::max(0.0, entropy_of_spectrum(psd_decompose(rho.matrix()).spectral.eigenvalues));
}

EntropyValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix());
  const PsdSpectrum sp = psd_decompose(sigma.matrix());
  const Matrix& u = sp.spectral.eigenvectors;
  const RealVector& mu = sp.spectral.eigenvalues;

  // diagonal of rho in sigma's eigenbasis
  const RealVector weights = (u.adjoint() * rho.matrix() * u).diagonal().real();
  double leak = 0.0;
  double cross = 0.0;  // tr rho log sigma on supp sigma
  for (Eigen::Index j = 0; j < mu.size(); ++j) {
    if (mu(j) > 0.0)
      cross += weights(j) * std::log(mu(j));
    else
      leak += weights(j);
  }
  if (leak > kSupportLeakTolerance) return EntropyValue::infinite();

  const double neg_entropy = -entropy_of_spectrum(psd_decompose(rho.matrix()).spectral.eigenvalues);
  return EntropyValue::finite(neg_entropy - cross);
}

double telescopic_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                   double a) {
  require_same_dim(rho.matrix(), sigma.matrix());
  require_unit_interval(a, "telescopic_relative_entropy: a");
  if (a == 0.0) return tre_limit_zero(rho, sigma);
  if (a == 1.0) return tre_limit_one(rho, sigma);
  const EntropyValue s = relative_entropy(rho, telescope_mix(rho, sigma, a));
  return s.value() / -std::log(a);
}

double tre_limit_zero(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix());
  return support_deficit(rho.matrix(), sigma.matrix());
}

double tre_limit_one(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix());
  return support_deficit(sigma.matrix(), rho.matrix());
}

PureTREInputs PureTREInputs::make(double t, double a) {
  require_unit_interval(t, "trace distance t");
  if (!(a > 0.0 && a < 1.0)) throw DomainError("pure-state closed form needs a in (0,1)");
  const double w = 4.0 * a * (1.0 - a) * t * t;
  const double one_minus_w =
      (1.0 - 2.0 * a) * (1.0 - 2.0 * a) + 4.0 * a * (1.0 - a) * (1.0 - t) * (1.0 + t);
  return {t, a, w, one_minus_w};
}

double tre_pure_closed_form(double t, double a) {
  const PureTREInputs in = PureTREInputs::make(t, a);
  if (t == 0.0) return 0.0;

  // -log(w/4)
  const double first = -(std::log(a) + std::log1p(-a) + 2.0 * std::log(t));
  const double coef = 1.0 - 2.0 * (1.0 - a) * t * t;  // 1 - w/(2a)
  const double r = std::sqrt(in.one_minus_w);

  // coef / r * log((1+r)/(1-r)), with the removable singularity at r = 0
  double second;
  if (r < 0.5) {
    const double atanh_over_r = r < 1e-6 ? 1.0 + r * r / 3.0 : std::atanh(r) / r;
    second = coef * 2.0 * atanh_over_r;
  } else {
    // (1+r)/(1-r) = (1+r)^2 / w keeps full precision when w is small
    second = coef * (2.0 * std::log1p(r) - std::log(in.w)) / r;
  }
  return (first - second) / (-2.0 * std::log(a));
}

double scalar_tre(double b, double c, double a) {
  if (!(b >= 0.0) || !(c >= 0.0)) throw DomainError("scalar_tre: b and c must be nonnegative");
  if (!(a > 0.0 && a < 1.0)) throw DomainError("scalar_tre: a must lie in (0,1)");
  if (b == 0.0) return 0.0;
  const double mix = a * b + (1.0 - a) * c;
  return b * (std::log(b) - std::log(mix)) / -std::log(a);
}

double binary_entropy(double p) {
  require_unit_interval(p, "binary_entropy: p");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

double holevo_two(double p, const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_unit_interval(p, "holevo_two: p");
  const DensityMatrix tau = telescope_mix(rho, sigma, p);
  const double chi =
      von_neumann_entropy(tau) - p * von_neumann_entropy(rho) - (1.0 - p) * von_neumann_entropy(sigma);
  return chi < 0.0 && chi > -kNegativeClamp ? 0.0 : chi;
}

double holevo_two_relative(double p, const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_unit_interval(p, "holevo_two_relative: p");
  const DensityMatrix tau = telescope_mix(rho, sigma, p);
  double chi = 0.0;
  if (p > 0.0) chi += p * relative_entropy(rho, tau).value();
  if (p < 1.0) chi += (1.0 - p) * relative_entropy(sigma, tau).value();
  return chi;
}

double lendi_regularised(const DensityMatrix& rho, const DensityMatrix& sigma, double c_d) {
  require_same_dim(rho.matrix(), sigma.matrix());
  if (!(c_d > 0.0)) throw DomainError("lendi_regularised: c_d must be positive");
  const Eigen::Index d = rho.dim();
  const Matrix id = Matrix::Identity(d, d);
  const double norm = 1.0 + static_cast<double>(d);
  const DensityMatrix r((rho.matrix() + id) / norm);
  const DensityMatrix s((sigma.matrix() + id) / norm);
  return c_d * relative_entropy(r, s).value();
}

SmoothingBound collinear_smoothing_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                                         double epsilon) {
  const double distance = 2.0 * trace_norm_distance(rho, sigma);  // ||rho - sigma||_1
  if (!(epsilon > 0.0 && epsilon < distance)) {
    std::ostringstream os;
    os << "collinear_smoothing_bound: epsilon must lie in (0, " << distance << "), got "
       << epsilon;
    throw DomainError(os.str());
  }
  const double a = epsilon / distance;
  const DensityMatrix tau = telescope_mix(rho, sigma, a);
  return {a, relative_entropy(rho, tau).value(), -std::log(a),
          trace_norm(tau.matrix() - sigma.matrix())};
}

}  // namespace tre
