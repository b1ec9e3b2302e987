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

#ifndef TRE_ENTROPY_HPP
#define TRE_ENTROPY_HPP

#include "tre/states.hpp"

namespace tre {

/// tr rho (1 - {sigma}) above this makes S(rho||sigma) infinite.
inline constexpr double kSupportLeakTolerance = 1e-10;

/// Finite nonnegative value or +infinity.
class EntropyValue {
 public:
  static EntropyValue finite(double v);
  static EntropyValue infinite() { return EntropyValue(true, 0.0); }

  bool is_finite() const { return !infinite_; }
  /// Throws DomainError when infinite.
  double value() const;
  /// value() or +inf.
  double as_double() const;

 private:
  EntropyValue(bool inf, double v) : infinite_(inf), value_(v) {}
  bool infinite_;
  double value_;
};

/// -sum lambda log lambda, natural log, 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho||sigma) = tr rho (log rho - log sigma); infinite iff supp rho is
/// not contained in supp sigma.
EntropyValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S_a(rho||sigma) = S(rho || a rho + (1-a) sigma) / (-log a). The
/// endpoints a = 0 and a = 1 dispatch to the closed-form limits.
double telescopic_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                   double a);

/// S_0 = 1 - tr rho {sigma}.
double tre_limit_zero(const DensityMatrix& rho, const DensityMatrix& sigma);
/// S_1 = 1 - tr sigma {rho}.
double tre_limit_one(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Parameters of the pure-state closed form. w = 4a(1-a)t^2.
struct PureTREInputs {
  double t;
  double a;
  double w;
  /// 1 - w, evaluated without cancellation.
  double one_minus_w;

  static PureTREInputs make(double t, double a);
};

/// S_a for two pure states at trace-norm distance t, a in (0,1).
double tre_pure_closed_form(double t, double a);

/// S_a(b||c) for nonnegative scalars.
double scalar_tre(double b, double c, double a);

double binary_entropy(double p);

/// chi = S(p rho + (1-p) sigma) - p S(rho) - (1-p) S(sigma).
double holevo_two(double p, const DensityMatrix& rho, const DensityMatrix& sigma);

/// The same quantity as p S(rho||tau) + (1-p) S(sigma||tau), tau the mixture.
double holevo_two_relative(double p, const DensityMatrix& rho, const DensityMatrix& sigma);

/// c_d S((rho + 1)/(1 + d) || (sigma + 1)/(1 + d)).
double lendi_regularised(const DensityMatrix& rho, const DensityMatrix& sigma, double c_d = 1.0);

struct SmoothingBound {
  double a;                  // epsilon / ||rho - sigma||_1
  double relative_entropy;   // S(rho||tau), tau = a rho + (1-a) sigma
  double bound;              // -log a
  double budget;             // ||tau - sigma||_1, equals epsilon
};

/// Collinear choice of smoothing state inside the trace-norm ball of radius
/// epsilon around sigma. Requires 0 < epsilon < ||rho - sigma||_1.
SmoothingBound collinear_smoothing_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                                         double epsilon);

}  // namespace tre

#endif  // TRE_ENTROPY_HPP
