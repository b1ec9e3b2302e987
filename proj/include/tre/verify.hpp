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

#ifndef TRE_VERIFY_HPP
#define TRE_VERIFY_HPP

// Randomised property checks. Every check returns a signed margin: the
// inequality rearranged as margin >= 0. A trial fails when its margin is
// below -slack.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tre/states.hpp"

namespace tre::verify {

/// Margins below this count as near-equality (tightness) cases.
inline constexpr double kNearEqualityThreshold = 1e-4;
/// Agreement required between extrapolated S_a and the closed-form limits.
inline constexpr double kLimitTolerance = 1e-3;

struct FuzzConfig {
  std::vector<int> dims{2, 3, 4};
  int trials = 1000;  // per dimension
  std::vector<double> a_grid{0.0, 0.1, 0.25, 0.5, 0.75, 0.9};
  std::vector<double> p_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::uint64_t seed = 20101;
  double slack = 1e-9;
  bool include_rank_deficient = true;
  bool include_limits = true;
  int threads = 1;

  /// Throws DomainError on an invalid configuration.
  void validate() const;
  nlohmann::json to_json() const;
};

enum class Stratum { faithful, rank_deficient, pure, orthogonal };
const char* to_string(Stratum s);

struct CheckResult {
  std::string name;
  long trials = 0;
  long failures = 0;
  long near_equalities = 0;
  double worst_margin = 0.0;
  nlohmann::json witness;  // inputs of the worst trial

  /// Associative, order-independent merge (ties broken on the witness key).
  void merge(const CheckResult& other);
  nlohmann::json to_json() const;
};

struct VerificationReport {
  FuzzConfig config;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

// Individual checks. a in (0,1) unless noted.

/// min(S_a, 1 - S_a).
double check_range(const DensityMatrix& rho, const DensityMatrix& sigma, double a);
/// T - S_a.
double check_upper_T(const DensityMatrix& rho, const DensityMatrix& sigma, double a);
/// S_a - 2(1-a)^2 T^2 / (-log a).
double check_lower_pinsker(const DensityMatrix& rho, const DensityMatrix& sigma, double a);
/// -log(a) T - S(rho||tau).
double check_tau_bound(const DensityMatrix& rho, const DensityMatrix& sigma, double a);
/// h(p) T - chi, p in [0,1].
double check_holevo(double p, const DensityMatrix& rho, const DensityMatrix& sigma);
/// -|chi_entropies - chi_relative|.
double check_holevo_paths(double p, const DensityMatrix& rho, const DensityMatrix& sigma);
/// Orthogonal pairs: -|1 - S_a|. Other pairs: (1 - S_a) - 2 slack, so the
/// trial passes iff S_a <= 1 - slack.
double check_maximality(const DensityMatrix& rho, const DensityMatrix& sigma, double a,
                        double slack);
/// T - Q_{p,a}, a in [0,1).
double check_trre_bound(const DensityMatrix& rho, const DensityMatrix& sigma, double p, double a);
/// min(overlap - a^p, 1 - overlap) for the telescoped overlap, a in [0,1).
double check_trre_overlap_range(const DensityMatrix& rho, const DensityMatrix& sigma, double p,
                                double a);
/// tr rho^{1-p} sigma^p - (1 - T).
double check_renyi_floor(const DensityMatrix& rho, const DensityMatrix& sigma, double p);
/// w S_a(rho1||sigma1) + (1-w) S_a(rho2||sigma2) - S_a(mix || mix).
double check_joint_convexity(const DensityMatrix& rho1, const DensityMatrix& sigma1,
                             const DensityMatrix& rho2, const DensityMatrix& sigma2, double w,
                             double a);

/// Extrapolation of S_a towards both endpoints against the closed forms.
struct LimitCheck {
  double extrapolated_zero;
  double extrapolated_one;
  double closed_zero;
  double closed_one;
  double margin_zero;    // kLimitTolerance - |extrapolated - closed|
  double margin_one;
  double margin_cauchy;  // min(|d_k| - |d_{k+1}|) + kCauchyAllowance
};

/// Rounding allowance on the shrinking-difference test.
inline constexpr double kCauchyAllowance = 1e-6;

/// Towards 0 the approach is governed by a / lambda_min^+(sigma), so the
/// samples are a = b, b/10, b/100 with b = clamp(1e-5 lambda_min^+, 1e-12,
/// 1e-8), extrapolated in 1/(-log a); b moves up a decade if the smallest
/// sample loses support numerically. Towards 1: 1 - a in {1e-5, 1e-6, 1e-7}.
LimitCheck check_limit_closed_forms(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Quadratic extrapolation to x = 0 through three samples.
double extrapolate_to_zero(const double (&x)[3], const double (&y)[3]);

VerificationReport run_fuzz(const FuzzConfig& config);

/// Re-run the check recorded in a witness and return its margin.
double replay_witness(const nlohmann::json& witness);

}  // namespace tre::verify

#endif  // TRE_VERIFY_HPP
