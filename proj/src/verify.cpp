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


#include "tre/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <thread>
#include <tuple>

#include "tre/entropy.hpp"
#include "tre/error.hpp"
#include "tre/renyi.hpp"
#include "tre/state_io.hpp"

namespace tre::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "range",         "upper_T",        "lower_pinsker",      "tau_bound",
      "holevo",        "holevo_paths",   "maximality",         "trre_bound",
      "trre_overlap_range", "renyi_floor", "joint_convexity", "limit_zero",
      "limit_one",     "limit_cauchy"};
  return names;
}

double smallest_positive_eigenvalue(const Matrix& m) {
  const PsdSpectrum ps = psd_decompose(m);
  double lo = kInf;
  for (Eigen::Index i = 0; i < ps.spectral.eigenvalues.size(); ++i) {
    const double v = ps.spectral.eigenvalues(i);
    if (v > 0.0) lo = std::min(lo, v);
  }
  return lo;
}

DensityMatrix mixture(const DensityMatrix& x, const DensityMatrix& y, double w) {
  return DensityMatrix(w * x.matrix() + (1.0 - w) * y.matrix());
}

using Key = std::tuple<long, long, long>;

Key key_of(const nlohmann::json& witness) {
  if (!witness.contains("key")) return {0, 0, 0};
  const auto& k = witness.at("key");
  return {k.at(0).get<long>(), k.at(1).get<long>(), k.at(2).get<long>()};
}

struct Pair {
  DensityMatrix rho;
  DensityMatrix sigma;
};

Pair sample_pair(Stratum stratum, Eigen::Index dim, SeededSampler& s) {
  const auto d = static_cast<std::uint64_t>(dim);
  switch (stratum) {
    case Stratum::faithful:
      return {random_mixed_hs(dim, dim, s), random_mixed_hs(dim, dim, s)};
    case Stratum::rank_deficient: {
      const auto r1 = static_cast<Eigen::Index>(s.uniform_int(1, d));
      const auto r2 = static_cast<Eigen::Index>(s.uniform_int(1, r1 == dim ? d - 1 : d));
      DensityMatrix rho = random_mixed_hs(dim, r1, s);
      return {rho, random_mixed_hs(dim, r2, s)};
    }
    case Stratum::pure: {
      DensityMatrix rho = haar_random_pure(dim, s);
      return {rho, haar_random_pure(dim, s)};
    }
    case Stratum::orthogonal: {
      auto [rho, sigma] = random_orthogonal_pair(dim, s);
      return {rho, sigma};
    }
  }
  throw DomainError("unknown stratum");
}

// Accumulates margins for one check, building the witness only when a
// trial becomes the new worst case.
class Recorder {
 public:
  Recorder(std::map<std::string, CheckResult>& results, double slack, const Pair& pair,
           Stratum stratum, long dim, long trial)
      : results_(results), slack_(slack), pair_(pair), stratum_(stratum), dim_(dim),
        trial_(trial) {}

  template <class F>
  void run(const std::string& name, long sub, nlohmann::json params, F&& margin_fn) {
    double margin;
    std::string error;
    try {
      margin = margin_fn();
      if (std::isnan(margin)) {
        margin = -kInf;
        error = "margin is NaN";
      }
    } catch (const std::exception& e) {
      margin = -kInf;
      error = e.what();
    }
    CheckResult& r = results_[name];
    r.name = name;
    ++r.trials;
    if (!(margin >= -slack_)) ++r.failures;
    if (margin < kNearEqualityThreshold) ++r.near_equalities;
    const Key key{dim_, trial_, sub};
    const bool worse = r.witness.is_null() || margin < r.worst_margin ||
                       (margin == r.worst_margin && key < key_of(r.witness));
    if (!worse) return;
    r.worst_margin = margin;
    nlohmann::json w = std::move(params);
    w["check"] = name;
    w["stratum"] = to_string(stratum_);
    w["key"] = {dim_, trial_, sub};
    w["rho"] = state_to_json(pair_.rho);
    w["sigma"] = state_to_json(pair_.sigma);
    w["slack"] = slack_;
    if (std::isfinite(margin)) w["margin"] = margin;
    if (!error.empty()) w["error"] = error;
    r.witness = std::move(w);
  }

 private:
  std::map<std::string, CheckResult>& results_;
  double slack_;
  const Pair& pair_;
  Stratum stratum_;
  long dim_;
  long trial_;
};

void run_trial(const FuzzConfig& cfg, int dim, long trial,
               std::map<std::string, CheckResult>& results) {
  const std::uint64_t index = (static_cast<std::uint64_t>(dim) << 32) |
                              static_cast<std::uint64_t>(trial);
  SeededSampler s = SeededSampler::for_trial(cfg.seed, index);
  auto stratum = static_cast<Stratum>(trial % 4);
  if (stratum == Stratum::rank_deficient && !cfg.include_rank_deficient) {
    stratum = Stratum::faithful;
  }
  const Pair pair = sample_pair(stratum, dim, s);
  const Pair second = sample_pair(stratum, dim, s);
  const double p_holevo = s.uniform();
  const double w = s.uniform();
  Recorder rec(results, cfg.slack, pair, stratum, dim, trial);
  const DensityMatrix& rho = pair.rho;
  const DensityMatrix& sigma = pair.sigma;

  for (std::size_t i = 0; i < cfg.a_grid.size(); ++i) {
    const double a = cfg.a_grid[i];
    const long sub = static_cast<long>(i);
    const nlohmann::json pa{{"a", a}};
    rec.run("range", sub, pa, [&] { return check_range(rho, sigma, a); });
    rec.run("upper_T", sub, pa, [&] { return check_upper_T(rho, sigma, a); });
    rec.run("maximality", sub, pa, [&] { return check_maximality(rho, sigma, a, cfg.slack); });
    if (a > 0.0 && a < 1.0) {
      rec.run("lower_pinsker", sub, pa, [&] { return check_lower_pinsker(rho, sigma, a); });
      rec.run("tau_bound", sub, pa, [&] { return check_tau_bound(rho, sigma, a); });
    }
    nlohmann::json pj{{"a", a}, {"w", w}, {"rho2", state_to_json(second.rho)},
                      {"sigma2", state_to_json(second.sigma)}};
    rec.run("joint_convexity", sub, std::move(pj), [&] {
      return check_joint_convexity(rho, sigma, second.rho, second.sigma, w, a);
    });
  }

  const nlohmann::json ph{{"p", p_holevo}};
  rec.run("holevo", 0, ph, [&] { return check_holevo(p_holevo, rho, sigma); });
  rec.run("holevo_paths", 0, ph, [&] { return check_holevo_paths(p_holevo, rho, sigma); });

  for (std::size_t j = 0; j < cfg.p_grid.size(); ++j) {
    const double p = cfg.p_grid[j];
    const long pj = static_cast<long>(j) << 16;
    rec.run("renyi_floor", pj, {{"p", p}}, [&] { return check_renyi_floor(rho, sigma, p); });
    for (std::size_t i = 0; i < cfg.a_grid.size(); ++i) {
      const double a = cfg.a_grid[i];
      if (a >= 1.0) continue;
      const long sub = pj | static_cast<long>(i);
      const nlohmann::json pp{{"a", a}, {"p", p}};
      rec.run("trre_bound", sub, pp, [&] { return check_trre_bound(rho, sigma, p, a); });
      rec.run("trre_overlap_range", sub, pp,
              [&] { return check_trre_overlap_range(rho, sigma, p, a); });
    }
  }

  if (cfg.include_limits) {
    std::optional<LimitCheck> lc;
    const auto limits = [&]() -> const LimitCheck& {
      if (!lc) lc = check_limit_closed_forms(rho, sigma);
      return *lc;
    };
    rec.run("limit_zero", 0, nlohmann::json::object(), [&] { return limits().margin_zero; });
    rec.run("limit_one", 0, nlohmann::json::object(), [&] { return limits().margin_one; });
    rec.run("limit_cauchy", 0, nlohmann::json::object(), [&] { return limits().margin_cauchy; });
  }
}

double number(const nlohmann::json& w, const char* field) {
  if (!w.contains(field)) throw DomainError(std::string("witness lacks field '") + field + "'");
  return w.at(field).get<double>();
}

}  // namespace

void FuzzConfig::validate() const {
  if (dims.empty()) throw DomainError("fuzz config: dims must not be empty");
  for (int d : dims) {
    if (d < 2 || d > 64) throw DomainError("fuzz config: dimensions must lie in [2, 64]");
  }
  if (trials < 1) throw DomainError("fuzz config: trials must be at least 1");
  for (double a : a_grid) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("fuzz config: a-grid values must lie in [0,1]");
  }
  for (double p : p_grid) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("fuzz config: p-grid values must lie in (0,1)");
  }
  if (!std::isfinite(slack)) throw DomainError("fuzz config: slack must be finite");
  if (threads < 1) throw DomainError("fuzz config: threads must be at least 1");
}

nlohmann::json FuzzConfig::to_json() const {
  return {{"dims", dims},
          {"trials", trials},
          {"a_grid", a_grid},
          {"p_grid", p_grid},
          {"seed", seed},
          {"slack", slack},
          {"include_rank_deficient", include_rank_deficient},
          {"include_limits", include_limits}};
}

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::faithful: return "faithful";
    case Stratum::rank_deficient: return "rank_deficient";
    case Stratum::pure: return "pure";
    case Stratum::orthogonal: return "orthogonal";
  }
  return "unknown";
}

void CheckResult::merge(const CheckResult& other) {
  if (name.empty()) name = other.name;
  const bool take = !other.witness.is_null() &&
                    (witness.is_null() || other.worst_margin < worst_margin ||
                     (other.worst_margin == worst_margin &&
                      key_of(other.witness) < key_of(witness)));
  trials += other.trials;
  failures += other.failures;
  near_equalities += other.near_equalities;
  if (take) {
    worst_margin = other.worst_margin;
    witness = other.witness;
  }
}

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j{{"name", name},
                   {"trials", trials},
                   {"failures", failures},
                   {"near_equalities", near_equalities},
                   {"passed", failures == 0},
                   {"witness", witness}};
  if (trials > 0 && std::isfinite(worst_margin)) {
    j["worst_margin"] = worst_margin;
  } else {
    j["worst_margin"] = nullptr;
  }
  return j;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.failures == 0; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  return {{"config", config.to_json()}, {"checks", arr}, {"passed", passed()}};
}

double check_range(const DensityMatrix& rho, const DensityMatrix& sigma, double a) {
  const double s = telescopic_relative_entropy(rho, sigma, a);
  return std::min(s, 1.0 - s);
}

double check_upper_T(const DensityMatrix& rho, const DensityMatrix& sigma, double a) {
  return trace_norm_distance(rho, sigma) - telescopic_relative_entropy(rho, sigma, a);
}

double check_lower_pinsker(const DensityMatrix& rho, const DensityMatrix& sigma, double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("check_lower_pinsker: a must lie in (0,1)");
  const double t = trace_norm_distance(rho, sigma);
  const double bound = 2.0 * (1.0 - a) * (1.0 - a) * t * t / -std::log(a);
  return telescopic_relative_entropy(rho, sigma, a) - bound;
}

double check_tau_bound(const DensityMatrix& rho, const DensityMatrix& sigma, double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("check_tau_bound: a must lie in (0,1)");
  const EntropyValue s = relative_entropy(rho, telescope_mix(rho, sigma, a));
  if (!s.is_finite()) return kInf;
  return -std::log(a) * trace_norm_distance(rho, sigma) - s.value();
}

double check_holevo(double p, const DensityMatrix& rho, const DensityMatrix& sigma) {
  return binary_entropy(p) * trace_norm_distance(rho, sigma) - holevo_two(p, rho, sigma);
}

double check_holevo_paths(double p, const DensityMatrix& rho, const DensityMatrix& sigma) {
  return -std::abs(holevo_two(p, rho, sigma) - holevo_two_relative(p, rho, sigma));
}

double check_maximality(const DensityMatrix& rho, const DensityMatrix& sigma, double a,
                        double slack) {
  const double s = telescopic_relative_entropy(rho, sigma, a);
  if (is_orthogonal(rho, sigma)) return -std::abs(1.0 - s);
  return (1.0 - s) - 2.0 * slack;
}

double check_trre_bound(const DensityMatrix& rho, const DensityMatrix& sigma, double p,
                        double a) {
  return trace_norm_distance(rho, sigma) - trre(rho, sigma, p, a);
}

double check_trre_overlap_range(const DensityMatrix& rho, const DensityMatrix& sigma, double p,
                                double a) {
  const double overlap = renyi_overlap_telescoped(rho, sigma, p, a);
  return std::min(overlap - std::pow(a, p), 1.0 - overlap);
}

double check_renyi_floor(const DensityMatrix& rho, const DensityMatrix& sigma, double p) {
  return renyi_overlap(rho, sigma, p) - (1.0 - trace_norm_distance(rho, sigma));
}

double check_joint_convexity(const DensityMatrix& rho1, const DensityMatrix& sigma1,
                             const DensityMatrix& rho2, const DensityMatrix& sigma2, double w,
                             double a) {
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("check_joint_convexity: w must lie in [0,1]");
  const double separate = w * telescopic_relative_entropy(rho1, sigma1, a) +
                          (1.0 - w) * telescopic_relative_entropy(rho2, sigma2, a);
  const double joint =
      telescopic_relative_entropy(mixture(rho1, rho2, w), mixture(sigma1, sigma2, w), a);
  return separate - joint;
}

double extrapolate_to_zero(const double (&x)[3], const double (&y)[3]) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i) {
    double term = y[i];
    for (int j = 0; j < 3; ++j) {
      if (j != i) term *= x[j] / (x[j] - x[i]);
    }
    r += term;
  }
  return r;
}

LimitCheck check_limit_closed_forms(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.matrix(), sigma.matrix());
  LimitCheck out{};
  out.closed_zero = tre_limit_zero(rho, sigma);
  out.closed_one = tre_limit_one(rho, sigma);

  double base = std::clamp(1e-5 * smallest_positive_eigenvalue(sigma.matrix()), 1e-12, 1e-8);
  double x0[3], y0[3];
  bool done = false;
  for (int attempt = 0; attempt < 4 && !done; ++attempt, base *= 10.0) {
    try {
      double a = base;
      for (int k = 0; k < 3; ++k, a *= 0.1) {
        x0[k] = 1.0 / -std::log(a);
        y0[k] = telescopic_relative_entropy(rho, sigma, a);
      }
      done = true;
    } catch (const DomainError&) {
    }
  }
  if (!done) throw DomainError("check_limit_closed_forms: S_a lost support near a = 0");

  double x1[3] = {1e-5, 1e-6, 1e-7}, y1[3];
  for (int k = 0; k < 3; ++k) y1[k] = telescopic_relative_entropy(rho, sigma, 1.0 - x1[k]);

  out.extrapolated_zero = extrapolate_to_zero(x0, y0);
  out.extrapolated_one = extrapolate_to_zero(x1, y1);
  out.margin_zero = kLimitTolerance - std::abs(out.extrapolated_zero - out.closed_zero);
  out.margin_one = kLimitTolerance - std::abs(out.extrapolated_one - out.closed_one);
  const double c0 = std::abs(y0[0] - y0[1]) - std::abs(y0[1] - y0[2]);
  const double c1 = std::abs(y1[0] - y1[1]) - std::abs(y1[1] - y1[2]);
  out.margin_cauchy = std::min(c0, c1) + kCauchyAllowance;
  return out;
}

VerificationReport run_fuzz(const FuzzConfig& config) {
  config.validate();
  std::vector<std::pair<int, long>> jobs;
  for (int d : config.dims) {
    for (long t = 0; t < config.trials; ++t) jobs.emplace_back(d, t);
  }
  const auto workers = static_cast<std::size_t>(
      std::min<long>(config.threads, static_cast<long>(jobs.size())));
  std::vector<std::map<std::string, CheckResult>> partial(workers);
  const auto work = [&](std::size_t w) {
    for (std::size_t j = w; j < jobs.size(); j += workers) {
      run_trial(config, jobs[j].first, jobs[j].second, partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.config = config;
  for (const auto& name : check_names()) {
    CheckResult total;
    total.name = name;
    for (const auto& part : partial) {
      const auto it = part.find(name);
      if (it != part.end()) total.merge(it->second);
    }
    if (total.trials > 0) report.checks.push_back(std::move(total));
  }
  return report;
}

double replay_witness(const nlohmann::json& witness) {
  const std::string name = witness.at("check").get<std::string>();
  const DensityMatrix rho = state_from_json(witness.at("rho"));
  const DensityMatrix sigma = state_from_json(witness.at("sigma"));
  if (name == "range") return check_range(rho, sigma, number(witness, "a"));
  if (name == "upper_T") return check_upper_T(rho, sigma, number(witness, "a"));
  if (name == "lower_pinsker") return check_lower_pinsker(rho, sigma, number(witness, "a"));
  if (name == "tau_bound") return check_tau_bound(rho, sigma, number(witness, "a"));
  if (name == "holevo") return check_holevo(number(witness, "p"), rho, sigma);
  if (name == "holevo_paths") return check_holevo_paths(number(witness, "p"), rho, sigma);
  if (name == "maximality") {
    return check_maximality(rho, sigma, number(witness, "a"), number(witness, "slack"));
  }
  if (name == "trre_bound") {
    return check_trre_bound(rho, sigma, number(witness, "p"), number(witness, "a"));
  }
  if (name == "trre_overlap_range") {
    return check_trre_overlap_range(rho, sigma, number(witness, "p"), number(witness, "a"));
  }
  if (name == "renyi_floor") return check_renyi_floor(rho, sigma, number(witness, "p"));
  if (name == "joint_convexity") {
    return check_joint_convexity(rho, sigma, state_from_json(witness.at("rho2")),
                                 state_from_json(witness.at("sigma2")), number(witness, "w"),
                                 number(witness, "a"));
  }
  if (name == "limit_zero") return check_limit_closed_forms(rho, sigma).margin_zero;
  if (name == "limit_one") return check_limit_closed_forms(rho, sigma).margin_one;
  if (name == "limit_cauchy") return check_limit_closed_forms(rho, sigma).margin_cauchy;
  throw DomainError("unknown check '" + name + "' in witness");
}

}  // namespace tre::verify
