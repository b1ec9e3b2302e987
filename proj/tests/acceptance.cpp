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


// Acceptance runner. Each criterion prints one PASS/FAIL line with the
// worst observed deviation; `--only N` restricts the run to criterion N.
// Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tre/commands.hpp"
#include "tre/entropy.hpp"
#include "tre/error.hpp"
#include "tre/matfun.hpp"
#include "tre/oracle.hpp"
#include "tre/renyi.hpp"
#include "tre/verify.hpp"

using namespace tre;
using namespace tre::testing;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

// Running maximum of a deviation against a fixed tolerance.
struct Worst {
  double tol;
  double value = -INFINITY;
  long count = 0;
  void add(double deviation) {
    ++count;
    if (!(deviation <= value)) value = std::isnan(deviation) ? INFINITY : deviation;
  }
  bool ok() const { return value <= tol; }
  std::string str(const char* label) const {
    std::ostringstream os;
    os << label << " " << value << " (tol " << tol << ", n=" << count << ")";
    return os.str();
  }
};

const std::vector<double> kAGrid{0.1, 0.25, 0.5, 0.75, 0.9};
const std::vector<double> kPGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

std::pair<DensityMatrix, DensityMatrix> pure_pair(double t) {
  ComplexVector v(2);
  v << std::sqrt((1.0 - t) * (1.0 + t)), t;
  return {state_diag({1.0, 0.0}), pure_from_vector(v)};
}

Outcome limits() {
  Worst zero{1e-3}, one{1e-3};
  for (int dim : {2, 3, 4, 6}) {
    SeededSampler s(1000 + dim);
    for (int trial = 0; trial < 500; ++trial) {
      auto [rho, sigma] = random_pair(trial, dim, s);
      const verify::LimitCheck c = verify::check_limit_closed_forms(rho, sigma);
      zero.add(std::abs(c.extrapolated_zero - c.closed_zero));
      one.add(std::abs(c.extrapolated_one - c.closed_one));
    }
  }
  return {zero.ok() && one.ok(), zero.str("a->0") + "; " + one.str("a->1")};
}

Outcome pure_formula() {
  Worst grid{1e-9}, endpoints{1e-3};
  for (int i = 0; i < 50; ++i) {
    const double t = i / 49.0;
    auto [rho, sigma] = pure_pair(t);
    for (int j = 0; j < 50; ++j) {
      const double a = 0.02 + 0.96 * j / 49.0;
      grid.add(std::abs(tre_pure_closed_form(t, a) - telescopic_relative_entropy(rho, sigma, a)));
    }
    for (double a : {1e-4, 1 - 1e-4}) endpoints.add(std::abs(tre_pure_closed_form(t, a) - t * t));
  }
  return {grid.ok() && endpoints.ok(), grid.str("grid") + "; " + endpoints.str("|S_a - t^2|")};
}

// Criteria 3 to 5 share one sweep of 10^4 pairs.
struct Sweep {
  Worst upper{1e-9}, pinsker{1e-9}, tau_bound{1e-9};
  bool done = false;

  void run() {
    if (done) return;
    SeededSampler s(3000);
    for (int trial = 0; trial < 10000; ++trial) {
      auto [rho, sigma] = random_pair(trial, 2 + trial % 4, s);
      for (double a : kAGrid) {
        upper.add(-verify::check_upper_T(rho, sigma, a));
        pinsker.add(-verify::check_lower_pinsker(rho, sigma, a));
        tau_bound.add(-verify::check_tau_bound(rho, sigma, a));
      }
    }
    done = true;
  }
};

Sweep sweep;

Outcome upper_bound() {
  sweep.run();
  Worst family{1e-9};
  for (int k = 1; k <= 9; ++k) {
    const double t = k / 10.0;
    const DensityMatrix rho = state_diag({t, 0, 1 - t});
    const DensityMatrix sigma = state_diag({0, t, 1 - t});
    for (double a : {0.1, 0.5, 0.9}) family.add(std::abs(telescopic_relative_entropy(rho, sigma, a) - t));
  }
  return {sweep.upper.ok() && family.ok(),
          sweep.upper.str("S_a - T") + "; " + family.str("|S_a - t|")};
}

Outcome pinsker() {
  sweep.run();
  return {sweep.pinsker.ok(), sweep.pinsker.str("bound - S_a")};
}

Outcome tau_bound() {
  sweep.run();
  return {sweep.tau_bound.ok(), sweep.tau_bound.str("S(rho||tau) + log(a) T")};
}

Outcome holevo() {
  Worst bound{1e-9}, paths{1e-9};
  SeededSampler s(6000);
  for (int trial = 0; trial < 1000; ++trial) {
    auto [rho, sigma] = random_pair(trial, 2 + trial % 4, s);
    const double p = s.uniform(0.0, 1.0);
    bound.add(-verify::check_holevo(p, rho, sigma));
    paths.add(-verify::check_holevo_paths(p, rho, sigma));
  }
  return {bound.ok() && paths.ok(), bound.str("chi - h(p) T") + "; " + paths.str("path gap")};
}

Outcome maximality() {
  Worst orth{1e-9}, overlap{0.0};
  SeededSampler s(7000);
  for (int trial = 0; trial < 200; ++trial) {
    auto [rho, sigma] = random_orthogonal_pair(2 + trial % 5, s);
    for (double a : kAGrid) orth.add(std::abs(telescopic_relative_entropy(rho, sigma, a) - 1.0));
  }
  for (int found = 0, draw = 0; found < 200; ++draw) {
    auto [rho, sigma] = random_pair(draw % 3, 2 + draw % 4, s);
    if (trace_product(rho.matrix(), sigma.matrix()) < 0.1) continue;
    ++found;
    for (double a : kAGrid) overlap.add(telescopic_relative_entropy(rho, sigma, a) - (1 - 1e-6));
  }
  return {orth.ok() && overlap.ok(),
          orth.str("|S_a - 1| orthogonal") + "; " + overlap.str("S_a - (1 - 1e-6) overlapping")};
}

Outcome trre_bounds() {
  Worst range{1e-9}, bound{1e-9}, equality{1e-9};
  const std::vector<double> a_grid{0.0, 0.1, 0.25, 0.5, 0.75, 0.9};
  SeededSampler s(8000);
  for (int trial = 0; trial < 1000; ++trial) {
    auto [rho, sigma] = random_pair(trial, 2 + trial % 4, s);
    const double t = trace_norm_distance(rho, sigma);
    for (double p : kPGrid) {
      for (double a : a_grid) {
        const RenyiValue v = trre_value(rho, sigma, p, a);
        range.add(std::max(std::pow(a, p) - v.overlap, v.overlap - 1.0));
        bound.add(v.q - t);
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto [rho, sigma] = random_orthogonal_pair(2 + trial % 5, s);
    for (double p : kPGrid) {
      for (double a : a_grid) {
        const double q = trre(rho, sigma, p, a);
        equality.add(std::max(std::abs(q - 1.0), std::abs(q - trace_norm_distance(rho, sigma))));
      }
    }
  }
  return {range.ok() && bound.ok() && equality.ok(),
          range.str("overlap outside [a^p, 1]") + "; " + bound.str("Q - T") + "; " +
              equality.str("orthogonal |Q - T|")};
}

Outcome oracles() {
  using namespace tre::oracle;
  Worst log_err{1e-5}, pow_err{1e-5}, tlog{1e-5}, tpow{1e-5}, sa{1e-5};
  const QuadratureScheme rational = QuadratureScheme::rational(kDefaultNodes);
  SeededSampler s(9000);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = std::exp(s.uniform(std::log(1e-3), std::log(1e3)));
    log_err.add(std::abs(quad_log(x, rational) - std::log(x)));

    const double p = s.uniform(0.01, 0.99);
    const double y = std::exp(s.uniform(std::log(1e-3), std::log(1e1)));
    pow_err.add(std::abs(quad_power(y, p) - std::pow(y, p)));

    const Eigen::Index dim = 2 + trial % 4;
    const Matrix a = random_positive_definite(dim, s, 0.05, 2.0);
    const Matrix d = random_hermitian(dim, s);
    tlog.add(max_diff(quad_frechet_log(a, d, rational), frechet_log_map(a, d)));
    tpow.add(max_diff(quad_frechet_power(a, d, p), frechet_power_map(a, d, p)));

    auto [rho, sigma] = random_pair(trial, dim, s);
    const double at = s.uniform(0.05, 0.95);
    sa.add(std::abs(quad_tre(rho, sigma, at) - telescopic_relative_entropy(rho, sigma, at)));
  }
  Worst ratio{0.5};
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = random_positive_definite(2 + trial % 3, s, 0.3, 2.0);
    const Matrix d = random_hermitian(a.rows(), s);
    for (FrechetKind kind : {FrechetKind::log, FrechetKind::power}) {
      const Matrix exact =
          kind == FrechetKind::log ? frechet_log_map(a, d) : frechet_power_map(a, d, 0.5);
      const double e1 = max_diff(finite_diff_frechet(kind, a, d, 1e-3), exact);
      const double e2 = max_diff(finite_diff_frechet(kind, a, d, 5e-4), exact);
      ratio.add(std::abs(e1 / e2 - 4.0));
    }
  }
  const bool ok = log_err.ok() && pow_err.ok() && tlog.ok() && tpow.ok() && sa.ok() && ratio.ok();
  return {ok, log_err.str("log") + "; " + pow_err.str("x^p") + "; " + tlog.str("T_A") + "; " +
                  tpow.str("T_A;p") + "; " + sa.str("S_a") + "; " + ratio.str("|ratio - 4|")};
}

Outcome frechet_identities() {
  Worst ident{1e-10}, ident_p{1e-10}, adjoint{1e-10};
  SeededSampler s(10000);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index dim = 2 + trial % 4;
    const Matrix a = random_mixed_hs(dim, dim, s).matrix();
    const Matrix id = Matrix::Identity(dim, dim);
    ident.add(max_diff(frechet_log_map(a, a), id));
    const double p = s.uniform(0.05, 0.95);
    const Matrix a1p = matrix_function(a, [p](double x) { return std::pow(x, 1.0 - p); });
    ident_p.add(max_diff(frechet_power_map(a, a1p, p), p * id));
    const Matrix b = random_hermitian(dim, s);
    const Matrix d = random_hermitian(dim, s);
    adjoint.add(std::abs(trace_product(b, frechet_log_map(a, d)) -
                         trace_product(d, frechet_log_map(a, b))));
  }
  return {ident.ok() && ident_p.ok() && adjoint.ok(),
          ident.str("T_A(A) - 1") + "; " + ident_p.str("T_A;p(A^(1-p)) - p") + "; " +
              adjoint.str("self-adjointness")};
}

std::vector<std::vector<double>> figure_rows(const std::string& id) {
  std::istringstream in(cli::figure_csv(id));
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || !(std::isdigit(line[0]) || line[0] == '-')) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

Outcome figures() {
  std::ostringstream detail;
  bool ok = true;
  const auto endpoints = [&](const std::string& id, double first, double last) {
    const auto rows = figure_rows(id);
    Worst w{1e-9};
    for (std::size_t k = 1; k < rows.front().size(); ++k) {
      w.add(std::abs(rows.front()[k] - first));
      w.add(std::abs(rows.back()[k] - last));
    }
    ok = ok && w.ok();
    detail << id << (w.ok() ? " ok " : " FAIL ") << w.str("endpoint error") << "; ";
  };
  endpoints("fig1a", 1.0, 0.0);
  endpoints("fig1b", 1.0, 0.0);
  endpoints("fig2a", 0.5, 0.0);
  endpoints("fig2b", 0.0, 0.0);
  return {ok, detail.str()};
}

Outcome determinism() {
  const verify::FuzzConfig config;
  std::ostringstream out1, out2, err;
  const int c1 = cli::cmd_verify(config, "", out1, err);
  const int c2 = cli::cmd_verify(config, "", out2, err);
  const bool same = out1.str() == out2.str() && !out1.str().empty();
  std::ostringstream detail;
  detail << "report bytes " << out1.str().size() << ", identical " << (same ? "yes" : "no")
         << ", exit codes " << c1 << "/" << c2;
  return {same, detail.str()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "closed-form limits", limits},
      {2, "pure-state formula", pure_formula},
      {3, "upper bound sharpness", upper_bound},
      {4, "telescopic Pinsker", pinsker},
      {5, "relative entropy bound", tau_bound},
      {6, "Holevo bound", holevo},
      {7, "maximality", maximality},
      {8, "TRRE bounds", trre_bounds},
      {9, "oracle equivalence", oracles},
      {10, "Frechet identities", frechet_identities},
      {11, "figure endpoints", figures},
      {12, "determinism", determinism},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.passed;
    std::printf("criterion %2d %s  %s: %s\n", c.id, o.passed ? "PASS" : "FAIL", c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
