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


#include "tre/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "tre/entropy.hpp"
#include "tre/error.hpp"
#include "tre/renyi.hpp"
#include "tre/state_io.hpp"

namespace tre::cli {

namespace {

const std::vector<double> kFigureA{0.01, 0.1, 0.3, 0.5, 0.7, 0.9};

nlohmann::json entropy_json(const EntropyValue& v, double scale) {
  if (!v.is_finite()) return "inf";
  return v.value() * scale;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return format_number(v.get<double>());
  return v.dump();
}

// Flat records become a header row and a value row; nested objects are
// flattened with a dotted prefix.
void flatten(const nlohmann::json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cells) {
  for (const auto& [k, v] : j.items()) {
    const std::string name = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      flatten(v, name, cells);
    } else {
      cells.emplace_back(name, csv_cell(v));
    }
  }
}

std::string to_csv(const nlohmann::json& record) {
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(record, "", cells);
  std::string head, row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) {
      head += ',';
      row += ',';
    }
    head += cells[i].first;
    row += cells[i].second;
  }
  return head + "\n" + row + "\n";
}

std::string render(const nlohmann::json& record, Format format) {
  return format == Format::json ? record.dump(2) + "\n" : to_csv(record);
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

std::string figure_header(const std::string& id) {
  if (id == "fig1a") {
    return "# fig1a: S_a(rho||sigma), rho=|0><0|, sigma=diag(x,1-x); columns: x, then S_a for "
           "each a";
  }
  if (id == "fig1b") {
    return "# fig1b: S_a(rho||sigma), rho=diag(2/3,1/3), sigma=diag(x,1-x); columns: x, then "
           "S_a for each a";
  }
  if (id == "fig2a") {
    return "# fig2a: S_a(rho||sigma), rho=I/2, sigma=|1><1|; columns: a, S_a (a=0 and a=1 rows "
           "are the closed-form limits)";
  }
  return "# fig2b: S_a(rho||sigma), rho=I/2, sigma=diag(1/5,4/5); columns: a, S_a (a=0 and a=1 "
         "rows are the closed-form limits)";
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::json compute_record(const DensityMatrix& rho, const DensityMatrix& sigma, double a,
                              std::optional<double> p, bool bits) {
  require_same_dim(rho.matrix(), sigma.matrix());
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("--a must lie in [0,1]");
  if (p && !(*p > 0.0 && *p < 1.0)) throw DomainError("--p must lie in (0,1)");
  if (p && a == 1.0) throw DomainError("Q_{p,a} needs a < 1");
  const double scale = bits ? 1.0 / std::numbers::ln2 : 1.0;

  nlohmann::json r;
  r["S_a"] = telescopic_relative_entropy(rho, sigma, a);
  r["T"] = trace_norm_distance(rho, sigma);
  r["S_0"] = tre_limit_zero(rho, sigma);
  r["S_1"] = tre_limit_one(rho, sigma);
  if (p) {
    const RenyiValue q = trre_value(rho, sigma, *p, a);
    r["Q_pa"] = q.q;
    r["overlap"] = q.overlap;
  }
  r["relative_entropy"] = entropy_json(relative_entropy(rho, sigma), scale);
  r["relative_entropy_tau"] =
      entropy_json(relative_entropy(rho, telescope_mix(rho, sigma, a)), scale);
  r["entropy_rho"] = von_neumann_entropy(rho) * scale;
  r["entropy_sigma"] = von_neumann_entropy(sigma) * scale;

  nlohmann::json meta;
  meta["dim"] = rho.dim();
  meta["a"] = a;
  if (p) meta["p"] = *p;
  meta["units"] = bits ? "bits" : "nats";
  meta["rank_factor"] = RankTolerance::default_rank_factor();
  meta["trace_tolerance"] = kTraceTolerance;
  meta["hermitian_tolerance"] = kHermitianTolerance;
  meta["support_leak_tolerance"] = kSupportLeakTolerance;
  r["metadata"] = meta;
  return r;
}

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DensityMatrix rho = load_state_file(opts.rho_file);
    const DensityMatrix sigma = load_state_file(opts.sigma_file);
    const nlohmann::json r = compute_record(rho, sigma, opts.a, opts.p, opts.bits);
    write_output(opts.out, render(r, opts.format), out);
    return kExitOk;
  });
}

std::string figure_csv(const std::string& id, int grid) {
  if (id != "fig1a" && id != "fig1b" && id != "fig2a" && id != "fig2b") {
    throw DomainError("unknown figure '" + id + "' (expected fig1a, fig1b, fig2a or fig2b)");
  }
  if (grid < 2) throw DomainError("--grid must be at least 2");
  std::ostringstream os;
  os << figure_header(id) << "\n";
  const auto node = [grid](int i) {
    return i == grid - 1 ? 1.0 : static_cast<double>(i) / (grid - 1);
  };

  if (id[3] == '1') {
    const double r0 = id == "fig1a" ? 1.0 : 2.0 / 3.0;
    const double rp[2] = {r0, 1.0 - r0};
    const DensityMatrix rho = DensityMatrix::diagonal(rp);
    os << "x";
    for (double a : kFigureA) os << ",S_a(a=" << format_number(a) << ")";
    os << "\n";
    for (int i = 0; i < grid; ++i) {
      const double x = node(i);
      const double sp[2] = {x, 1.0 - x};
      const DensityMatrix sigma = DensityMatrix::diagonal(sp);
      os << format_number(x);
      for (double a : kFigureA) os << "," << format_number(telescopic_relative_entropy(rho, sigma, a));
      os << "\n";
    }
    return os.str();
  }

  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  const double sp[2] = {id == "fig2a" ? 0.0 : 0.2, id == "fig2a" ? 1.0 : 0.8};
  const DensityMatrix sigma = DensityMatrix::diagonal(sp);
  os << "a,S_a\n";
  for (int i = 0; i < grid; ++i) {
    const double a = node(i);
    os << format_number(a) << "," << format_number(telescopic_relative_entropy(rho, sigma, a))
       << "\n";
  }
  return os.str();
}

int cmd_figure(const std::string& id, int grid, const std::string& out_file, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    write_output(out_file, figure_csv(id, grid), out);
    return kExitOk;
  });
}

int cmd_verify(const verify::FuzzConfig& config, const std::string& out_file, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const verify::VerificationReport report = verify::run_fuzz(config);
    write_output(out_file, report.to_json().dump(2) + "\n", out);
    for (const auto& c : report.checks) {
      err << (c.failures == 0 ? "PASS " : "FAIL ") << c.name << ": " << c.trials
          << " trials, " << c.failures << " failures, worst margin "
          << format_number(c.worst_margin) << "\n";
    }
    return report.passed() ? kExitOk : kExitCheckFailed;
  });
}

nlohmann::json pure_record(double t, double a) {
  const PureTREInputs in = PureTREInputs::make(t, a);
  return {{"t", t}, {"a", a}, {"w", in.w}, {"S_a", tre_pure_closed_form(t, a)},
          {"limit", t * t}};
}

int cmd_pure(double t, double a, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << render(pure_record(t, a), format);
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Telescopic relative entropy toolkit", "tre"};
  app.require_subcommand(1);
  double rank_eps = RankTolerance::default_rank_factor();
  app.add_option("--rank-eps", rank_eps,
                 "Relative numerical-rank factor: eigenvalues <= eps*dim*lambda_max count as 0")
      ->check(CLI::NonNegativeNumber);

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};

  ComputeOptions copts;
  auto* compute = app.add_subcommand("compute", "Evaluate S_a, T, the limits and Q_{p,a}");
  compute->add_option("rho", copts.rho_file, "State file for rho")->required();
  compute->add_option("sigma", copts.sigma_file, "State file for sigma")->required();
  compute->add_option("--a", copts.a, "Mixing parameter in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  compute->add_option("--p", copts.p, "Renyi order in (0,1)");
  compute->add_option("--format", copts.format, "json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  compute->add_flag("--bits", copts.bits, "Report entropies in bits");
  compute->add_option("--out", copts.out, "Output file (default stdout)");

  std::string fig_id, fig_out;
  int grid = kDefaultGrid;
  auto* figure = app.add_subcommand("figure", "Emit figure data as CSV");
  figure->add_option("id", fig_id, "fig1a, fig1b, fig2a or fig2b")->required();
  figure->add_option("--grid", grid, "Number of grid points (>= 2)");
  figure->add_option("--out", fig_out, "Output file (default stdout)");

  verify::FuzzConfig vcfg;
  std::string verify_out;
  bool no_rank_deficient = false, no_limits = false;
  auto* ver = app.add_subcommand("verify", "Run the randomised property checks");
  ver->add_option("--dims", vcfg.dims, "Dimensions, comma separated")->delimiter(',');
  ver->add_option("--trials", vcfg.trials, "Trials per dimension");
  ver->add_option("--seed", vcfg.seed, "Master seed")->envname("TRE_SEED");
  ver->add_option("--slack", vcfg.slack, "Allowed violation per check");
  ver->add_option("--a-grid", vcfg.a_grid, "a values in [0,1]")->delimiter(',');
  ver->add_option("--p-grid", vcfg.p_grid, "p values in (0,1)")->delimiter(',');
  ver->add_option("--threads", vcfg.threads, "Worker threads");
  ver->add_flag("--no-rank-deficient", no_rank_deficient, "Skip the rank-deficient stratum");
  ver->add_flag("--no-limits", no_limits, "Skip the endpoint extrapolation checks");
  ver->add_option("--out", verify_out, "Report file (default stdout)");

  double t = 0.0, pa = 0.5;
  Format pure_format = Format::json;
  auto* pure = app.add_subcommand("pure", "Closed form for two pure states");
  pure->add_option("--t", t, "Trace distance in [0,1]")->required();
  pure->add_option("--a", pa, "Mixing parameter in (0,1)")->required();
  pure->add_option("--format", pure_format, "json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RankTolerance::set_default_rank_factor(rank_eps);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (compute->parsed()) return cmd_compute(copts, out, err);
  if (figure->parsed()) return cmd_figure(fig_id, grid, fig_out, out, err);
  if (ver->parsed()) {
    vcfg.include_rank_deficient = !no_rank_deficient;
    vcfg.include_limits = !no_limits;
    try {
      vcfg.validate();
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    return cmd_verify(vcfg, verify_out, out, err);
  }
  return cmd_pure(t, pa, pure_format, out, err);
}

}  // namespace tre::cli
