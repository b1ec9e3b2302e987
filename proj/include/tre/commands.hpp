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


#ifndef TRE_COMMANDS_HPP
#define TRE_COMMANDS_HPP

// Command layer behind the `tre` executable. Each command writes its result
// to `out` (or to a file) and diagnostics to `err`, and returns the process
// exit code: 0 success, 1 a verification check failed, 2 usage or input
// error.

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "tre/states.hpp"
#include "tre/verify.hpp"

namespace tre::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default figure grid resolution.
inline constexpr int kDefaultGrid = 101;

enum class Format { json, csv };

struct ComputeOptions {
  std::string rho_file;
  std::string sigma_file;
  double a = 0.5;
  std::optional<double> p;
  Format format = Format::json;
  bool bits = false;
  std::string out;  // empty: stdout
};

/// Record of every quantity for one pair. Entropies (S(rho||sigma),
/// S(rho||tau), S(rho), S(sigma)) are in nats unless `bits`; the telescopic
/// quantities are ratios and carry no unit.
nlohmann::json compute_record(const DensityMatrix& rho, const DensityMatrix& sigma, double a,
                              std::optional<double> p, bool bits);

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err);

/// CSV text of fig1a, fig1b, fig2a or fig2b; throws DomainError on a bad id
/// or a grid below 2.
std::string figure_csv(const std::string& id, int grid = kDefaultGrid);

int cmd_figure(const std::string& id, int grid, const std::string& out_file, std::ostream& out,
               std::ostream& err);

/// Writes the JSON report to `out_file` (or `out`), and a one-line summary
/// per check to `err`.
int cmd_verify(const verify::FuzzConfig& config, const std::string& out_file, std::ostream& out,
               std::ostream& err);

nlohmann::json pure_record(double t, double a);

int cmd_pure(double t, double a, Format format, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form, independent of the C locale; "inf",
/// "-inf" and "nan" for non-finite values.
std::string format_number(double x);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tre::cli

#endif  // TRE_COMMANDS_HPP
