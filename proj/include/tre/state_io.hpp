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

#ifndef TRE_STATE_IO_HPP
#define TRE_STATE_IO_HPP

// JSON state files. Accepted shapes:
//
//   { "dim": n, "matrix": [[[re, im], ...], ...] }   row-major, "dim" optional
//   { "diag": [p0, p1, ...] }
//   { "pure": [[re, im], ...] }                       normalised on load
//   { "bloch": [x, y, z] }                            qubits only
//
// Matrix entries and pure amplitudes may also be plain numbers (real).

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tre/error.hpp"
#include "tre/states.hpp"

namespace tre {

/// Malformed state document; the message names the offending field.
class StateFormatError : public DomainError {
 public:
  using DomainError::DomainError;
};

DensityMatrix state_from_json(const nlohmann::json& doc);
nlohmann::json state_to_json(const DensityMatrix& rho);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& rows, const std::string& field = "matrix");

DensityMatrix load_state_file(const std::filesystem::path& path);

}  // namespace tre

#endif  // TRE_STATE_IO_HPP
