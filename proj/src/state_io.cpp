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

#include "tre/state_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace tre {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw StateFormatError("field '" + field + "': " + what);
}

Complex complex_from_json(const json& v, const std::string& field) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail(field, "expected a number or a [re, im] pair");
}

std::string indexed(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

}  // namespace

Matrix matrix_from_json(const json& rows, const std::string& field) {
  if (!rows.is_array() || rows.empty()) fail(field, "expected a non-empty array of rows");
  const std::size_t n = rows.size();
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n)
      fail(indexed(field, i), "expected a row of " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          complex_from_json(row[j], indexed(indexed(field, i), j));
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

DensityMatrix state_from_json(const json& doc) {
  if (!doc.is_object()) fail("<root>", "expected a JSON object");
  try {
    if (doc.contains("matrix")) {
      Matrix m = matrix_from_json(doc["matrix"], "matrix");
      if (doc.contains("dim")) {
        if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() != m.rows())
          fail("dim", "does not match the matrix size " + std::to_string(m.rows()));
      }
      return DensityMatrix(std::move(m));
    }
    if (doc.contains("diag")) {
      const json& d = doc["diag"];
      if (!d.is_array() || d.empty()) fail("diag", "expected a non-empty array of numbers");
      std::vector<double> p;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (!d[i].is_number()) fail(indexed("diag", i), "expected a number");
        p.push_back(d[i].get<double>());
      }
      return DensityMatrix::diagonal(p);
    }
    if (doc.contains("pure")) {
      const json& v = doc["pure"];
      if (!v.is_array() || v.empty()) fail("pure", "expected a non-empty array of amplitudes");
      ComplexVector psi(static_cast<Eigen::Index>(v.size()));
      for (std::size_t i = 0; i < v.size(); ++i)
        psi(static_cast<Eigen::Index>(i)) = complex_from_json(v[i], indexed("pure", i));
      return pure_from_vector(psi);
    }
    if (doc.contains("bloch")) {
      const json& b = doc["bloch"];
      if (!b.is_array() || b.size() != 3 || !b[0].is_number() || !b[1].is_number() ||
          !b[2].is_number())
        fail("bloch", "expected [x, y, z]");
      return from_bloch(b[0].get<double>(), b[1].get<double>(), b[2].get<double>());
    }
  } catch (const StateFormatError&) {
    throw;
  } catch (const DomainError& e) {
    throw StateFormatError(std::string("invalid state: ") + e.what());
  }
  fail("<root>", "expected one of 'matrix', 'diag', 'pure', 'bloch'");
}

json state_to_json(const DensityMatrix& rho) {
  return json{{"dim", rho.dim()}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StateFormatError("cannot open state file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw StateFormatError(path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

}  // namespace tre
