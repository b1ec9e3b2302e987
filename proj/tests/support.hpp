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


// Generators and comparisons shared by the unit tests.

#ifndef TRE_TESTS_SUPPORT_HPP
#define TRE_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <utility>

#include "tre/matfun.hpp"
#include "tre/states.hpp"

namespace tre::testing {

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double max_diff(const Matrix& a, const Matrix& b) { return max_abs(a - b); }

inline Matrix random_hermitian(Eigen::Index dim, SeededSampler& s) {
  Matrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = s.complex_gaussian();
  return (g + g.adjoint()) / 2.0;
}

/// U diag(lambda) U* with lambda log-uniform in [lo, hi].
inline Matrix random_positive_definite(Eigen::Index dim, SeededSampler& s, double lo = 0.05,
                                       double hi = 5.0) {
  const Matrix u = haar_random_unitary(dim, s);
  RealVector lambda(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    lambda(i) = std::exp(s.uniform(std::log(lo), std::log(hi)));
  }
  return u * lambda.asDiagonal() * u.adjoint();
}

inline Matrix diag(std::initializer_list<double> d) {
  RealVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

inline DensityMatrix state_diag(std::initializer_list<double> d) { return DensityMatrix(diag(d)); }

/// Random pair drawn from a stratum chosen by `kind`: 0 faithful, 1 rank
/// deficient, 2 pure, 3 orthogonal.
inline std::pair<DensityMatrix, DensityMatrix> random_pair(int kind, Eigen::Index dim,
                                                           SeededSampler& s) {
  switch (kind % 4) {
    case 0: {
      DensityMatrix r = random_mixed_hs(dim, dim, s);
      return {r, random_mixed_hs(dim, dim, s)};
    }
    case 1: {
      const auto r1 = static_cast<Eigen::Index>(s.uniform_int(1, static_cast<std::uint64_t>(dim)));
      const auto r2 = static_cast<Eigen::Index>(s.uniform_int(1, static_cast<std::uint64_t>(dim - 1)));
      DensityMatrix r = random_mixed_hs(dim, r1, s);
      return {r, random_mixed_hs(dim, r2, s)};
    }
    case 2: {
      DensityMatrix r = haar_random_pure(dim, s);
      return {r, haar_random_pure(dim, s)};
    }
    default:
      return random_orthogonal_pair(dim, s);
  }
}

}  // namespace tre::testing

#endif  // TRE_TESTS_SUPPORT_HPP
