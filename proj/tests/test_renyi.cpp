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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "tre/error.hpp"
#include "tre/renyi.hpp"

using namespace tre;
using namespace tre::testing;

TEST_CASE("psd_power conventions") {
  CHECK(max_diff(psd_power(diag({4.0, 0.0}), 0.5), diag({2.0, 0.0})) < 1e-15);
  CHECK(max_diff(psd_power(diag({0.3, 0.0}), 0.0), diag({1.0, 0.0})) < 1e-15);
  CHECK(max_diff(psd_power(diag({0.3, 0.7}), 1.0), diag({0.3, 0.7})) < 1e-15);
}

TEST_CASE("Renyi overlap examples") {
  const DensityMatrix rho = state_diag({0.7, 0.3});
  const DensityMatrix sigma = state_diag({0.3, 0.7});
  for (double p : {0.0, 0.2, 0.5, 1.0}) CHECK(renyi_overlap(rho, rho, p) == doctest::Approx(1.0));
  CHECK(renyi_overlap(state_diag({1, 0}), state_diag({0, 1}), 0.5) == 0.0);
  CHECK(renyi_overlap(rho, sigma, 0.5) == doctest::Approx(0.916515138991168).epsilon(1e-14));
  CHECK_THROWS_AS(renyi_overlap(rho, sigma, 1.5), DomainError);
  CHECK_THROWS_AS(renyi_overlap(rho, state_diag({1, 0, 0}), 0.5), DimensionMismatch);
}

TEST_CASE("Renyi overlap symmetry and floor") {
  SeededSampler s(103);
  for (int trial = 0; trial < 500; ++trial) {
    auto [rho, sigma] = random_pair(trial, 2 + trial % 4, s);
    const double p = s.uniform(0.05, 0.95);
    const double o = renyi_overlap(rho, sigma, p);
    CHECK(std::abs(o - renyi_overlap(sigma, rho, 1 - p)) < 1e-12);
    CHECK(o >= 1 - trace_norm_distance(rho, sigma) - 1e-9);
    CHECK(o <= 1 + 1e-12);
  }
}

TEST_CASE("telescoped overlap and TRRE on the commuting example") {
  const DensityMatrix rho = state_diag({0.7, 0.3});
  const DensityMatrix sigma = state_diag({0.3, 0.7});
  CHECK(renyi_overlap_telescoped(rho, sigma, 0.5, 0.5) ==
        doctest::Approx(0.978906312930703).epsilon(1e-14));
  const RenyiValue v = trre_value(rho, sigma, 0.5, 0.5);
  CHECK(v.q == doctest::Approx(0.0720183524724468).epsilon(1e-12));
  CHECK(v.q <= trace_norm_distance(rho, sigma));
  CHECK(trre(rho, sigma, 0.5, 0.5) == v.q);
}

TEST_CASE("TRRE extremes") {
  const DensityMatrix rho = state_diag({0.7, 0.3});
  CHECK(trre(rho, rho, 0.4, 0.3) == doctest::Approx(0.0));
  CHECK(renyi_overlap_telescoped(rho, rho, 0.4, 0.3) == doctest::Approx(1.0));
  SeededSampler s(107);
  for (int dim = 2; dim <= 6; ++dim) {
    auto [a, b] = random_orthogonal_pair(dim, s);
    for (double p : {0.1, 0.5, 0.9}) {
      for (double x : {0.0, 0.2, 0.7}) {
        CHECK(std::abs(trre(a, b, p, x) - 1.0) < 1e-10);
        CHECK(std::abs(renyi_overlap_telescoped(a, b, p, x) - std::pow(x, p)) < 1e-10);
      }
    }
    double prev = -1.0;
    for (int k = 0; k <= 20; ++k) {
      const double o = renyi_overlap_telescoped(a, b, 0.3, k / 21.0);
      CHECK(o >= prev);
      prev = o;
    }
  }
}

TEST_CASE("TRRE at a = 0 is one minus the plain overlap") {
  SeededSampler s(109);
  for (int trial = 0; trial < 100; ++trial) {
    auto [rho, sigma] = random_pair(trial, 3, s);
    CHECK(trre(rho, sigma, 0.4, 0.0) == doctest::Approx(1 - renyi_overlap(rho, sigma, 0.4)));
  }
}

TEST_CASE("TRRE domain") {
  const DensityMatrix rho = state_diag({0.7, 0.3});
  CHECK_THROWS_AS(trre(rho, rho, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(trre(rho, rho, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(trre(rho, rho, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(renyi_overlap_telescoped(rho, rho, 0.5, 1.5), DomainError);
}

TEST_CASE("TRRE bound suite") {
  SeededSampler s(113);
  for (int trial = 0; trial < 400; ++trial) {
    auto [rho, sigma] = random_pair(trial, 2 + trial % 4, s);
    const double t = trace_norm_distance(rho, sigma);
    for (int k = 1; k <= 9; ++k) {
      const double p = k / 10.0;
      for (double a : {0.0, 0.25, 0.5, 0.75}) {
        const RenyiValue v = trre_value(rho, sigma, p, a);
        CHECK(v.q <= t + 1e-9);
        CHECK(v.q >= -1e-9);
        CHECK(v.overlap >= std::pow(a, p) - 1e-9);
        CHECK(v.overlap <= 1 + 1e-9);
      }
    }
  }
}

TEST_CASE("derivative in a matches finite differences") {
  SeededSampler s(127);
  for (int trial = 0; trial < 100; ++trial) {
    auto [rho, sigma] = random_pair(trial, 2 + trial % 4, s);
    const double p = s.uniform(0.1, 0.9);
    const double a = s.uniform(0.1, 0.9);
    const double h = 1e-5;
    const double fd = (renyi_overlap_telescoped(rho, sigma, p, a + h) -
                       renyi_overlap_telescoped(rho, sigma, p, a - h)) /
                      (2 * h);
    CHECK(std::abs(telescoped_overlap_derivative(rho, sigma, p, a) - fd) < 1e-6);
  }
}
