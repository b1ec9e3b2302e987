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

#include "tre/renyi.hpp"

#include <cmath>
#include <sstream>

#include "tre/error.hpp"

namespace tre {

namespace {

void require_order(double p, bool open) {
  const bool ok = open ? (p > 0.0 && p < 1.0) : (p >= 0.0 && p <= 1.0);
  if (!ok) {
    std::ostringstream os;
    os << "Renyi order p must lie in " << (open ? "(0,1)" : "[0,1]") << ", got " << p;
    throw DomainError(os.str());
  }
}

}  // namespace

Matrix psd_power(const Matrix& a, double p, RankTolerance tol) {
  const PsdSpectrum ps = psd_decompose(a, tol);
  if (p == 0.0) return ps.support_projector();
  return ps.spectral.map([p](double x) { return x > 0.0 ? std::pow(x, p) : 0.0; });
}

double renyi_overlap(const DensityMatrix& rho, const DensityMatrix& sigma, double p) {
  require_same_dim(rho.matrix(), sigma.matrix());
  require_order(p, false);
  return trace_product(psd_power(rho.matrix(), 1.0 - p), psd_power(sigma.matrix(), p));
}

double renyi_overlap_telescoped(const DensityMatrix& rho, const DensityMatrix& sigma, double p,
                                double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("mixing parameter a must lie in [0,1]");
  return renyi_overlap(rho, telescope_mix(rho, sigma, a), p);
}

RenyiValue trre_value(const DensityMatrix& rho, const DensityMatrix& sigma, double p, double a) {
  require_order(p, true);
  if (!(a >= 0.0 && a < 1.0)) throw DomainError("trre: a must lie in [0,1)");
  const double overlap = renyi_overlap_telescoped(rho, sigma, p, a);
  return {overlap, (1.0 - overlap) / (1.0 - std::pow(a, p))};
}

double trre(const DensityMatrix& rho, const DensityMatrix& sigma, double p, double a) {
  return trre_value(rho, sigma, p, a).q;
}

double telescoped_overlap_derivative(const DensityMatrix& rho, const DensityMatrix& sigma,
                                     double p, double a) {
  require_order(p, true);
  if (!(a > 0.0 && a < 1.0)) throw DomainError("derivative needs a in (0,1)");
  const DensityMatrix tau = telescope_mix(rho, sigma, a);
  const Matrix v = psd_decompose(tau.matrix()).support_basis();
  const Matrix tau_c = compress(tau.matrix(), v);
  const Matrix delta_c = compress(rho.matrix() - sigma.matrix(), v);
  const Matrix rho_pow_c = compress(psd_power(rho.matrix(), 1.0 - p), v);
  return trace_product(rho_pow_c, frechet_power_map(tau_c, delta_c, p));
}

}  // namespace tre
