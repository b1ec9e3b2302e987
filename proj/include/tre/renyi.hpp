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

#ifndef TRE_RENYI_HPP
#define TRE_RENYI_HPP

#include "tre/states.hpp"

namespace tre {

/// Overlap tr rho^{1-p} tau^p and the normalised deficit
/// Q_{p,a} = (1 - overlap) / (1 - a^p), tau = a rho + (1-a) sigma.
struct RenyiValue {
  double overlap;
  double q;
};

/// A^p on the spectrum of a PSD matrix: 0^p = 0 for p > 0 and A^0 = {A}.
Matrix psd_power(const Matrix& a, double p, RankTolerance tol = {});

/// tr rho^{1-p} sigma^p, p in [0,1].
double renyi_overlap(const DensityMatrix& rho, const DensityMatrix& sigma, double p);

/// tr rho^{1-p} (a rho + (1-a) sigma)^p; lies in [a^p, 1].
double renyi_overlap_telescoped(const DensityMatrix& rho, const DensityMatrix& sigma, double p,
                                double a);

/// Telescopic relative Renyi entropy Q_{p,a}, p in (0,1), a in [0,1).
double trre(const DensityMatrix& rho, const DensityMatrix& sigma, double p, double a);
RenyiValue trre_value(const DensityMatrix& rho, const DensityMatrix& sigma, double p, double a);

/// d/da tr rho^{1-p} tau^p = tr rho^{1-p} T_{tau;p}(rho - sigma), computed on
/// supp tau. a in (0,1), p in (0,1).
double telescoped_overlap_derivative(const DensityMatrix& rho, const DensityMatrix& sigma,
                                     double p, double a);

}  // namespace tre

#endif  // TRE_RENYI_HPP
