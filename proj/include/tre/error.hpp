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

#ifndef TRE_ERROR_HPP
#define TRE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tre {

// Input outside the mathematical domain of an operation (bad parameter,
// non-Hermitian matrix, singular operator where full rank is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An eigenvalue fell below the negative rank tolerance.
class NotPsdError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(long lhs, long rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

}  // namespace tre

#endif  // TRE_ERROR_HPP
