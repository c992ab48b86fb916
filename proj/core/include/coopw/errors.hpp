// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace coopw {

// Input lies outside the mathematical domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative refinement exhausted its budget without certifying the result.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coopw
