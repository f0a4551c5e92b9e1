// Copyright 2026 The cheegerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cheegerlab {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated data invariant (CLI exit code 1).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class ContractViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A numeric argument outside the operation's domain.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Query point lies on the curve (winding number undefined).
class OnBoundaryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Inner offset of an arc would have nonpositive radius.
class DegenerateOffsetError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Hypothesis of an inequality is not met, so it cannot be evaluated.
class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Iterative solver failed to converge (CLI exit code 2).
class SolverError : public Error {
 public:
  using Error::Error;
};

// Power diagram produced an empty or otherwise unusable cell.
class DegenerateConfigurationError : public SolverError {
 public:
  using SolverError::SolverError;
};

class OptimizationError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Random fixture generation ran out of its rejection budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cheegerlab
