// Copyright 2026 The Orlicz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (e.g. Phi(t) with t < 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of the operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A Young function that is not strict (Delta_2 or Lambda fails, or Phi is
/// not finite) was handed to an operation that needs a strict one.
class NotStrictError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// FIO amplitude orders violate the strict order threshold.
class OrderViolationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Phi vanishes at a positive argument.
class DegenerateFunctionError : public Error {
 public:
  using Error::Error;
};

/// Squeezing constants are unbounded on the grid: the exponents handed in
/// are inconsistent with the function.
class SqueezingViolationError : public Error {
 public:
  using Error::Error;
};

/// A bisection bracket could not be established.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A symbol derivative is missing and finite differences are disabled.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A symbol returned a non-finite value, or was evaluated off its lattice.
class SymbolEvaluationError : public Error {
 public:
  using Error::Error;
};

/// Problem size beyond the direct-quadrature limits.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed descriptor or file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace orlicz
