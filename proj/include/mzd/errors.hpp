// Copyright 2026 The mzduality Authors
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

namespace mzd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes that do not factor or exceed the supported joint dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Scalar argument outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition (non-Hermitian input, bad basis, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The selected output port has zero detection probability for every phase.
class DegeneratePortError : public Error {
 public:
  using Error::Error;
};

/// The closed-form joint-measurability test only covers an unbiased second observable.
class UnsupportedRegimeError : public Error {
 public:
  using Error::Error;
};

class InvalidObservableError : public Error {
 public:
  using Error::Error;
};

class InfeasibleWitnessError : public Error {
 public:
  using Error::Error;
};

/// Malformed scenario, strategy, observable or matrix literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mzd
