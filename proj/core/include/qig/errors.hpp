// Copyright 2026 The qig Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace qig {

// Root of the qig exception hierarchy. Everything thrown on purpose by this
// library derives from Error, so callers can catch one type at the boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input fails a hermiticity check (relative to its largest entry).
class NotHermitian : public Error {
 public:
  using Error::Error;
};

// Operands have incompatible shapes.
class DimMismatch : public Error {
 public:
  using Error::Error;
};

// Requested dimensions are out of range (non-positive, non-square, ...).
class BadDims : public Error {
 public:
  using Error::Error;
};

// Density matrix trace differs from one beyond tolerance.
class TraceNotOne : public Error {
 public:
  using Error::Error;
};

// Density matrix has an eigenvalue below the faithfulness floor.
class NotFaithful : public Error {
 public:
  using Error::Error;
};

// Scalar argument outside the mathematical domain (x <= 0, beta out of (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Observable required to be traceless is not.
class NotTraceless : public Error {
 public:
  using Error::Error;
};

// Kraus family does not sum to the identity (trace preservation).
class NotTracePreserving : public Error {
 public:
  using Error::Error;
};

// A theorem's pointwise hypothesis on (f, g, c) fails; the check makes no claim.
class ConditionViolated : public Error {
 public:
  using Error::Error;
};

// Malformed JSON / CSV / CLI function spec.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qig
