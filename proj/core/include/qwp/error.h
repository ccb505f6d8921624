// Copyright 2026 The qwp Authors
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

#ifndef QWP_ERROR_H
#define QWP_ERROR_H

#include <stdexcept>
#include <string>

namespace qwp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Predicates defined over different outcome spaces.
class SpaceMismatchError : public Error {
   public:
    using Error::Error;
};

/// An outcome label that is not an atom of the space.
class UnknownLabelError : public Error {
   public:
    using Error::Error;
};

/// An eigen- or singular-value decomposition did not converge.
/// Never folded into a boolean "false" answer.
class DecompositionError : public Error {
   public:
    using Error::Error;
};

/// A value violates a documented precondition (non-hermitian input to an
/// order test, weight outside [0, 1], non-monotone chain, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A program that is required to be trace preserving is not.
class TracePreservationError : public Error {
   public:
    using Error::Error;
};

/// A map produced an operator outside the state space.
class PositivityError : public Error {
   public:
    using Error::Error;
};

/// A predicate failed validation where a valid one was required.
class InvalidPredicateError : public Error {
   public:
    using Error::Error;
};

/// Input that does not follow one of the documented file formats.
class FormatError : public Error {
   public:
    using Error::Error;
};

}  // namespace qwp

#endif  // QWP_ERROR_H
