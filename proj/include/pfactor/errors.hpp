/*
   Copyright 2026 The pfactor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace pfactor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ambient dimension, field or shape mismatch between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A spanning list that is linearly dependent beyond tolerance.
class DependentBasisError : public Error {
public:
    using Error::Error;
};

/// An iterative method failed to converge within its iteration cap.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of an operation (zero vector, {0} subspace,
/// grade overflow, bad index, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Structural validation failure of a composite input (a "partition" whose
/// parts are not orthogonal, a coordinate basis that is not orthogonal, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Grade mismatch or overflow in exterior-algebra operations.
class GradeError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace pfactor
