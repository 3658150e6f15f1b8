// Copyright 2026 The pkdyn Authors
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

#ifndef PKDYN_ERRORS_HPP
#define PKDYN_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pkdyn {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arity/degree/dimension mismatch between operands.
struct ShapeError : Error {
    using Error::Error;
};

/// Input outside the mathematical domain of an operation (zero vector,
/// empty window, point on a pole, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A lift has a common zero away from the origin. Carries a witness
/// direction in homogeneous coordinates.
struct DegeneracyError : Error {
    std::vector<std::complex<double>> witness;
    DegeneracyError(const std::string& msg, std::vector<std::complex<double>> w)
        : Error(msg), witness(std::move(w)) {}
};

/// A documented precondition of the operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// Requested computation exceeds a configured cap.
struct ResourceError : Error {
    using Error::Error;
};

/// The operation is not defined for this input class (non-dilating germ,
/// non-polynomial map, ...).
struct UnsupportedError : Error {
    using Error::Error;
};

/// A small divisor below the guard threshold without an exact resonance.
struct IllConditionedError : Error {
    using Error::Error;
};

/// A catalog constructor could not satisfy its constraint system.
struct ConstructionError : Error {
    using Error::Error;
};

/// Evaluation requested at (or too close to) a lattice point.
struct PoleError : Error {
    using Error::Error;
};

/// Malformed input file.
struct ParseError : Error {
    using Error::Error;
};

/// An internal invariant failed; indicates a bug, not a user error.
struct InternalError : Error {
    using Error::Error;
};

/// Inputs declared commuting turn out not to commute.
struct CommutationViolationError : Error {
    using Error::Error;
};

}  // namespace pkdyn

#endif  // PKDYN_ERRORS_HPP
