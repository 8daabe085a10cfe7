/*
   Copyright 2026 The quatfact authors

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

namespace quatfact {

/// Base class of all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic attempted between quadratic-extension scalars with different
/// defining polynomials.
struct ModulusMismatch : Error {
    using Error::Error;
};

/// Inversion of a quaternion with vanishing norm (zero, or a zero divisor in
/// a quadratic extension).
struct ZeroNorm : Error {
    using Error::Error;
};

/// Exact polynomial division requested but the remainder is nonzero.
struct NotDivisible : Error {
    using Error::Error;
};

/// A rational polynomial has an irreducible factor over the rationals that is
/// not a quadratic with negative discriminant.
struct NotQuadraticallySplit : Error {
    using Error::Error;
};

/// The quadratic divides the quaternionic polynomial itself, so the right
/// factor with that norm is not unique.
struct MDividesQ : Error {
    using Error::Error;
};

/// No linear right factor with the requested norm exists.
struct NoRightFactor : Error {
    using Error::Error;
};

struct NotARightFactor : Error {
    using Error::Error;
};

/// A real quadratic whose canonical splitting would need an irrational
/// coefficient.
struct NotRationallyEmbeddable : Error {
    using Error::Error;
};

/// The norm polynomial does not split as P(t) * R(s); no factorization exists.
struct NotSeparable : Error {
    using Error::Error;
};

struct InternalInconsistency : Error {
    using Error::Error;
};

struct NoCommutingFactor : Error {
    using Error::Error;
};

struct DifferentPolynomials : Error {
    using Error::Error;
};

struct ZeroInput : Error {
    using Error::Error;
};

struct NotOnNullQuadric : Error {
    using Error::Error;
};

struct MNotFactorOfP : Error {
    using Error::Error;
};

/// Input polynomial has s-degree greater than one after expansion.
struct DegreeError : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int column_)
        : Error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(column_)),
          line(line_),
          column(column_) {}
};

}  // namespace quatfact
