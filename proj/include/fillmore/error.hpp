/*
 * Copyright 2026 The fillmore authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace fillmore {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (scalar strings, documents, CLI arguments).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A caller violated a documented precondition (scalar matrix, trace
/// mismatch, zero pivot, non-prime modulus, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Two operands live in different rings.
class RingMismatchError : public PreconditionError {
public:
    explicit RingMismatchError(const std::string& what) : PreconditionError(what) {}
};

/// Inversion hit a singular matrix; carries the first column with no pivot.
class SingularMatrixError : public PreconditionError {
public:
    SingularMatrixError(const std::string& what, int column)
        : PreconditionError(what), column_(column) {}

    /// 1-based index of the column where elimination failed.
    int column() const { return column_; }

private:
    int column_;
};

/// A postcondition the algorithms guarantee did not hold; always a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace fillmore
