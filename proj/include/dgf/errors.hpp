/*
   Copyright 2026 The dgf Authors

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

#ifndef DGF_ERRORS_HPP
#define DGF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument: unknown name, parameter out of range, length mismatch.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Evaluation outside the region where the object is defined
/// (divergent Dirichlet series, s <= 1 for zeta, non-integer term values).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The master equation has no polynomial-in-p value for a generic prime.
class BellUnavailable : public Error {
public:
    BellUnavailable() : Error("prime-uniform Bell series unavailable") {}
    explicit BellUnavailable(const std::string& detail)
        : Error("prime-uniform Bell series unavailable: " + detail) {}
};

/// No rational function within the requested degree bound fits the series.
class DegreeBoundExceeded : public Error {
public:
    DegreeBoundExceeded() : Error("degree bound exceeded") {}
};

/// Syntax error in an expression; column is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t column)
        : Error(what + " at column " + std::to_string(column)), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Malformed b-file input; line is 1-based (0 when the file is empty).
class BFileError : public Error {
public:
    BFileError(const std::string& what, std::size_t line)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace dgf

#endif
