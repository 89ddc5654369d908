// Copyright 2026 The Plateau Authors
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

namespace plateau {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A qubit, slot or term index is outside its valid range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// Operand dimensions do not match (qubit counts, matrix sizes).
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// An input lies outside the mathematical domain of a function.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A computed quantity failed an internal consistency check.
class NumericError : public Error {
  public:
    using Error::Error;
};

/// A dense path was requested above the configured qubit cap.
class ResourceGuardError : public Error {
  public:
    using Error::Error;
};

/// A parameter assignment or circuit does not match its ansatz.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Malformed configuration or CSV input. `path()` names the offending field.
class ParseError : public Error {
  public:
    ParseError(std::string path, const std::string &message)
        : Error(path.empty() ? message : path + ": " + message),
          path_(std::move(path)) {}

    [[nodiscard]] const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace plateau
