// Copyright 2026 The tsemi Authors
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

#ifndef TSEMI_ERROR_HPP_
#define TSEMI_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tsemi {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: invalid size, state out of range, mismatched dimensions,
/// unmet precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, or 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept {
    return line_;
  }

 private:
  std::size_t line_;
};

/// A configured cap (closure size, subset count, enumeration size) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A computed object failed a post-condition that must always hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tsemi

#endif  // TSEMI_ERROR_HPP_
