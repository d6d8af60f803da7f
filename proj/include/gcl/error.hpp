// Copyright 2026 The gcl Authors
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

#ifndef GCL_ERROR_HPP_
#define GCL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcl {

// Base of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed context or expression text. `line()` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A configured size limit would be exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t required, std::size_t cap)
      : Error(what + " = " + std::to_string(required) + " exceeds cap " +
              std::to_string(cap) + " (raise it to at least " +
              std::to_string(required) + ")"),
        required_(required),
        cap_(cap) {}

  std::size_t required() const { return required_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

// Precondition violation: width mismatch, out-of-range index, X not in E_F...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace gcl

#endif  // GCL_ERROR_HPP_
