// Copyright 2026 The ergof Authors.
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

#ifndef ERGOF_ERROR_HPP
#define ERGOF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ergof {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The observed graph has p_hat in {0, 1}; null moments vanish and no test
/// statistic can be standardized or resampled.
class DegenerateGraph : public Error {
 public:
  using Error::Error;
};

/// The request exceeds the enumeration limits of a generic code path.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// Offset calibration could not reach the requested mean connectivity.
class CalibrationFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed graph or config input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace ergof

#endif  // ERGOF_ERROR_HPP
