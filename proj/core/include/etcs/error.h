// Copyright 2026 The etcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ETCS_ERROR_H_
#define ETCS_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace etcs {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data violates a documented invariant or precondition. The CLI maps
// this to exit code 1.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(what), message_(what) {}
  ValidationError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what),
        path_(std::move(path)),
        message_(what) {}

  // JSON-style field path of the offending value, empty when not applicable.
  const std::string& path() const { return path_; }
  // The violated rule, without the path.
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  std::string message_;
};

// Inputs are individually valid but jointly inconsistent: a non-integral
// nu-bar, a failed cross-check, a broken internal identity. Exit code 2.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// The requested quantity is not determined by the formulas implemented here.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace etcs

#endif  // ETCS_ERROR_H_
