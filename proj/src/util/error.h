// util/error.h

// Copyright 2026  Daptain Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DAPTAIN_UTIL_ERROR_H_
#define DAPTAIN_UTIL_ERROR_H_

#include <stdexcept>
#include <string>

namespace daptain {

// Error taxonomy shared by the library and the command-line driver.  Each
// class carries the process exit code the driver reports when the error
// escapes to main.
class Error : public std::runtime_error {
 public:
  Error(const std::string& msg, int exit_code)
      : std::runtime_error(msg), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// Invalid configuration: unknown keys, out-of-range values, bad shapes.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg, 2) {}
};

// Filesystem and format failures: missing files, malformed containers.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg, 3) {}
};

// Inputs that are structurally valid but too degenerate to process, e.g. a
// clip shorter than one analysis window.
class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string& msg) : Error(msg, 3) {}
};

// Numerical failures during optimization: non-finite losses or gradients.
class TrainingError : public Error {
 public:
  explicit TrainingError(const std::string& msg) : Error(msg, 4) {}
};

// Checksum or container violations in serialized artifacts.
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& msg) : Error(msg, 5) {}
};

}  // namespace daptain

#endif  // DAPTAIN_UTIL_ERROR_H_
