// Copyright 2026 The cachemarket Authors
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

#ifndef CACHEMARKET_ERROR_H_
#define CACHEMARKET_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cachemarket {

enum class ErrorCode {
  kInvalidArgument,
  kInfeasible,
  kNumerical,
  kValidation,
};

// Base class for every error raised by the library. The code maps directly
// onto the command-line exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what)
      : Error(ErrorCode::kInfeasible, what) {}
};

class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(ErrorCode::kNumerical, what), residual_(residual) {}

  // Error estimate or residual reported by the failing routine.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// An iterative method ran out of iterations. Carries the (z, omega) history.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double residual,
                   std::vector<std::pair<double, double>> history)
      : NumericalError(what, residual), history_(std::move(history)) {}

  const std::vector<std::pair<double, double>>& history() const noexcept {
    return history_;
  }

 private:
  std::vector<std::pair<double, double>> history_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::kValidation, what) {}
};

inline void Require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace cachemarket

#endif  // CACHEMARKET_ERROR_H_
