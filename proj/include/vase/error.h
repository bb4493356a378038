// Copyright 2026 The VasE Authors.
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

#ifndef VASE_ERROR_H_
#define VASE_ERROR_H_

#include <stdexcept>
#include <string>

namespace vase {

// Broad failure classes. The CLI maps these onto its exit codes.
enum class ErrorKind {
  kStructural,  // Malformed profile: unknown ids, duplicates, bad weights.
  kData,        // Bad input values: non-finite scores, parse failures.
  kCapacity,    // Input exceeds a documented size cap.
  kSolver,      // Numerical solver failed to converge.
  kUsage,       // Invalid arguments or options.
};

class VaseError : public std::runtime_error {
 public:
  VaseError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw VaseError(kind, message);
}

}  // namespace vase

#endif  // VASE_ERROR_H_
