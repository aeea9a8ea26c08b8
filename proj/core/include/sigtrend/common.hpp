// Copyright 2026 The sigtrend Authors
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

#ifndef SIGTREND_COMMON_HPP
#define SIGTREND_COMMON_HPP

#include <stdexcept>
#include <string>

namespace sigtrend {

// All arithmetic is done in the widest native binary format.
using real = long double;

// A value outside an operation's mathematical domain (non-positive where a
// positive number is required, duplicate abscissae, d > n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The least-squares system is too ill-conditioned to deliver the digits the
// precision plan asks for.
class ConditioningError : public std::runtime_error {
 public:
  ConditioningError(int degree, const std::string& what)
      : std::runtime_error(what), degree_(degree) {}
  [[nodiscard]] int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

}  // namespace sigtrend

#endif  // SIGTREND_COMMON_HPP
