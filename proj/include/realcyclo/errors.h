// Copyright 2026 The realcyclo Authors.
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
#ifndef REALCYCLO_ERRORS_H_
#define REALCYCLO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace realcyclo {

// Parameters outside the supported domain (r < 3, bad transform length, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A modulus that does not carry the roots of unity an operation needs.
class InadmissibleModulusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input shapes or degrees that violate an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace realcyclo

#endif  // REALCYCLO_ERRORS_H_
