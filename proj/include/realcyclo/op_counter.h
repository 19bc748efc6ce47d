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
#ifndef REALCYCLO_OP_COUNTER_H_
#define REALCYCLO_OP_COUNTER_H_

#include <cstdint>

namespace realcyclo {

// Arithmetic operation tally for the fast transforms. Callers own the
// counter; a null pointer disables counting.
struct OpCounter {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;

  std::uint64_t total() const { return mul + add; }
  void reset() { mul = add = 0; }
};

inline void CountOps(OpCounter* ops, std::uint64_t muls, std::uint64_t adds) {
  if (ops != nullptr) {
    ops->mul += muls;
    ops->add += adds;
  }
}

}  // namespace realcyclo

#endif  // REALCYCLO_OP_COUNTER_H_
