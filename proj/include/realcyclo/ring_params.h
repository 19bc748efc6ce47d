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
#ifndef REALCYCLO_RING_PARAMS_H_
#define REALCYCLO_RING_PARAMS_H_

#include <cstdint>

#include "realcyclo/modarith.h"

namespace realcyclo {

// Dimension constants of Z[x]/(Psi_n) for a conductor n = 2^r 3^s.
//
//   s = 0:  dimension m = 2^(r-2), dct_length N = m,  root_order M = 4N = n
//   s >= 1: dimension m = 2^(r-1) 3^(s-1), dct_length N = 2m, root_order M = 4N
//
// In both cases m = phi(n)/2. Downstream code distinguishes the two cases
// only through dct_length / dimension, which is 1 or 2.
struct RingParams {
  int exp2 = 0;          // r
  int exp3 = 0;          // s
  u64 conductor = 0;     // n
  u64 dimension = 0;     // m, degree of Psi_n
  u64 dct_length = 0;    // N
  u64 root_order = 0;    // M, order of the root of unity the transforms need

  // Throws ParameterError unless r >= 3 and s >= 0 (and n fits in 62 bits).
  static RingParams Derive(int r, int s);

  // Psi_n = V_m (s = 0) or V_m - 1 (s >= 1).
  bool has_unit_shift() const { return exp3 >= 1; }

  friend bool operator==(const RingParams&, const RingParams&) = default;
};

// q prime and q = 1 mod M.
bool IsAdmissiblePrime(u64 q, const RingParams& params);

// Smallest admissible prime strictly greater than 'after'.
u64 NextAdmissiblePrime(const RingParams& params, u64 after = 0);

}  // namespace realcyclo

#endif  // REALCYCLO_RING_PARAMS_H_
