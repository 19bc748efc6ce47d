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
#include "realcyclo/ring_params.h"

#include <string>

#include "realcyclo/errors.h"

namespace realcyclo {

RingParams RingParams::Derive(int r, int s) {
  if (r < 3 || s < 0) {
    throw ParameterError("conductor 2^r 3^s needs r >= 3 and s >= 0, got r=" +
                         std::to_string(r) + " s=" + std::to_string(s));
  }
  if (r + 2 * s > 60) throw ParameterError("conductor too large");

  RingParams p;
  p.exp2 = r;
  p.exp3 = s;
  u64 pow3 = 1;
  for (int i = 0; i < s; ++i) pow3 *= 3;
  p.conductor = (u64{1} << r) * pow3;
  if (s == 0) {
    p.dimension = u64{1} << (r - 2);
    p.dct_length = p.dimension;
  } else {
    p.dimension = (u64{1} << (r - 1)) * (pow3 / 3);
    p.dct_length = 2 * p.dimension;
  }
  p.root_order = 4 * p.dct_length;
  return p;
}

bool IsAdmissiblePrime(u64 q, const RingParams& params) {
  return q >= 3 && (q - 1) % params.root_order == 0 && IsPrime(q);
}

u64 NextAdmissiblePrime(const RingParams& params, u64 after) {
  const u64 step = params.root_order;
  for (u64 q = (after / step + 1) * step + 1;; q += step) {
    if (q > after && IsPrime(q)) return q;
  }
}

}  // namespace realcyclo
