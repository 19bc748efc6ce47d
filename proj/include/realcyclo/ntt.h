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
// Mixed radix-2/radix-3 cyclic transform over any domain with a root of
// unity of the transform length (Z/qZ or the complex numbers).

#ifndef REALCYCLO_NTT_H_
#define REALCYCLO_NTT_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "realcyclo/errors.h"
#include "realcyclo/op_counter.h"

namespace realcyclo {

// True iff n = 2^a 3^b with n >= 1.
inline bool IsSmooth23(std::size_t n) {
  if (n == 0) return false;
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

template <class Domain>
class NttPlan {
 public:
  using T = typename Domain::value_type;

  // 'root' must have exact multiplicative order 'length'.
  NttPlan(const Domain& domain, std::size_t length, const T& root)
      : domain_(domain), length_(length) {
    if (!IsSmooth23(length)) {
      throw ParameterError("transform length " + std::to_string(length) +
                           " is not of the form 2^a 3^b");
    }
    powers_.resize(length);
    powers_[0] = domain_.One();
    for (std::size_t e = 1; e < length; ++e) powers_[e] = domain_.Mul(powers_[e - 1], root);
    inv_length_ = domain_.Inv(domain_.FromInt(static_cast<std::int64_t>(length)));
  }

  std::size_t size() const { return length_; }
  const Domain& domain() const { return domain_; }
  // root^e for 0 <= e < size().
  const T& RootPower(std::size_t e) const { return powers_[e]; }

  // out[k] = sum_t in[t] root^(k t)
  void Forward(std::span<const T> in, std::span<T> out, OpCounter* ops = nullptr) const {
    CheckSizes(in, out);
    Recurse(in.data(), 1, length_, out.data(), 1, false, ops);
  }

  // out[t] = (1/L) sum_k in[k] root^(-k t)
  void Inverse(std::span<const T> in, std::span<T> out, OpCounter* ops = nullptr) const {
    CheckSizes(in, out);
    Recurse(in.data(), 1, length_, out.data(), 1, true, ops);
    for (auto& v : out) v = domain_.Mul(v, inv_length_);
    CountOps(ops, length_, 0);
  }

 private:
  void CheckSizes(std::span<const T> in, std::span<T> out) const {
    if (in.size() != length_ || out.size() != length_) {
      throw DomainError("transform input/output length mismatch");
    }
  }

  const T& Twiddle(std::size_t e, bool inverse) const {
    return inverse ? powers_[e == 0 ? 0 : length_ - e] : powers_[e];
  }

  // Decimation in time: sub-transforms of the p interleaved subsequences land
  // in consecutive blocks of 'out', then one butterfly pass combines them.
  // 'step' = L / n, so the n-th root of unity is root^step.
  void Recurse(const T* in, std::size_t stride, std::size_t n, T* out, std::size_t step,
               bool inverse, OpCounter* ops) const {
    if (n == 1) {
      out[0] = in[0];
      return;
    }
    const std::size_t radix = (n % 2 == 0) ? 2 : 3;
    const std::size_t sub = n / radix;
    for (std::size_t r = 0; r < radix; ++r) {
      Recurse(in + r * stride, stride * radix, sub, out + r * sub, step * radix, inverse, ops);
    }
    const Domain& d = domain_;
    if (radix == 2) {
      for (std::size_t k = 0; k < sub; ++k) {
        const T a = out[k];
        const T b = d.Mul(out[k + sub], Twiddle(step * k, inverse));
        out[k] = d.Add(a, b);
        out[k + sub] = d.Sub(a, b);
      }
      CountOps(ops, sub, 2 * sub);
    } else {
      // With w = primitive cube root, w^2 = -1 - w:
      //   X0 = a + b + c, X1 = a - c + w(b - c), X2 = a - b - w(b - c).
      const T& w = Twiddle(length_ / 3, inverse);
      for (std::size_t k = 0; k < sub; ++k) {
        const T a = out[k];
        const T b = d.Mul(out[k + sub], Twiddle(step * k, inverse));
        const T c = d.Mul(out[k + 2 * sub], Twiddle(2 * step * k, inverse));
        const T t = d.Mul(w, d.Sub(b, c));
        out[k] = d.Add(d.Add(a, b), c);
        out[k + sub] = d.Add(d.Sub(a, c), t);
        out[k + 2 * sub] = d.Sub(d.Sub(a, b), t);
      }
      CountOps(ops, 3 * sub, 7 * sub);
    }
  }

  Domain domain_;
  std::size_t length_;
  std::vector<T> powers_;
  T inv_length_;
};

// Cyclic convolution of two equal-length sequences through the plan.
template <class Domain>
std::vector<typename Domain::value_type> CyclicConvolve(
    const NttPlan<Domain>& plan, std::span<const typename Domain::value_type> a,
    std::span<const typename Domain::value_type> b, OpCounter* ops = nullptr) {
  using T = typename Domain::value_type;
  const std::size_t n = plan.size();
  if (a.size() > n || b.size() > n) throw DomainError("convolution input longer than plan");
  std::vector<T> pa(n), pb(n), out(n);
  std::vector<T> a_pad(a.begin(), a.end()), b_pad(b.begin(), b.end());
  a_pad.resize(n, plan.domain().Zero());
  b_pad.resize(n, plan.domain().Zero());
  plan.Forward(a_pad, pa, ops);
  plan.Forward(b_pad, pb, ops);
  for (std::size_t i = 0; i < n; ++i) pa[i] = plan.domain().Mul(pa[i], pb[i]);
  CountOps(ops, n, 0);
  plan.Inverse(pa, out, ops);
  return out;
}

}  // namespace realcyclo

#endif  // REALCYCLO_NTT_H_
