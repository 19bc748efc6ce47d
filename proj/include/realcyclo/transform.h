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
// Non-scaled DCT pair of length N:
//
//   Dct  (type III):  y_j = a_0 / 2 + sum_{i=1}^{N-1} a_i cos(2 pi (2j+1) i / 4N)
//   Idct (type II):   y_j = sum_{i=0}^{N-1} a_i cos(2 pi (2i+1) j / 4N)
//
// so that Idct(Dct(a)) = (N/2) a. In matrix form Dct = C_N S_N^{-1} and
// Idct = C_N^T, with (C_N)_{ij} = cos(2 pi (2i+1) j / 4N), S_N = diag(2,1,...,1).
//
// A DctPlan works over any domain holding a root of unity zeta of order
// M = 4N, reading 2cos(2 pi k / M) as zeta^k + zeta^-k. Over Z/qZ that makes
// every transform exact. The fast paths fold the symmetric length-M sequence
// into one cyclic transform of length 2N with root zeta^2.

#ifndef REALCYCLO_TRANSFORM_H_
#define REALCYCLO_TRANSFORM_H_

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "realcyclo/dense_matrix.h"
#include "realcyclo/domain.h"
#include "realcyclo/errors.h"
#include "realcyclo/modarith.h"
#include "realcyclo/ntt.h"
#include "realcyclo/op_counter.h"

namespace realcyclo {

template <class Domain>
class DctPlan {
 public:
  using T = typename Domain::value_type;

  // zeta must have exact order 4 * length, and 2N must be 2^a 3^b.
  DctPlan(const Domain& domain, std::size_t length, const T& zeta)
      : domain_(domain),
        length_(length),
        ntt_(domain, 2 * CheckLength(length), domain.Mul(zeta, zeta)) {
    const std::size_t order = 4 * length_;
    zeta_powers_.resize(order);
    zeta_powers_[0] = domain_.One();
    for (std::size_t k = 1; k < order; ++k) {
      zeta_powers_[k] = domain_.Mul(zeta_powers_[k - 1], zeta);
    }
    inv2_ = domain_.Inv(domain_.FromInt(2));
    inv_length_ = domain_.Inv(domain_.FromInt(static_cast<std::int64_t>(length_)));
  }

  std::size_t size() const { return length_; }
  const Domain& domain() const { return domain_; }
  const T& inv2() const { return inv2_; }
  const T& inv_length() const { return inv_length_; }

  // zeta^k for any integer k (reduced mod 4N).
  const T& ZetaPower(std::int64_t k) const {
    const auto order = static_cast<std::int64_t>(zeta_powers_.size());
    return zeta_powers_[static_cast<std::size_t>(((k % order) + order) % order)];
  }

  // cos(2 pi k / 4N) in the plan's domain: (zeta^k + zeta^-k) / 2.
  T Cosine(std::int64_t k) const {
    return domain_.Mul(domain_.Add(ZetaPower(k), ZetaPower(-k)), inv2_);
  }

  // O(N log N) type-III transform.
  std::vector<T> Dct(std::span<const T> a, OpCounter* ops = nullptr) const {
    CheckInput(a);
    const Domain& d = domain_;
    const std::size_t n = length_;
    // Fold w (w_0 = a_0, w_i = w_{4N-i} = a_i) onto [0, 2N) with the sign
    // zeta^{2N k} = -1 for odd k, then twist by zeta^t.
    std::vector<T> y(2 * n, d.Zero());
    y[0] = a[0];
    for (std::size_t t = 1; t < n; ++t) {
      y[t] = d.Mul(a[t], zeta_powers_[t]);
      y[2 * n - t] = d.Neg(d.Mul(a[t], zeta_powers_[2 * n - t]));
    }
    CountOps(ops, 2 * (n - 1), n - 1);
    std::vector<T> spectrum(2 * n);
    ntt_.Forward(y, spectrum, ops);
    std::vector<T> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = d.Mul(spectrum[j], inv2_);
    CountOps(ops, n, 0);
    return out;
  }

  // O(N log N) type-II transform.
  std::vector<T> Idct(std::span<const T> a, OpCounter* ops = nullptr) const {
    CheckInput(a);
    const Domain& d = domain_;
    const std::size_t n = length_;
    std::vector<T> padded(a.begin(), a.end());
    padded.resize(2 * n, d.Zero());
    std::vector<T> spectrum(2 * n);
    ntt_.Forward(padded, spectrum, ops);
    // sum_i a_i zeta^{(2i+1)j} = zeta^j X_j and the conjugate-index term.
    std::vector<T> out(n);
    for (std::size_t j = 0; j < n; ++j) {
      const T lhs = d.Mul(zeta_powers_[j], spectrum[j]);
      const T rhs = d.Mul(ZetaPower(-static_cast<std::int64_t>(j)), spectrum[(2 * n - j) % (2 * n)]);
      out[j] = d.Mul(d.Add(lhs, rhs), inv2_);
    }
    CountOps(ops, 3 * n, n);
    return out;
  }

  // O(N^2) definitional transforms, using the same cosine representation.
  std::vector<T> DctNaive(std::span<const T> a) const {
    CheckInput(a);
    const Domain& d = domain_;
    std::vector<T> out(length_);
    for (std::size_t j = 0; j < length_; ++j) {
      T acc = d.Mul(a[0], inv2_);
      for (std::size_t i = 1; i < length_; ++i) {
        acc = d.Add(acc, d.Mul(a[i], Cosine(static_cast<std::int64_t>((2 * j + 1) * i))));
      }
      out[j] = acc;
    }
    return out;
  }

  std::vector<T> IdctNaive(std::span<const T> a) const {
    CheckInput(a);
    const Domain& d = domain_;
    std::vector<T> out(length_);
    for (std::size_t j = 0; j < length_; ++j) {
      T acc = d.Zero();
      for (std::size_t i = 0; i < length_; ++i) {
        acc = d.Add(acc, d.Mul(a[i], Cosine(static_cast<std::int64_t>((2 * i + 1) * j))));
      }
      out[j] = acc;
    }
    return out;
  }

 private:
  static std::size_t CheckLength(std::size_t n) {
    if (n == 0 || !IsSmooth23(2 * n)) {
      throw ParameterError("DCT length " + std::to_string(n) + " is not of the form 2^a 3^b");
    }
    return n;
  }

  void CheckInput(std::span<const T> a) const {
    if (a.size() != length_) {
      throw DomainError("DCT input has length " + std::to_string(a.size()) + ", plan expects " +
                        std::to_string(length_));
    }
  }

  Domain domain_;
  std::size_t length_;
  NttPlan<Domain> ntt_;
  std::vector<T> zeta_powers_;
  T inv2_;
  T inv_length_;
};

using ModDctPlan = DctPlan<Zq>;
using ComplexDctPlan = DctPlan<ComplexField>;

// Plan over Z/qZ with a root of unity of order 4N. Throws
// InadmissibleModulusError unless 4N | f - 1 for every factor f of q.
ModDctPlan MakeModDctPlan(std::size_t length, const Modulus& modulus);

// Floating-point plan with zeta = exp(2 pi i / 4N).
ComplexDctPlan MakeComplexDctPlan(std::size_t length);

// Float transforms evaluated straight from std::cos, O(N^2). These are the
// definitional references the other paths are checked against.
std::vector<double> DctReference(std::span<const double> a);
std::vector<double> IdctReference(std::span<const double> a);

// Float fast paths over a complex plan (real part of the result).
std::vector<double> DctFast(std::span<const double> a, const ComplexDctPlan& plan,
                            OpCounter* ops = nullptr);
std::vector<double> IdctFast(std::span<const double> a, const ComplexDctPlan& plan,
                             OpCounter* ops = nullptr);

// (C_N)_{ij} = cos(2 pi (2i+1) j / 4N).
Matrix CosineMatrix(std::size_t n);
// Diagonal of S_N: (2, 1, ..., 1).
std::vector<double> ScaleDiagonal(std::size_t n);

}  // namespace realcyclo

#endif  // REALCYCLO_TRANSFORM_H_
