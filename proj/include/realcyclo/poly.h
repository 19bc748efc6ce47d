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
// Dense univariate polynomials tagged by basis. Index i of PowerPoly holds
// the coefficient of x^i; index i of ChebPoly multiplies V_i(x). Normalized
// polynomials carry no trailing zeros, so the zero polynomial is empty.

#ifndef REALCYCLO_POLY_H_
#define REALCYCLO_POLY_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "realcyclo/errors.h"

namespace realcyclo {

template <class T>
void StripTrailingZeros(std::vector<T>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == T{}) coeffs.pop_back();
}

template <class T>
struct PowerPoly {
  std::vector<T> coeffs;

  PowerPoly() = default;
  explicit PowerPoly(std::vector<T> c) : coeffs(std::move(c)) { StripTrailingZeros(coeffs); }

  // -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  T coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : T{}; }

  friend bool operator==(const PowerPoly&, const PowerPoly&) = default;
};

template <class T>
struct ChebPoly {
  std::vector<T> coeffs;

  ChebPoly() = default;
  explicit ChebPoly(std::vector<T> c) : coeffs(std::move(c)) { StripTrailingZeros(coeffs); }

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  T coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : T{}; }

  friend bool operator==(const ChebPoly&, const ChebPoly&) = default;
};

// Coefficient vector zero-padded (or checked) to exactly n entries.
template <class T>
std::vector<T> PaddedCoeffs(const std::vector<T>& coeffs, std::size_t n) {
  if (coeffs.size() > n) throw DomainError("polynomial degree exceeds bound");
  std::vector<T> out(coeffs);
  out.resize(n, T{});
  return out;
}

// Schoolbook product in the power basis.
template <class Domain>
PowerPoly<typename Domain::value_type> PolyMul(const Domain& d,
                                               const PowerPoly<typename Domain::value_type>& f,
                                               const PowerPoly<typename Domain::value_type>& g) {
  using T = typename Domain::value_type;
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<T> out(f.coeffs.size() + g.coeffs.size() - 1, d.Zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (d.IsZero(f.coeffs[i])) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      out[i + j] = d.Add(out[i + j], d.Mul(f.coeffs[i], g.coeffs[j]));
    }
  }
  return PowerPoly<T>(std::move(out));
}

// Remainder of f modulo a monic divisor.
template <class Domain>
PowerPoly<typename Domain::value_type> PolyRemMonic(
    const Domain& d, const PowerPoly<typename Domain::value_type>& f,
    const PowerPoly<typename Domain::value_type>& monic) {
  if (monic.is_zero() || monic.coeffs.back() != d.One()) {
    throw DomainError("divisor must be monic");
  }
  auto rem = f.coeffs;
  const std::size_t dn = monic.coeffs.size() - 1;
  for (std::size_t top = rem.size(); top-- > dn;) {
    const auto lead = rem[top];
    if (d.IsZero(lead)) continue;
    for (std::size_t k = 0; k <= dn; ++k) {
      rem[top - dn + k] = d.Sub(rem[top - dn + k], d.Mul(lead, monic.coeffs[k]));
    }
  }
  if (rem.size() > dn) rem.resize(dn);
  return PowerPoly<typename Domain::value_type>(std::move(rem));
}

}  // namespace realcyclo

#endif  // REALCYCLO_POLY_H_
