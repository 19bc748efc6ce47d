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
#include "realcyclo/transform.h"

#include <cmath>
#include <numbers>

namespace realcyclo {

ModDctPlan MakeModDctPlan(std::size_t length, const Modulus& modulus) {
  const RootOfUnity root = FindRootOfUnity(modulus, 4 * static_cast<u64>(length));
  return ModDctPlan(Zq(modulus), length, root.zeta);
}

ComplexDctPlan MakeComplexDctPlan(std::size_t length) {
  const double angle = 2.0 * std::numbers::pi / (4.0 * static_cast<double>(length));
  return ComplexDctPlan(ComplexField{}, length, std::polar(1.0, angle));
}

namespace {

double CosArg(std::size_t k, std::size_t n) {
  k %= 4 * n;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / (4.0 * static_cast<double>(n)));
}

std::vector<std::complex<double>> ToComplex(std::span<const double> a) {
  return {a.begin(), a.end()};
}

std::vector<double> RealPart(const std::vector<std::complex<double>>& z) {
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i].real();
  return out;
}

}  // namespace

std::vector<double> DctReference(std::span<const double> a) {
  const std::size_t n = a.size();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = a[0] / 2.0;
    for (std::size_t i = 1; i < n; ++i) acc += a[i] * CosArg((2 * j + 1) * i, n);
    out[j] = acc;
  }
  return out;
}

std::vector<double> IdctReference(std::span<const double> a) {
  const std::size_t n = a.size();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * CosArg((2 * i + 1) * j, n);
    out[j] = acc;
  }
  return out;
}

std::vector<double> DctFast(std::span<const double> a, const ComplexDctPlan& plan,
                            OpCounter* ops) {
  return RealPart(plan.Dct(ToComplex(a), ops));
}

std::vector<double> IdctFast(std::span<const double> a, const ComplexDctPlan& plan,
                             OpCounter* ops) {
  return RealPart(plan.Idct(ToComplex(a), ops));
}

Matrix CosineMatrix(std::size_t n) {
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = CosArg((2 * i + 1) * j, n);
  }
  return c;
}

std::vector<double> ScaleDiagonal(std::size_t n) {
  std::vector<double> s(n, 1.0);
  if (n > 0) s[0] = 2.0;
  return s;
}

}  // namespace realcyclo
