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
// Coefficient domains besides Zq (see modarith.h). Every domain exposes the
// same small interface so polynomial and transform code can be written once:
//
//   value_type, Zero(), One(), FromInt(i64), IsZero(x),
//   Add, Sub, Neg, Mul, and Inv where the domain has inverses.

#ifndef REALCYCLO_DOMAIN_H_
#define REALCYCLO_DOMAIN_H_

#include <gmpxx.h>

#include <complex>
#include <cstdint>

namespace realcyclo {

// Exact integers (arbitrary precision).
class IntegerRing {
 public:
  using value_type = mpz_class;

  mpz_class Zero() const { return 0; }
  mpz_class One() const { return 1; }
  mpz_class FromInt(std::int64_t v) const { return mpz_class(static_cast<long>(v)); }
  bool IsZero(const mpz_class& a) const { return sgn(a) == 0; }

  mpz_class Add(const mpz_class& a, const mpz_class& b) const { return a + b; }
  mpz_class Sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
  mpz_class Neg(const mpz_class& a) const { return -a; }
  mpz_class Mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
};

class RealField {
 public:
  using value_type = double;

  double Zero() const { return 0.0; }
  double One() const { return 1.0; }
  double FromInt(std::int64_t v) const { return static_cast<double>(v); }
  bool IsZero(double a) const { return a == 0.0; }

  double Add(double a, double b) const { return a + b; }
  double Sub(double a, double b) const { return a - b; }
  double Neg(double a) const { return -a; }
  double Mul(double a, double b) const { return a * b; }
  double Inv(double a) const { return 1.0 / a; }
};

// Complex doubles; hosts the floating-point fast transforms.
class ComplexField {
 public:
  using value_type = std::complex<double>;

  value_type Zero() const { return 0.0; }
  value_type One() const { return 1.0; }
  value_type FromInt(std::int64_t v) const { return static_cast<double>(v); }
  bool IsZero(const value_type& a) const { return a == value_type(0.0); }

  value_type Add(const value_type& a, const value_type& b) const { return a + b; }
  value_type Sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type Neg(const value_type& a) const { return -a; }
  value_type Mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type Inv(const value_type& a) const { return 1.0 / a; }
};

}  // namespace realcyclo

#endif  // REALCYCLO_DOMAIN_H_
