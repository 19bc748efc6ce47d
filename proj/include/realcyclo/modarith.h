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
// Modular arithmetic substrate: residues in [0, q) for 64-bit moduli, prime
// and two-prime composite moduli, roots of unity, square roots and the
// quadratic extension F_{q^2}.

#ifndef REALCYCLO_MODARITH_H_
#define REALCYCLO_MODARITH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace realcyclo {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 AddMod(u64 a, u64 b, u64 m) {
  const u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline u64 SubMod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 MulMod(u64 a, u64 b, u64 m) {
  if ((a | b) >> 32 == 0) return a * b % m;
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

// base^exp mod modulus by square-and-multiply. modulus >= 1.
u64 ModPow(u64 base, u64 exp, u64 modulus);

// Inverse of a mod m, absent when gcd(a, m) != 1.
std::optional<u64> ModInverse(u64 a, u64 m);

// Reduces a signed integer into [0, m).
u64 ReduceSigned(i64 a, u64 m);

// Deterministic Miller-Rabin; the witness set {2, ..., 37} is exact below
// 3.3e24, so every 64-bit input is decided correctly.
bool IsPrime(u64 n);

// Distinct prime factors of n in ascending order (trial division).
std::vector<u64> DistinctPrimeFactors(u64 n);

// Coefficient modulus: a prime q, or a product q1*q2 of two distinct primes.
class Modulus {
 public:
  enum class Kind { kPrime, kComposite };

  // Throws ParameterError when q is not an odd prime.
  static Modulus Prime(u64 q);
  // Throws ParameterError unless q1 != q2 are odd primes with q1*q2 < 2^62.
  static Modulus Composite(u64 q1, u64 q2);

  u64 value() const { return value_; }
  Kind kind() const { return kind_; }
  const std::vector<u64>& factors() const { return factors_; }

  // True iff order divides f - 1 for every prime factor f.
  bool Admits(u64 order) const;

  std::string ToString() const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Modulus(u64 value, Kind kind, std::vector<u64> factors)
      : value_(value), kind_(kind), factors_(std::move(factors)) {}

  u64 value_;
  Kind kind_;
  std::vector<u64> factors_;
};

// The ring Z/qZ over a Modulus. All results are canonical residues.
class Zq {
 public:
  using value_type = u64;

  explicit Zq(Modulus modulus) : modulus_(std::move(modulus)), q_(modulus_.value()) {}

  const Modulus& modulus() const { return modulus_; }
  u64 q() const { return q_; }

  u64 Zero() const { return 0; }
  u64 One() const { return 1 % q_; }
  u64 FromInt(i64 v) const { return ReduceSigned(v, q_); }
  bool IsZero(u64 a) const { return a == 0; }

  u64 Add(u64 a, u64 b) const { return AddMod(a, b, q_); }
  u64 Sub(u64 a, u64 b) const { return SubMod(a, b, q_); }
  u64 Neg(u64 a) const { return a == 0 ? 0 : q_ - a; }
  u64 Mul(u64 a, u64 b) const { return MulMod(a, b, q_); }
  u64 Pow(u64 a, u64 e) const { return ModPow(a, e, q_); }
  // Throws DomainError when a is not a unit.
  u64 Inv(u64 a) const;

  friend bool operator==(const Zq&, const Zq&) = default;

 private:
  Modulus modulus_;
  u64 q_;
};

struct RootOfUnity {
  u64 zeta = 0;
  u64 order = 0;
  u64 modulus = 0;
};

// True iff z has multiplicative order exactly 'order' modulo every prime
// factor of the modulus.
bool HasExactOrder(u64 z, u64 order, const Modulus& modulus);

// A root of unity of exact order 'order'. For a composite modulus the root is
// assembled by CRT from per-factor roots, so both projections keep the order.
// Throws InadmissibleModulusError unless order | f - 1 for every factor f.
RootOfUnity FindRootOfUnity(const Modulus& modulus, u64 order);

// Square root modulo an odd prime (Tonelli-Shanks). Returns the smaller of
// the two roots, 0 for a == 0, and nothing for a non-residue.
std::optional<u64> SqrtMod(u64 a, u64 q);

// Legendre symbol via Euler's criterion: 1, q-1 (i.e. -1) or 0.
u64 EulerCriterion(u64 a, u64 q);

// Unique residue modulo q1*q2 congruent to r1 mod q1 and r2 mod q2.
u64 CrtCombine(u64 r1, u64 q1, u64 r2, u64 q2);

// F_q[t] / (t^2 - c) for a fixed quadratic non-residue c.
class Fq2 {
 public:
  struct Element {
    u64 a = 0;  // constant part
    u64 b = 0;  // coefficient of t
    friend bool operator==(const Element&, const Element&) = default;
  };

  // Uses the smallest non-residue c >= 2.
  explicit Fq2(u64 q);
  // Throws ParameterError when c is a residue.
  Fq2(u64 q, u64 c);

  u64 q() const { return q_; }
  u64 nonresidue() const { return c_; }

  Element Embed(u64 a) const { return {a % q_, 0}; }
  Element Add(const Element& x, const Element& y) const;
  Element Sub(const Element& x, const Element& y) const;
  Element Mul(const Element& x, const Element& y) const;
  Element Pow(Element x, u64 e) const;
  // Throws DomainError for zero.
  Element Inv(const Element& x) const;

 private:
  u64 q_;
  u64 c_;
};

}  // namespace realcyclo

#endif  // REALCYCLO_MODARITH_H_
