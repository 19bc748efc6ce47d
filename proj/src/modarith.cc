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
#include "realcyclo/modarith.h"

#include <algorithm>
#include <array>
#include <sstream>

#include "realcyclo/errors.h"

namespace realcyclo {

u64 ModPow(u64 base, u64 exp, u64 modulus) {
  u64 result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, modulus);
    base = MulMod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

std::optional<u64> ModInverse(u64 a, u64 m) {
  if (m == 1) return 0;
  __int128 old_r = a % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quot = old_r / r;
    std::swap(old_r, r);
    r -= quot * old_r;
    std::swap(old_s, s);
    s -= quot * old_s;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

u64 ReduceSigned(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  const u64 mag = static_cast<u64>(-(a + 1)) + 1;  // |a| without overflow
  const u64 r = mag % m;
  return r == 0 ? 0 : m - r;
}

bool IsPrime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                     17, 19, 23, 29, 31, 37};
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int twos = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++twos;
  }
  for (u64 a : kWitnesses) {
    u64 x = ModPow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < twos; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> DistinctPrimeFactors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Modulus Modulus::Prime(u64 q) {
  if (q < 3 || !IsPrime(q)) {
    throw ParameterError("modulus " + std::to_string(q) + " is not an odd prime");
  }
  if (q >= (u64{1} << 62)) {
    throw ParameterError("modulus " + std::to_string(q) + " exceeds 2^62");
  }
  return Modulus(q, Kind::kPrime, {q});
}

Modulus Modulus::Composite(u64 q1, u64 q2) {
  if (q1 == q2) throw ParameterError("composite modulus needs two distinct primes");
  for (u64 f : {q1, q2}) {
    if (f < 3 || !IsPrime(f)) {
      throw ParameterError("factor " + std::to_string(f) + " is not an odd prime");
    }
  }
  const unsigned __int128 prod = static_cast<unsigned __int128>(q1) * q2;
  if (prod >= (static_cast<unsigned __int128>(1) << 62)) {
    throw ParameterError("composite modulus exceeds 2^62");
  }
  return Modulus(static_cast<u64>(prod), Kind::kComposite,
                 {std::min(q1, q2), std::max(q1, q2)});
}

bool Modulus::Admits(u64 order) const {
  if (order == 0) return false;
  return std::all_of(factors_.begin(), factors_.end(),
                     [order](u64 f) { return (f - 1) % order == 0; });
}

std::string Modulus::ToString() const {
  std::ostringstream os;
  os << value_;
  if (kind_ == Kind::kComposite) os << " (" << factors_[0] << "*" << factors_[1] << ")";
  return os.str();
}

u64 Zq::Inv(u64 a) const {
  const auto inv = ModInverse(a, q_);
  if (!inv) {
    throw DomainError(std::to_string(a) + " is not invertible mod " + std::to_string(q_));
  }
  return *inv;
}

namespace {

bool HasExactOrderModPrime(u64 z, u64 order, u64 p) {
  z %= p;
  if (ModPow(z, order, p) != 1) return false;
  for (u64 l : DistinctPrimeFactors(order)) {
    if (ModPow(z, order / l, p) == 1) return false;
  }
  return true;
}

u64 RootModPrime(u64 p, u64 order) {
  const u64 cofactor = (p - 1) / order;
  for (u64 g = 2; g < p; ++g) {
    const u64 z = ModPow(g, cofactor, p);
    if (HasExactOrderModPrime(z, order, p)) return z;
  }
  // Unreachable for order | p - 1: a generator exists.
  throw InadmissibleModulusError("no root of unity found");
}

}  // namespace

bool HasExactOrder(u64 z, u64 order, const Modulus& modulus) {
  return std::all_of(modulus.factors().begin(), modulus.factors().end(),
                     [&](u64 f) { return HasExactOrderModPrime(z, order, f); });
}

RootOfUnity FindRootOfUnity(const Modulus& modulus, u64 order) {
  if (!modulus.Admits(order)) {
    throw InadmissibleModulusError("modulus " + modulus.ToString() +
                                   " has no root of unity of order " +
                                   std::to_string(order));
  }
  const auto& f = modulus.factors();
  u64 zeta = RootModPrime(f[0], order);
  if (modulus.kind() == Modulus::Kind::kComposite) {
    zeta = CrtCombine(zeta, f[0], RootModPrime(f[1], order), f[1]);
  }
  return {zeta, order, modulus.value()};
}

u64 EulerCriterion(u64 a, u64 q) { return ModPow(a % q, (q - 1) / 2, q); }

std::optional<u64> SqrtMod(u64 a, u64 q) {
  a %= q;
  if (a == 0) return 0;
  if (EulerCriterion(a, q) != 1) return std::nullopt;

  u64 root;
  if (q % 4 == 3) {
    root = ModPow(a, (q + 1) / 4, q);
  } else {
    u64 odd = q - 1;
    int twos = 0;
    while ((odd & 1) == 0) {
      odd >>= 1;
      ++twos;
    }
    u64 z = 2;
    while (EulerCriterion(z, q) != q - 1) ++z;

    int m = twos;
    u64 c = ModPow(z, odd, q);
    u64 t = ModPow(a, odd, q);
    root = ModPow(a, (odd + 1) / 2, q);
    while (t != 1) {
      int i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = MulMod(t2, t2, q);
        ++i;
      }
      u64 b = c;
      for (int k = 0; k < m - i - 1; ++k) b = MulMod(b, b, q);
      m = i;
      c = MulMod(b, b, q);
      t = MulMod(t, c, q);
      root = MulMod(root, b, q);
    }
  }
  return std::min(root, q - root);
}

u64 CrtCombine(u64 r1, u64 q1, u64 r2, u64 q2) {
  const u64 modulus = q1 * q2;
  r1 %= q1;
  r2 %= q2;
  // x = r1 + q1 * ((r2 - r1) * q1^{-1} mod q2)
  const u64 q1_inv = *ModInverse(q1 % q2, q2);
  const u64 diff = SubMod(r2, r1 % q2, q2);
  const u64 k = MulMod(diff, q1_inv, q2);
  return AddMod(r1, MulMod(q1, k, modulus), modulus);
}

Fq2::Fq2(u64 q) : q_(q), c_(2) {
  while (EulerCriterion(c_, q_) != q_ - 1) ++c_;
}

Fq2::Fq2(u64 q, u64 c) : q_(q), c_(c % q) {
  if (EulerCriterion(c_, q_) != q_ - 1) {
    throw ParameterError(std::to_string(c) + " is a residue mod " + std::to_string(q));
  }
}

Fq2::Element Fq2::Add(const Element& x, const Element& y) const {
  return {AddMod(x.a, y.a, q_), AddMod(x.b, y.b, q_)};
}

Fq2::Element Fq2::Sub(const Element& x, const Element& y) const {
  return {SubMod(x.a, y.a, q_), SubMod(x.b, y.b, q_)};
}

Fq2::Element Fq2::Mul(const Element& x, const Element& y) const {
  // (a + bt)(a' + b't) = aa' + c bb' + (ab' + ba') t
  const u64 a = AddMod(MulMod(x.a, y.a, q_), MulMod(c_, MulMod(x.b, y.b, q_), q_), q_);
  const u64 b = AddMod(MulMod(x.a, y.b, q_), MulMod(x.b, y.a, q_), q_);
  return {a, b};
}

Fq2::Element Fq2::Pow(Element x, u64 e) const {
  Element result{1 % q_, 0};
  while (e > 0) {
    if (e & 1) result = Mul(result, x);
    x = Mul(x, x);
    e >>= 1;
  }
  return result;
}

Fq2::Element Fq2::Inv(const Element& x) const {
  // (a + bt)^{-1} = (a - bt) / (a^2 - c b^2)
  const u64 norm = SubMod(MulMod(x.a, x.a, q_), MulMod(c_, MulMod(x.b, x.b, q_), q_), q_);
  const auto inv = ModInverse(norm, q_);
  if (!inv) throw DomainError("zero has no inverse in F_{q^2}");
  return {MulMod(x.a, *inv, q_), MulMod(x.b == 0 ? 0 : q_ - x.b, *inv, q_)};
}

}  // namespace realcyclo
