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
// Search for primes q at which Phi_p or Psi_4p has a small root alpha.
//
// Two independent paths find the same hits: the factor path computes the
// exact integer f_p(alpha) and trial-divides it by sieved primes; the
// modular path evaluates f_p(alpha) mod q for every q.

#ifndef REALCYCLO_ROOTSCAN_H_
#define REALCYCLO_ROOTSCAN_H_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "realcyclo/modarith.h"

namespace realcyclo {

enum class Family { kCyclotomic, kMaxReal };

// "cyclotomic" / "maxreal".
std::string FamilyName(Family family);
// Accepts "cyclotomic", "cyclo", "maxreal".
std::optional<Family> ParseFamily(const std::string& name);

struct ScanConfig {
  u64 p_max = 0;  // inclusive
  u64 q_max = 0;  // inclusive
  std::vector<i64> alphas = {-2, 2, -3, 3, -4, 4, -8, 8};
  std::vector<Family> families = {Family::kCyclotomic, Family::kMaxReal};

  // Throws ParameterError.
  void Validate() const;
};

struct ScanRecord {
  Family family = Family::kCyclotomic;
  u64 p = 0;
  u64 q = 0;
  i64 alpha = 0;

  u64 degree() const { return p - 1; }
  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

// (family, p, q, alpha) lexicographic.
bool RecordLess(const ScanRecord& a, const ScanRecord& b);

struct ScanCounts {
  std::vector<Family> families;
  std::vector<i64> alphas;
  std::vector<std::vector<u64>> table;  // [family][alpha]

  u64 Get(Family family, i64 alpha) const;
  u64 Total() const;
  friend bool operator==(const ScanCounts&, const ScanCounts&) = default;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanCounts counts;
};

enum class ScanStrategy { kFactor, kModular };

// All primes <= limit by a segmented sieve.
std::vector<u64> PrimesUpTo(u64 limit);

// alpha = 0, 1 or -1 mod q: excluded from hit reporting.
bool IsDegenerateAlpha(i64 alpha, u64 q);

// Phi_p(alpha) = (alpha^p - 1)/(alpha - 1) mod q; p mod q when alpha = 1.
u64 EvalCyclotomicPrimeAt(u64 p, i64 alpha, u64 q);

// Psi_4p(alpha) mod q as u^{-(p-1)} (u^{2p} + 1)/(u^2 + 1) with
// u^2 - alpha u + 1 = 0 in F_q or F_{q^2}. Falls back to the exact integer
// value when alpha^2 = 4 or alpha = 0 mod q.
u64 EvalMaxreal4pAt(u64 p, i64 alpha, u64 q);

// Exact f_p(alpha): Phi_p(alpha), or Psi_4p(alpha) by Horner on the power
// form of the palindromic fold of Phi_4p.
mpz_class FamilyValue(Family family, u64 p, i64 alpha);

// Primes 3 <= q <= q_max dividing f_p(alpha), skipping degenerate alpha.
std::vector<u64> FactorPath(Family family, u64 p, i64 alpha, u64 q_max);

// Re-checks a hit with the modular evaluator and, for p <= 200, the exact
// integer value reduced mod q.
bool VerifyRecord(const ScanRecord& record);

// Deterministic for any jobs >= 1.
ScanResult Scan(const ScanConfig& config, ScanStrategy strategy, unsigned jobs = 1);

ScanCounts CountRecords(const ScanConfig& config, const std::vector<ScanRecord>& records);

// Header family,p,degree,q,alpha then one row per record.
void WriteScanCsv(std::ostream& out, const std::vector<ScanRecord>& records);

// Aligned text table: one row per family, one column per alpha.
std::string FormatCounts(const ScanCounts& counts);

}  // namespace realcyclo

#endif  // REALCYCLO_ROOTSCAN_H_
