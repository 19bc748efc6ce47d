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

#include "realcyclo/rootscan.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "realcyclo/basis.h"
#include "realcyclo/chebyshev.h"
#include "realcyclo/domain.h"
#include "realcyclo/errors.h"

namespace realcyclo {

namespace {

u64 ResidueOf(i64 alpha, u64 q) { return ReduceSigned(alpha, q); }

u64 ResidueOf(const mpz_class& v, u64 q) {
  return static_cast<u64>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(q)));
}

// Runs fn(0..tasks-1) on up to 'jobs' threads. The first exception thrown by
// any task is rethrown on the caller's thread.
void RunParallel(std::size_t tasks, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks)));
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks) return;
      try {
        fn(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(tasks);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::vector<u64> OddPrimesUpTo(u64 limit) {
  std::vector<u64> primes = PrimesUpTo(limit);
  if (!primes.empty() && primes.front() == 2) primes.erase(primes.begin());
  return primes;
}

// Phi_p(alpha) mod q for ascending primes p, one multiplication per step.
class CyclotomicAtQ {
 public:
  CyclotomicAtQ(i64 alpha, u64 q) : q_(q), a_(ResidueOf(alpha, q)) {
    if (a_ != 1 % q_) inv_ = *ModInverse(SubMod(a_, 1, q_), q_);
  }

  std::vector<u64> EvalAscending(const std::vector<u64>& ps) const {
    std::vector<u64> out(ps.size());
    if (a_ == 1 % q_) {
      for (std::size_t i = 0; i < ps.size(); ++i) out[i] = ps[i] % q_;
      return out;
    }
    std::vector<u64> steps;  // steps[g] = a^g
    u64 w = 0;
    u64 prev = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i == 0) {
        w = ModPow(a_, ps[0], q_);
      } else {
        const u64 gap = ps[i] - prev;
        while (steps.size() <= gap) steps.push_back(steps.empty() ? 1 % q_ : MulMod(steps.back(), a_, q_));
        w = MulMod(w, steps[gap], q_);
      }
      prev = ps[i];
      out[i] = MulMod(SubMod(w, 1 % q_, q_), inv_, q_);
    }
    return out;
  }

 private:
  u64 q_;
  u64 a_;
  u64 inv_ = 0;
};

// Psi_4p(alpha) mod q through a root u of u^2 - alpha u + 1.
class MaxrealAtQ {
 public:
  using Element = Fq2::Element;

  MaxrealAtQ(i64 alpha, const Fq2& field) : field_(field) {
    const u64 q = field.q();
    const u64 a = ResidueOf(alpha, q);
    const u64 disc = SubMod(MulMod(a, a, q), 4 % q, q);
    fallback_ = a == 0 || disc == 0;
    if (fallback_) return;
    const u64 inv2 = (q + 1) / 2;
    if (auto s = SqrtMod(disc, q)) {
      u_ = {MulMod(AddMod(a, *s, q), inv2, q), 0};
    } else {
      // disc = c k^2 for the field's non-residue c, so sqrt(disc) = k t.
      const u64 k = *SqrtMod(MulMod(disc, *ModInverse(field.nonresidue(), q), q), q);
      u_ = {MulMod(a, inv2, q), MulMod(k, inv2, q)};
    }
    u_inv_ = field.Inv(u_);
    // u^2 + 1 = alpha u, a unit since alpha != 0 mod q.
    inv_den_ = field.Inv(field.Add(field.Mul(u_, u_), field.Embed(1)));
  }

  // True when the closed form does not apply (alpha^2 = 4 or alpha = 0).
  bool fallback() const { return fallback_; }

  u64 Eval(u64 p) const { return Finish(field_.Pow(u_, p), field_.Pow(u_inv_, p)); }

  std::vector<u64> EvalAscending(const std::vector<u64>& ps) const {
    std::vector<u64> out(ps.size());
    std::vector<Element> steps, inv_steps;
    Element w, winv;
    u64 prev = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i == 0) {
        w = field_.Pow(u_, ps[0]);
        winv = field_.Pow(u_inv_, ps[0]);
      } else {
        const u64 gap = ps[i] - prev;
        while (steps.size() <= gap) {
          steps.push_back(steps.empty() ? field_.Embed(1) : field_.Mul(steps.back(), u_));
          inv_steps.push_back(inv_steps.empty() ? field_.Embed(1) : field_.Mul(inv_steps.back(), u_inv_));
        }
        w = field_.Mul(w, steps[gap]);
        winv = field_.Mul(winv, inv_steps[gap]);
      }
      prev = ps[i];
      out[i] = Finish(w, winv);
    }
    return out;
  }

 private:
  // u^{-(p-1)} (u^{2p} + 1) / (u^2 + 1) from w = u^p and winv = u^{-p}.
  u64 Finish(const Element& w, const Element& winv) const {
    const Element num = field_.Add(field_.Mul(w, w), field_.Embed(1));
    const Element v = field_.Mul(field_.Mul(field_.Mul(winv, u_), num), inv_den_);
    if (v.b != 0) throw std::logic_error("Psi_4p value left the base field");
    return v.a;
  }

  const Fq2& field_;
  bool fallback_ = false;
  Element u_, u_inv_, inv_den_;
};

IntPowerPoly MaxrealPowerForm(u64 p) {
  return ChebToPowerRef(IntegerRing{}, PsiFromCyclotomic(4 * p));
}

mpz_class ExactValue(Family family, u64 p, i64 alpha, const IntPowerPoly* psi) {
  const mpz_class a(static_cast<long>(alpha));
  if (family == Family::kCyclotomic) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
    return mpz_class((pw - 1) / (a - 1));
  }
  return EvalPoly(IntegerRing{}, *psi, a);
}

// Exact integer values f_p(alpha) for every (family, p, alpha), computed once.
class ExactValues {
 public:
  ExactValues(const std::vector<Family>& families, const std::vector<i64>& alphas,
              const std::vector<u64>& ps) {
    for (u64 p : ps) {
      std::optional<IntPowerPoly> psi;
      for (Family fam : families) {
        if (fam == Family::kMaxReal && !psi) psi = MaxrealPowerForm(p);
        for (i64 alpha : alphas) {
          values_[{fam, p, alpha}] = ExactValue(fam, p, alpha, psi ? &*psi : nullptr);
        }
      }
    }
  }
  const mpz_class& Get(Family fam, u64 p, i64 alpha) const { return values_.at({fam, p, alpha}); }

 private:
  std::map<std::tuple<Family, u64, i64>, mpz_class> values_;
};

ScanResult FinishScan(const ScanConfig& config, std::vector<std::vector<ScanRecord>> parts) {
  ScanResult result;
  for (auto& part : parts) {
    result.records.insert(result.records.end(), part.begin(), part.end());
  }
  std::sort(result.records.begin(), result.records.end(), RecordLess);
  result.counts = CountRecords(config, result.records);
  return result;
}

ScanResult ScanFactor(const ScanConfig& config, const std::vector<u64>& ps,
                      const std::vector<u64>& qs, unsigned jobs) {
  struct Task {
    Family family;
    u64 p;
    i64 alpha;
  };
  std::vector<Task> tasks;
  for (Family fam : config.families) {
    for (u64 p : ps) {
      for (i64 alpha : config.alphas) tasks.push_back({fam, p, alpha});
    }
  }
  const ExactValues exact(config.families, config.alphas, ps);
  std::vector<std::vector<ScanRecord>> parts(tasks.size());
  RunParallel(tasks.size(), jobs, [&](std::size_t t) {
    const Task& task = tasks[t];
    const mpz_class& value = exact.Get(task.family, task.p, task.alpha);
    for (u64 q : qs) {
      if (IsDegenerateAlpha(task.alpha, q)) continue;
      if (mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(q))) {
        parts[t].push_back({task.family, task.p, q, task.alpha});
      }
    }
  });
  return FinishScan(config, std::move(parts));
}

ScanResult ScanModular(const ScanConfig& config, const std::vector<u64>& ps,
                       const std::vector<u64>& qs, unsigned jobs) {
  constexpr std::size_t kChunk = 1024;
  const bool want_cyclo = std::find(config.families.begin(), config.families.end(),
                                    Family::kCyclotomic) != config.families.end();
  const bool want_maxreal = std::find(config.families.begin(), config.families.end(),
                                      Family::kMaxReal) != config.families.end();
  const ExactValues exact(want_maxreal ? std::vector<Family>{Family::kMaxReal} : std::vector<Family>{},
                          config.alphas, ps);
  const std::size_t chunks = (qs.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<ScanRecord>> parts(chunks);
  RunParallel(chunks, jobs, [&](std::size_t c) {
    const std::size_t end = std::min(qs.size(), (c + 1) * kChunk);
    for (std::size_t qi = c * kChunk; qi < end; ++qi) {
      const u64 q = qs[qi];
      std::optional<Fq2> field;
      if (want_maxreal) field.emplace(q);
      for (i64 alpha : config.alphas) {
        if (IsDegenerateAlpha(alpha, q)) continue;
        if (want_cyclo) {
          const std::vector<u64> vals = CyclotomicAtQ(alpha, q).EvalAscending(ps);
          for (std::size_t i = 0; i < ps.size(); ++i) {
            if (vals[i] == 0) parts[c].push_back({Family::kCyclotomic, ps[i], q, alpha});
          }
        }
        if (want_maxreal) {
          const MaxrealAtQ eval(alpha, *field);
          std::vector<u64> vals;
          if (eval.fallback()) {
            for (u64 p : ps) vals.push_back(ResidueOf(exact.Get(Family::kMaxReal, p, alpha), q));
          } else {
            vals = eval.EvalAscending(ps);
          }
          for (std::size_t i = 0; i < ps.size(); ++i) {
            if (vals[i] == 0) parts[c].push_back({Family::kMaxReal, ps[i], q, alpha});
          }
        }
      }
    }
  });
  return FinishScan(config, std::move(parts));
}

}  // namespace

std::string FamilyName(Family family) {
  return family == Family::kCyclotomic ? "cyclotomic" : "maxreal";
}

std::optional<Family> ParseFamily(const std::string& name) {
  if (name == "cyclotomic" || name == "cyclo") return Family::kCyclotomic;
  if (name == "maxreal") return Family::kMaxReal;
  return std::nullopt;
}

void ScanConfig::Validate() const {
  if (p_max < 3) throw ParameterError("p_max must be >= 3");
  if (q_max < 3) throw ParameterError("q_max must be >= 3");
  if (alphas.empty()) throw ParameterError("alphas must be nonempty");
  for (i64 a : alphas) {
    if (a == 0 || a == 1 || a == -1) throw ParameterError("alpha must not be 0 or +-1");
  }
  if (families.empty()) throw ParameterError("families must be nonempty");
}

bool RecordLess(const ScanRecord& a, const ScanRecord& b) {
  return std::tie(a.family, a.p, a.q, a.alpha) < std::tie(b.family, b.p, b.q, b.alpha);
}

u64 ScanCounts::Get(Family family, i64 alpha) const {
  for (std::size_t f = 0; f < families.size(); ++f) {
    if (families[f] != family) continue;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      if (alphas[a] == alpha) return table[f][a];
    }
  }
  return 0;
}

u64 ScanCounts::Total() const {
  u64 total = 0;
  for (const auto& row : table) {
    for (u64 v : row) total += v;
  }
  return total;
}

std::vector<u64> PrimesUpTo(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<bool> small(root + 1, true);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) small[j] = false;
  }
  constexpr u64 kSegment = 1 << 16;
  std::vector<char> seg(kSegment);
  for (u64 lo = 2; lo <= limit; lo += kSegment) {
    const u64 hi = std::min(limit, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (u64 b : base) {
      if (b * b > hi) break;
      u64 start = std::max(b * b, (lo + b - 1) / b * b);
      for (u64 j = start; j <= hi; j += b) seg[j - lo] = 0;
    }
    for (u64 v = lo; v <= hi; ++v) {
      if (seg[v - lo]) primes.push_back(v);
    }
  }
  return primes;
}

bool IsDegenerateAlpha(i64 alpha, u64 q) {
  const u64 a = ResidueOf(alpha, q);
  return a == 0 || a == 1 || a == q - 1;
}

u64 EvalCyclotomicPrimeAt(u64 p, i64 alpha, u64 q) {
  return CyclotomicAtQ(alpha, q).EvalAscending({p})[0];
}

u64 EvalMaxreal4pAt(u64 p, i64 alpha, u64 q) {
  const Fq2 field(q);
  const MaxrealAtQ eval(alpha, field);
  if (eval.fallback()) return ResidueOf(FamilyValue(Family::kMaxReal, p, alpha), q);
  return eval.Eval(p);
}

mpz_class FamilyValue(Family family, u64 p, i64 alpha) {
  if (family == Family::kCyclotomic) return ExactValue(family, p, alpha, nullptr);
  const IntPowerPoly psi = MaxrealPowerForm(p);
  return ExactValue(family, p, alpha, &psi);
}

std::vector<u64> FactorPath(Family family, u64 p, i64 alpha, u64 q_max) {
  const mpz_class value = FamilyValue(family, p, alpha);
  std::vector<u64> out;
  for (u64 q : OddPrimesUpTo(q_max)) {
    if (IsDegenerateAlpha(alpha, q)) continue;
    if (mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(q))) out.push_back(q);
  }
  return out;
}

bool VerifyRecord(const ScanRecord& r) {
  const u64 modular = r.family == Family::kCyclotomic ? EvalCyclotomicPrimeAt(r.p, r.alpha, r.q)
                                                      : EvalMaxreal4pAt(r.p, r.alpha, r.q);
  if (modular != 0) return false;
  if (r.p <= 200 && ResidueOf(FamilyValue(r.family, r.p, r.alpha), r.q) != 0) return false;
  return true;
}

ScanResult Scan(const ScanConfig& config, ScanStrategy strategy, unsigned jobs) {
  config.Validate();
  const std::vector<u64> ps = OddPrimesUpTo(config.p_max);
  const std::vector<u64> qs = OddPrimesUpTo(config.q_max);
  return strategy == ScanStrategy::kFactor ? ScanFactor(config, ps, qs, jobs)
                                           : ScanModular(config, ps, qs, jobs);
}

ScanCounts CountRecords(const ScanConfig& config, const std::vector<ScanRecord>& records) {
  ScanCounts counts;
  counts.families = config.families;
  counts.alphas = config.alphas;
  counts.table.assign(config.families.size(), std::vector<u64>(config.alphas.size(), 0));
  for (const ScanRecord& r : records) {
    for (std::size_t f = 0; f < counts.families.size(); ++f) {
      if (counts.families[f] != r.family) continue;
      for (std::size_t a = 0; a < counts.alphas.size(); ++a) {
        if (counts.alphas[a] == r.alpha) ++counts.table[f][a];
      }
    }
  }
  return counts;
}

void WriteScanCsv(std::ostream& out, const std::vector<ScanRecord>& records) {
  out << "family,p,degree,q,alpha\r\n";
  for (const ScanRecord& r : records) {
    out << FamilyName(r.family) << ',' << r.p << ',' << r.degree() << ',' << r.q << ','
        << r.alpha << "\r\n";
  }
}

std::string FormatCounts(const ScanCounts& counts) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "family" << std::right;
  for (i64 a : counts.alphas) os << std::setw(8) << a;
  os << std::setw(8) << "total" << '\n';
  for (std::size_t f = 0; f < counts.families.size(); ++f) {
    u64 row_total = 0;
    os << std::left << std::setw(12) << FamilyName(counts.families[f]) << std::right;
    for (u64 v : counts.table[f]) {
      os << std::setw(8) << v;
      row_total += v;
    }
    os << std::setw(8) << row_total << '\n';
  }
  return os.str();
}

}  // namespace realcyclo
