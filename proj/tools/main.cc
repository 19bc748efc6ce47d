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

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "realcyclo/errors.h"

namespace {

using realcyclo::cli::RingOptions;

constexpr int kUsageExit = 2;

void AddRing(CLI::App* cmd, RingOptions& ring) {
  cmd->add_option("--r", ring.r, "power of two in n = 2^r 3^s (r >= 3)")->required();
  cmd->add_option("--s", ring.s, "power of three in n = 2^r 3^s")->required();
}

unsigned JobsFromEnv() {
  const char* v = std::getenv("REALCYCLO_JOBS");
  if (v == nullptr || *v == '\0') return 1;
  try {
    const long jobs = std::stol(v);
    if (jobs >= 1) return static_cast<unsigned>(jobs);
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring REALCYCLO_JOBS=" << v << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = realcyclo::cli;
  CLI::App app{"realcyclo: arithmetic in maximal real subfields of 2^r 3^s cyclotomic fields"};
  app.require_subcommand(1);

  cli::ParamsOptions params;
  auto* params_cmd = app.add_subcommand("params", "print m, N, M for n = 2^r 3^s");
  AddRing(params_cmd, params.ring);

  cli::PsiOptions psi;
  auto* psi_cmd = app.add_subcommand("psi", "minimal polynomial of 2cos(2pi/n), power and V coefficients");
  psi_cmd->add_option("--r", psi.ring.r, "power of two");
  psi_cmd->add_option("--s", psi.ring.s, "power of three");
  auto* psi_n = psi_cmd->add_option("--n", psi.conductor, "any conductor n >= 3 (overrides --r/--s)");
  psi_n->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 20));

  cli::DctSelftestOptions dct;
  auto* dct_cmd = app.add_subcommand("dct-selftest", "check the modular and float DCT pair of length N");
  dct_cmd->add_option("--n", dct.n, "transform length N (2N must be 2^a 3^b)")->required();
  dct_cmd->add_option("--q", dct.q, "prime q = 1 mod 4N (default: smallest such)");
  dct_cmd->add_option("--trials", dct.trials)->check(CLI::PositiveNumber);
  dct_cmd->add_option("--seed", dct.seed);

  cli::MulOptions mul;
  auto* mul_cmd = app.add_subcommand("mul", "fast ring multiplication against oracles, or --bench");
  AddRing(mul_cmd, mul.ring);
  mul_cmd->add_option("--q", mul.q, "prime q = 1 mod M (default: smallest such)");
  mul_cmd->add_option("--q2", mul.q2, "second prime factor for a composite modulus q*q2");
  mul_cmd->add_option("--trials", mul.trials)->check(CLI::PositiveNumber);
  mul_cmd->add_flag("--bench", mul.bench, "time r = 3..r and write CSV m,N,q,ns_per_mul");
  mul_cmd->add_option("--bench-reps", mul.bench_reps)->check(CLI::PositiveNumber);
  mul_cmd->add_option("--out", mul.out, "CSV path for --bench (default stdout)");
  mul_cmd->add_option("--seed", mul.seed);

  cli::BasisOptions basis;
  auto* basis_cmd = app.add_subcommand("basis", "power <-> V basis change mod q");
  AddRing(basis_cmd, basis.ring);
  basis_cmd->add_option("--q", basis.q, "prime q = 1 mod 4m (default: smallest admissible)");
  basis_cmd->add_option("--dir", basis.dir, "p2c or c2p")->required()->check(CLI::IsMember({"p2c", "c2p"}));
  basis_cmd->add_option("--in", basis.in, "JSON file: [c0, c1, ...] or {\"coeffs\": [...]}")
      ->required()
      ->check(CLI::ExistingFile);

  cli::CondOptions cond;
  auto* cond_cmd = app.add_subcommand("cond", "conditioning of the canonical embedding");
  cond_cmd->add_option("--r", cond.ring.r, "power of two");
  cond_cmd->add_option("--s", cond.ring.s, "power of three");
  cond_cmd->add_flag("--sweep", cond.sweep, "n in {24, 48, 96, 144, 192, 288}");
  cond_cmd->add_option("--format", cond.format)->check(CLI::IsMember({"json", "csv"}));

  cli::RootscanOptions scan;
  scan.jobs = JobsFromEnv();
  auto* scan_cmd = app.add_subcommand("rootscan", "small-prime roots of Phi_p and Psi_4p at fixed alphas");
  scan_cmd->add_option("--p-max", scan.p_max, "largest prime p (inclusive)")->required();
  scan_cmd->add_option("--q-max", scan.q_max, "largest prime q (inclusive)")->required();
  scan_cmd->add_option("--alphas", scan.alphas)->delimiter(',');
  scan_cmd->add_option("--families", scan.families, "cyclotomic,maxreal")->delimiter(',');
  scan_cmd->add_option("--strategy", scan.strategy)
      ->check(CLI::IsMember({"factor", "modular", "both"}));
  scan_cmd->add_option("--out", scan.out, "CSV of hits");
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads (env REALCYCLO_JOBS)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (*params_cmd) return cli::RunParams(params, std::cout);
    if (*psi_cmd) return cli::RunPsi(psi, std::cout);
    if (*dct_cmd) return cli::RunDctSelftest(dct, std::cout);
    if (*mul_cmd) return cli::RunMul(mul, std::cout);
    if (*basis_cmd) return cli::RunBasis(basis, std::cout);
    if (*cond_cmd) return cli::RunCond(cond, std::cout);
    if (*scan_cmd) return cli::RunRootscan(scan, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    // ParameterError, DomainError and InadmissibleModulusError.
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << '\n';
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageExit;
}
