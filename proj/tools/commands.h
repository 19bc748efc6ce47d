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
// Subcommand bodies of the realcyclo binary. Each returns a process exit
// code: 0 success, 1 a check failed. Parameter problems surface as the
// library's std::invalid_argument subclasses and are mapped to 2 by main.

#ifndef REALCYCLO_TOOLS_COMMANDS_H_
#define REALCYCLO_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace realcyclo::cli {

struct RingOptions {
  int r = 3;
  int s = 0;
};

struct ParamsOptions {
  RingOptions ring;
};

struct PsiOptions {
  RingOptions ring;
  std::optional<std::uint64_t> conductor;  // any n via the cyclotomic fold
};

struct DctSelftestOptions {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> q;
  int trials = 100;
  std::uint64_t seed = 1;
};

struct MulOptions {
  RingOptions ring;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> q2;  // second factor of a composite modulus
  int trials = 1000;
  bool bench = false;
  int bench_reps = 200;
  std::string out;
  std::uint64_t seed = 1;
};

struct BasisOptions {
  RingOptions ring;
  std::optional<std::uint64_t> q;
  std::string dir;
  std::string in;
};

struct CondOptions {
  RingOptions ring;
  bool sweep = false;
  std::string format = "json";
};

struct RootscanOptions {
  std::uint64_t p_max = 0;
  std::uint64_t q_max = 0;
  std::vector<std::int64_t> alphas = {-2, 2, -3, 3, -4, 4, -8, 8};
  std::vector<std::string> families = {"cyclotomic", "maxreal"};
  std::string strategy = "factor";
  std::string out;
  unsigned jobs = 1;
};

int RunParams(const ParamsOptions& opt, std::ostream& out);
int RunPsi(const PsiOptions& opt, std::ostream& out);
int RunDctSelftest(const DctSelftestOptions& opt, std::ostream& out);
int RunMul(const MulOptions& opt, std::ostream& out);
int RunBasis(const BasisOptions& opt, std::ostream& out);
int RunCond(const CondOptions& opt, std::ostream& out);
int RunRootscan(const RootscanOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace realcyclo::cli

#endif  // REALCYCLO_TOOLS_COMMANDS_H_
