// Copyright 2026 The primelab Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "primelab/gap_model.hpp"
#include "primelab/output.hpp"
#include "primelab/prime_table.hpp"
#include "primelab/zero_table.hpp"

namespace primelab {

struct RunConfig {
  std::uint64_t sieve_limit = 10'000'000;
  std::filesystem::path output_dir = "out";
  Format format = Format::kCsv;
  std::uint64_t seed = 20260101;
  unsigned threads = 1;
  double visual_k = 0.25;

  void validate() const;  // throws std::invalid_argument
  // Hash of everything that can change file contents (not the output dir).
  std::string tag() const;
};

// Holds the configuration plus the lazily built sieve and zero table.
class Lab {
 public:
  explicit Lab(RunConfig config);

  const RunConfig& config() const { return config_; }
  const PrimeTable& primes();
  const ZeroTable& zeros();
  void require_sieve(std::uint64_t needed, const std::string& what) const;

 private:
  RunConfig config_;
  std::unique_ptr<PrimeTable> primes_;
  std::unique_ptr<ZeroTable> zeros_;
};

const std::vector<int>& table_ids();
const std::vector<std::string>& figure_ids();

TableData build_table(Lab& lab, int id);
TableData build_figure(Lab& lab, const std::string& id);
std::filesystem::path run_table(Lab& lab, int id);
std::filesystem::path run_figure(Lab& lab, const std::string& id);

// Final gap model used against sieve histograms: C_2(n), r = 2/3, rho_max = 1.92.
ModelConfig figure_gap_config();
// Mean relative deviation of that model from the histogram, over even
// j <= min((ln n)^2, j_max) with nonzero counts.
double fit_error(const GapHistogram& h);

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // measured value against tolerance
};

struct VerifyReport {
  std::vector<Check> checks;
  bool ok() const;
  void print(std::ostream& os) const;
};

const std::vector<std::string>& verify_suites();
VerifyReport run_verify(Lab& lab, const std::string& suite);

}  // namespace primelab
