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

#include "primelab/zero_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#ifndef PRIMELAB_DEFAULT_DATA_DIR
#define PRIMELAB_DEFAULT_DATA_DIR "data"
#endif

namespace primelab {

namespace {
constexpr const char* kFileName = "riemann_zeros.txt";
constexpr const char* kHeader = "# riemann_zeros v1";
}  // namespace

ZeroTable ZeroTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open zero table " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind(kHeader, 0) != 0) {
    throw std::runtime_error("zero table " + path.string() + " lacks the v1 header");
  }
  ZeroTable t;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::size_t used = 0;
    double v = std::stod(line, &used);
    if (!t.heights_.empty() && !(v > t.heights_.back())) {
      throw std::runtime_error("zero table heights not increasing at line " + std::to_string(lineno));
    }
    t.heights_.push_back(v);
  }
  if (t.heights_.empty()) throw std::runtime_error("zero table " + path.string() + " is empty");
  return t;
}

std::filesystem::path ZeroTable::default_path() {
  if (const char* env = std::getenv("PRIMELAB_DATA"); env && *env) {
    std::filesystem::path p(env);
    if (std::filesystem::is_directory(p)) p /= kFileName;
    return p;
  }
  return std::filesystem::path(PRIMELAB_DEFAULT_DATA_DIR) / kFileName;
}

ZeroTable ZeroTable::load_default() { return load(default_path()); }

double ZeroTable::height(std::size_t k) const {
  if (k < 1 || k > heights_.size()) throw std::out_of_range("zero index outside the table");
  return heights_[k - 1];
}

std::size_t ZeroTable::count_below(double b) const {
  return static_cast<std::size_t>(std::lower_bound(heights_.begin(), heights_.end(), b) - heights_.begin());
}

double ZeroTable::nearest_distance(double b) const {
  auto it = std::lower_bound(heights_.begin(), heights_.end(), b);
  double best = std::numeric_limits<double>::infinity();
  if (it != heights_.end()) best = *it - b;
  if (it != heights_.begin()) best = std::min(best, b - *(it - 1));
  return best;
}

}  // namespace primelab
