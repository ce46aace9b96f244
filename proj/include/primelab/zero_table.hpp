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

#include <filesystem>
#include <vector>

namespace primelab {

// Reference heights of the first nontrivial zeros, read from a text file:
// a `# riemann_zeros v1` header, then one decimal height per line.
class ZeroTable {
 public:
  static ZeroTable load(const std::filesystem::path& path);
  // PRIMELAB_DATA (a file, or a directory holding riemann_zeros.txt), else the
  // data directory recorded at build time.
  static ZeroTable load_default();
  static std::filesystem::path default_path();

  const std::vector<double>& heights() const { return heights_; }
  std::size_t size() const { return heights_.size(); }
  // 1-based, as in b_1 = 14.1347...
  double height(std::size_t k) const;
  std::size_t count_below(double b) const;
  double nearest_distance(double b) const;

 private:
  std::vector<double> heights_;
};

}  // namespace primelab
