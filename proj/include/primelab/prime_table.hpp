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
#include <vector>

namespace primelab {

struct SieveOptions {
  // Odd entries per segment; rounded up to a multiple of 64.
  std::uint64_t segment_size = std::uint64_t{1} << 22;
  unsigned threads = 1;
  std::uint64_t memory_budget_bytes = std::uint64_t{8} << 30;
};

// Primality bits and cumulative counts up to a fixed limit. Odd numbers only
// are stored; 2 is handled explicitly. Immutable once built.
class PrimeTable {
 public:
  static constexpr std::uint64_t kMaxLimit = 10'000'000'000ULL;

  PrimeTable() = default;
  static PrimeTable build(std::uint64_t limit, const SieveOptions& opts = {});

  std::uint64_t limit() const { return limit_; }

  // Throws std::out_of_range above the limit.
  bool is_prime(std::uint64_t m) const;
  // K(m): number of primes <= m.
  std::uint64_t count(std::uint64_t m) const;
  std::uint64_t total() const { return count(limit_); }

  std::vector<std::uint64_t> primes(std::uint64_t lo, std::uint64_t hi) const;

  // Calls f(p) for every prime in [lo, hi], ascending.
  template <class F>
  void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
    check(hi);
    if (lo > hi) return;
    if (lo <= 2 && hi >= 2) f(std::uint64_t{2});
    std::uint64_t first = lo < 3 ? 0 : (lo - 1) / 2;
    if (lo >= 3 && (lo & 1) == 0) first = lo / 2;
    if (hi < 3) return;
    std::uint64_t last = (hi - 1) / 2;
    if (first > last) return;
    std::uint64_t w = first >> 6;
    std::uint64_t wend = last >> 6;
    for (; w <= wend; ++w) {
      std::uint64_t bits = bits_[w];
      if (w == (first >> 6)) bits &= ~std::uint64_t{0} << (first & 63);
      if (w == wend && (last & 63) != 63) bits &= (std::uint64_t{2} << (last & 63)) - 1;
      while (bits) {
        int t = __builtin_ctzll(bits);
        f(2 * ((w << 6) + static_cast<std::uint64_t>(t)) + 1);
        bits &= bits - 1;
      }
    }
  }

  void save(const std::filesystem::path& path) const;
  static PrimeTable load(const std::filesystem::path& path);

 private:
  void check(std::uint64_t m) const;
  void finish_ranks();

  std::uint64_t limit_ = 0;
  // bit i of word w marks 2*(64w+i)+1 prime.
  std::vector<std::uint64_t> bits_;
  // odd primes strictly before word w.
  std::vector<std::uint32_t> rank_;
};

}  // namespace primelab
