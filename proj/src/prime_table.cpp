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

#include "primelab/prime_table.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "primelab/errors.hpp"

namespace primelab {

namespace {

constexpr char kMagic[5] = {'P', 'L', 'A', 'B', '1'};

std::vector<std::uint32_t> small_odd_primes(std::uint64_t upto) {
  std::vector<char> comp(upto + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 3; i <= upto; i += 2) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= upto; j += 2 * i) comp[j] = 1;
  }
  return out;
}

// Sieves odd indices [ilo, ihi) into words of `bits` (ilo is a multiple of 64).
void sieve_segment(std::uint64_t ilo, std::uint64_t ihi, std::uint64_t max_index,
                   const std::vector<std::uint32_t>& base, std::vector<std::uint8_t>& scratch,
                   std::uint64_t* bits) {
  std::uint64_t len = ihi - ilo;
  scratch.assign(len, 1);
  std::uint64_t nlo = 2 * ilo + 1;
  std::uint64_t nhi = 2 * (ihi - 1) + 1;
  for (std::uint32_t p32 : base) {
    std::uint64_t p = p32;
    std::uint64_t sq = p * p;
    if (sq > nhi) break;
    std::uint64_t start = sq;
    if (start < nlo) {
      start = (nlo + p - 1) / p * p;
      if ((start & 1) == 0) start += p;
    }
    for (std::uint64_t i = (start - 1) / 2 - ilo; i < len; i += p) scratch[i] = 0;
  }
  if (ilo == 0) scratch[0] = 0;  // 1 is not prime
  for (std::uint64_t i = 0; i < len; i += 64) {
    std::uint64_t w = 0;
    std::uint64_t n = std::min<std::uint64_t>(64, len - i);
    for (std::uint64_t b = 0; b < n; ++b) {
      if (ilo + i + b > max_index) break;
      w |= static_cast<std::uint64_t>(scratch[i + b]) << b;
    }
    bits[(ilo + i) >> 6] = w;
  }
}

}  // namespace

PrimeTable PrimeTable::build(std::uint64_t limit, const SieveOptions& opts) {
  if (limit < 2) throw std::invalid_argument("prime table limit must be >= 2");
  if (limit > kMaxLimit) throw std::invalid_argument("prime table limit exceeds 1e10");

  PrimeTable t;
  t.limit_ = limit;
  std::uint64_t max_index = (limit - 1) / 2;  // largest odd <= limit
  std::uint64_t words = (max_index >> 6) + 1;
  std::uint64_t seg = std::max<std::uint64_t>(64, (opts.segment_size + 63) / 64 * 64);
  std::uint64_t need = words * (sizeof(std::uint64_t) + sizeof(std::uint32_t)) + seg;
  if (need > opts.memory_budget_bytes) {
    throw ResourceError("prime table needs " + std::to_string(need) + " bytes, budget is " +
                        std::to_string(opts.memory_budget_bytes));
  }
  t.bits_.assign(words, 0);

  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
  auto base = small_odd_primes(root);

  std::uint64_t total_idx = max_index + 1;
  std::uint64_t nseg = (total_idx + seg - 1) / seg;
  unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(nseg)));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<std::uint8_t> scratch;
    for (std::uint64_t s = next++; s < nseg; s = next++) {
      std::uint64_t ilo = s * seg;
      std::uint64_t ihi = std::min(total_idx, ilo + seg);
      sieve_segment(ilo, ihi, max_index, base, scratch, t.bits_.data());
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  t.finish_ranks();
  return t;
}

void PrimeTable::finish_ranks() {
  rank_.resize(bits_.size());
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    rank_[w] = static_cast<std::uint32_t>(acc);
    acc += static_cast<std::uint64_t>(std::popcount(bits_[w]));
  }
}

void PrimeTable::check(std::uint64_t m) const {
  if (m > limit_) {
    throw std::out_of_range("value " + std::to_string(m) + " exceeds prime table limit " +
                            std::to_string(limit_));
  }
}

bool PrimeTable::is_prime(std::uint64_t m) const {
  check(m);
  if (m < 2) return false;
  if (m == 2) return true;
  if ((m & 1) == 0) return false;
  std::uint64_t i = (m - 1) / 2;
  return (bits_[i >> 6] >> (i & 63)) & 1;
}

std::uint64_t PrimeTable::count(std::uint64_t m) const {
  check(m);
  if (m < 2) return 0;
  if (m < 3) return 1;
  std::uint64_t i = (m - 1) / 2;
  std::uint64_t w = i >> 6;
  std::uint64_t mask = (i & 63) == 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << (i & 63)) - 1;
  return 1 + rank_[w] + static_cast<std::uint64_t>(std::popcount(bits_[w] & mask));
}

std::vector<std::uint64_t> PrimeTable::primes(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  if (hi >= lo) out.reserve(count(hi) - (lo > 0 ? count(lo - 1) : 0));
  for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

void PrimeTable::save(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os.write(kMagic, sizeof kMagic);
    unsigned char lim[8];
    for (int b = 0; b < 8; ++b) lim[b] = static_cast<unsigned char>(limit_ >> (8 * b));
    os.write(reinterpret_cast<const char*>(lim), 8);
    // Bit k of the stream is the primality of k, for k = 0..limit.
    std::vector<unsigned char> buf;
    buf.reserve(1 << 16);
    const std::uint64_t chunk = std::uint64_t{1} << 19;
    for (std::uint64_t base = 0; base <= limit_; base += chunk) {
      std::uint64_t end = std::min(limit_ + 1, base + chunk);
      buf.assign((end - base + 7) / 8, 0);
      for (std::uint64_t k = base; k < end; ++k) {
        if (is_prime(k)) buf[(k - base) >> 3] |= static_cast<unsigned char>(1u << ((k - base) & 7));
      }
      os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    }
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

PrimeTable PrimeTable::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  char magic[5];
  unsigned char lim[8];
  is.read(magic, 5);
  is.read(reinterpret_cast<char*>(lim), 8);
  if (!is || std::memcmp(magic, kMagic, 5) != 0) {
    throw std::runtime_error(path.string() + " is not a PLAB1 prime table");
  }
  std::uint64_t limit = 0;
  for (int b = 0; b < 8; ++b) limit |= static_cast<std::uint64_t>(lim[b]) << (8 * b);
  if (limit < 2 || limit > kMaxLimit) throw std::runtime_error("bad limit in " + path.string());

  PrimeTable t;
  t.limit_ = limit;
  std::uint64_t max_index = (limit - 1) / 2;
  t.bits_.assign((max_index >> 6) + 1, 0);
  std::vector<unsigned char> buf((limit + 8) / 8);
  is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!is) throw std::runtime_error("truncated prime table " + path.string());
  for (std::uint64_t k = 3; k <= limit; k += 2) {
    if ((buf[k >> 3] >> (k & 7)) & 1) {
      std::uint64_t i = (k - 1) / 2;
      t.bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
  if (!((buf[0] >> 2) & 1)) throw std::runtime_error("corrupt prime table " + path.string());
  t.finish_ranks();
  return t;
}

}  // namespace primelab
