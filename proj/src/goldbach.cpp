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

#include "primelab/goldbach.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "primelab/density.hpp"

namespace primelab {

namespace {

void require_span(const PrimeTable& t, std::uint64_t n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + " requires n >= 2");
  if (2 * n - 2 > t.limit()) {
    throw std::out_of_range(std::string(who) + ": 2n - 2 = " + std::to_string(2 * n - 2) +
                            " exceeds table limit " + std::to_string(t.limit()));
  }
}

}  // namespace

std::uint64_t goldbach_count(const PrimeTable& t, std::uint64_t n) {
  require_span(t, n, "goldbach_count");
  std::uint64_t g = 0;
  t.for_each_prime(2, n, [&](std::uint64_t p) {
    if (t.is_prime(2 * n - p)) ++g;
  });
  return g;
}

std::vector<std::uint32_t> goldbach_counts_bulk(const PrimeTable& t, std::uint64_t max_n) {
  require_span(t, max_n, "goldbach_counts_bulk");
  std::vector<std::uint32_t> g(max_n + 1, 0);
  if (max_n >= 2) g[2] = 1;  // 2 + 2
  auto odd = t.primes(3, 2 * max_n - 3);
  std::uint64_t cap = 2 * max_n;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    if (odd[i] > max_n) break;
    for (std::size_t k = i; k < odd.size(); ++k) {
      std::uint64_t s = odd[i] + odd[k];
      if (s > cap) break;
      ++g[s / 2];
    }
  }
  return g;
}

GoldbachVerification verify_goldbach(const PrimeTable& t, std::uint64_t max_n) {
  require_span(t, max_n, "verify_goldbach");
  GoldbachVerification v;
  v.max_n = max_n;
  auto small = t.primes(2, max_n);
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    std::uint64_t found = 0;
    for (std::uint64_t p : small) {
      if (p > n) break;
      if (t.is_prime(2 * n - p)) {
        found = p;
        break;
      }
    }
    if (found == 0) {
      v.first_failure = n;
      return v;
    }
    if (found > v.largest_min_prime) {
      v.largest_min_prime = found;
      v.largest_min_prime_at = n;
    }
  }
  return v;
}

GoldbachBounds goldbach_bounds(double n) {
  if (!(n >= 3.0)) throw std::invalid_argument("goldbach_bounds requires n >= 3");
  GoldbachBounds b;
  double ln = std::log(n);
  double l2n = std::log(2.0 * n);
  b.g_max = n * (2.0 * ln - l2n) / (ln * l2n);
  b.g_min = b.g_max * b.g_max / n;
  b.g_avg = n / std::pow(std::log(1.5 * n), 1.5);
  double d = log_integral(2.0 * n) - log_integral(n);
  b.g_max_li = d;
  b.g_min_li = d * d / n;
  return b;
}

double hl_singular_product(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("hl_singular_product requires n >= 1");
  double prod = 1.0;
  while (n % 2 == 0) n /= 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    prod *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
  }
  if (n > 1) prod *= static_cast<double>(n - 1) / static_cast<double>(n - 2);
  return prod;
}

double hl_prediction(std::uint64_t n, double c2) {
  if (n < 3) throw std::invalid_argument("hl_prediction requires n >= 3");
  double x = static_cast<double>(n);
  double l = std::log(x);
  return 2.0 * c2 * x / (l * l) * hl_singular_product(n);
}

HlWindow hl_mu_bounds(double n) {
  if (!(n >= 3.0)) throw std::invalid_argument("hl_mu_bounds requires n >= 3");
  double l = std::log(n);
  return {n / (l * l), 1.4 * n / l};
}

double scaled_goldbach(double n, double g) {
  double mu = std::log(std::log(n));
  return g * (1.0 + mu) / (3.0 + mu);
}

std::uint64_t prime_pair_capacity(const PrimeTable& t, std::uint64_t m) {
  std::uint64_t k = t.count(m);
  return k * ((k + 1) / 2);
}

CumulativeCounts cumulative_counts(const PrimeTable& t, std::uint64_t n,
                                   const std::vector<std::uint32_t>& bulk) {
  require_span(t, n, "cumulative_counts");
  if (bulk.size() <= n) throw std::invalid_argument("bulk counts do not cover n");
  CumulativeCounts c;
  for (std::uint64_t j = 2; j <= n; ++j) {
    c.g_star += bulk[j];
    c.g_g += bulk[j] >= 1;
  }
  c.g_d = c.g_star - c.g_g;
  c.cp_n = prime_pair_capacity(t, n);
  c.cp_2n2 = prime_pair_capacity(t, 2 * n - 2);
  c.coverage = static_cast<double>(t.count(n)) > std::sqrt(2.0 * static_cast<double>(n));
  return c;
}

CumulativeCounts cumulative_counts(const PrimeTable& t, std::uint64_t n) {
  return cumulative_counts(t, n, goldbach_counts_bulk(t, n));
}

double squared_density_estimate(const PrimeTable& t, std::uint64_t n) {
  require_span(t, n, "squared_density_estimate");
  double s = 0.0;
  for (std::uint64_t j = 1; j + 2 <= n; ++j) {
    double d = static_cast<double>(t.count(n + j) - t.count(n - j)) / (2.0 * static_cast<double>(j));
    s += d * d;
  }
  return s;
}

}  // namespace primelab
