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
#include <vector>

#include "primelab/gap_model.hpp"
#include "primelab/prime_table.hpp"

namespace primelab {

// G(n): unordered prime pairs p1 <= p2 with p1 + p2 = 2n. Needs 2n - 2 <= limit.
std::uint64_t goldbach_count(const PrimeTable& t, std::uint64_t n);
// G(n) for every n in [0, max_n] by pair enumeration; entries 0 and 1 are 0.
std::vector<std::uint32_t> goldbach_counts_bulk(const PrimeTable& t, std::uint64_t max_n);

struct GoldbachVerification {
  std::uint64_t max_n = 0;
  std::uint64_t first_failure = 0;       // 0 when every n in [2, max_n] has a pair
  std::uint64_t largest_min_prime = 0;   // worst case of the smallest p1
  std::uint64_t largest_min_prime_at = 0;
  bool ok() const { return first_failure == 0; }
};

// Searches the smallest representation for each n in [2, max_n].
GoldbachVerification verify_goldbach(const PrimeTable& t, std::uint64_t max_n);

struct GoldbachBounds {
  double g_max = 0.0;      // log form n(2 ln n - ln 2n)/(ln n ln 2n)
  double g_min = 0.0;      // g_max^2 / n
  double g_avg = 0.0;      // n / ln(3n/2)^{3/2}
  double g_max_li = 0.0;   // Li(2n) - Li(n)
  double g_min_li = 0.0;   // (Li(2n) - Li(n))^2 / n
};

GoldbachBounds goldbach_bounds(double n);

// prod_{p | n, p > 2} (p - 1)/(p - 2)
double hl_singular_product(std::uint64_t n);
// 2 C_2 n/(ln n)^2 times the singular product.
double hl_prediction(std::uint64_t n, double c2 = kTwinPrimeConstant);

struct HlWindow {
  double lower = 0.0;  // n/(ln n)^2
  double upper = 0.0;  // 1.4 n/ln n
};

HlWindow hl_mu_bounds(double n);
// G(n)(1 + mu)/(3 + mu), the quantity the window bounds.
double scaled_goldbach(double n, double g);

struct CumulativeCounts {
  std::uint64_t g_star = 0;   // sum_{j=2}^{n} G(j)
  std::uint64_t cp_n = 0;     // C_P(n)
  std::uint64_t cp_2n2 = 0;   // C_P(2n - 2)
  std::uint64_t g_g = 0;      // #{j <= n : G(j) >= 1}
  std::uint64_t g_d = 0;      // g_star - g_g
  bool coverage = false;      // K(n) > sqrt(2n)
};

// C_P(m) = K(m) floor((K(m) + 1)/2)
std::uint64_t prime_pair_capacity(const PrimeTable& t, std::uint64_t m);
CumulativeCounts cumulative_counts(const PrimeTable& t, std::uint64_t n);
// Same, reusing bulk counts covering [0, n].
CumulativeCounts cumulative_counts(const PrimeTable& t, std::uint64_t n,
                                   const std::vector<std::uint32_t>& bulk);

// sum_{j=1}^{n-2} D_j(n)^2 with D_j the window density of half-width j.
// Diagnostic only.
double squared_density_estimate(const PrimeTable& t, std::uint64_t n);

}  // namespace primelab
