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

#include "primelab/prime_table.hpp"

namespace primelab {

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct PairCount {
  std::uint64_t x = 0;
  std::uint64_t member_count = 0;  // K_x(n)
  std::uint64_t pair_count = 0;    // pi_x(n), unordered pairs with p + x <= n
  int gamma = 0;                   // 1 iff 3 and 3 + x are prime
};

// P(n): divisors strictly between 1 and n.
std::uint64_t nontrivial_divisor_count(std::uint64_t n);
// Z(n), via the divisor summatory function in O(sqrt n).
std::uint64_t cumulative_zero_remainders(std::uint64_t n);
// omega(n) = 1 - P(n) / floor((n-2)/2), reduced.
Fraction omega_ratio(std::uint64_t n);

// I(n) for n >= 4, answered from the table.
int prime_indicator(const PrimeTable& t, std::uint64_t n);
// Same with I(2) = I(3) = 1.
int extended_prime_indicator(const PrimeTable& t, std::uint64_t n);

std::uint64_t common_divisor_count(std::uint64_t n, std::uint64_t x);
int coprime_indicator(std::uint64_t n, std::uint64_t x);
// #{1 <= i <= n : gcd(i, x) = 1}; i = 1 is included so K_C(n, n) = phi(n).
std::uint64_t coprime_count(std::uint64_t n, std::uint64_t x);
std::uint64_t totient(std::uint64_t n);
// n * prod_{p <= w} (1 - 1/p), the lower envelope.
double totient_min(std::uint64_t n, std::uint64_t w);
// n - 1, attained at primes.
double totient_max(std::uint64_t n);

int pair_indicator(const PrimeTable& t, std::uint64_t n, std::uint64_t x);
PairCount pair_counts(const PrimeTable& t, std::uint64_t n, std::uint64_t x);
// pi_x(n) alone; needs only n <= limit.
std::uint64_t prime_pair_count(const PrimeTable& t, std::uint64_t n, std::uint64_t x);

// Literal floor-sum forms. Quadratic cost; kept for cross-checks on small n.
namespace floor_forms {
std::uint64_t zero_remainders(std::uint64_t n);      // sum_{i=2}^{n/2} floor((n-i)/i)
std::uint64_t zero_remainders_alt(std::uint64_t n);  // 1 - n - floor(n/2) + sum_{i=1}^{n/2} floor(n/i)
std::uint64_t divisor_count(std::uint64_t n);        // Z(n) - Z(n-1)
std::uint64_t divisor_count_odd(std::uint64_t n);    // odd-n form, i over odd values only
int prime_indicator(std::uint64_t n);                // floor(omega(n))
}  // namespace floor_forms

}  // namespace primelab
