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

#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"
#include "primelab/indicators.hpp"

using namespace primelab;

namespace {
const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(200000);
  return t;
}
}  // namespace

TEST(Indicators, DivisorCountExamples) {
  EXPECT_EQ(nontrivial_divisor_count(12), 4u);
  EXPECT_EQ(nontrivial_divisor_count(7), 0u);
  EXPECT_EQ(nontrivial_divisor_count(9), 1u);
  EXPECT_THROW(nontrivial_divisor_count(1), std::invalid_argument);
}

TEST(Indicators, ZeroRemainderExamples) {
  EXPECT_EQ(cumulative_zero_remainders(4), 1u);
  EXPECT_EQ(cumulative_zero_remainders(2), 0u);
  EXPECT_EQ(cumulative_zero_remainders(3), 0u);
  EXPECT_EQ(cumulative_zero_remainders(10), cumulative_zero_remainders(9) + 2);
}

TEST(Indicators, FloorFormsAgreeUpTo1e4) {
  for (std::uint64_t n = 4; n <= 10000; ++n) {
    std::uint64_t p = oracle::nontrivial_divisors(n);
    ASSERT_EQ(nontrivial_divisor_count(n), p) << n;
    ASSERT_EQ(floor_forms::zero_remainders(n), cumulative_zero_remainders(n)) << n;
    ASSERT_EQ(floor_forms::zero_remainders_alt(n), cumulative_zero_remainders(n)) << n;
    ASSERT_EQ(cumulative_zero_remainders(n) - cumulative_zero_remainders(n - 1), p) << n;
    ASSERT_EQ(floor_forms::divisor_count(n), p) << n;
    if (n % 2 == 1) {
      ASSERT_EQ(floor_forms::divisor_count_odd(n), p) << n;
    }
    ASSERT_EQ(floor_forms::prime_indicator(n), oracle::is_prime(n) ? 1 : 0) << n;
  }
}

TEST(Indicators, OmegaRatio) {
  EXPECT_EQ(omega_ratio(9), (Fraction{2, 3}));
  EXPECT_EQ(omega_ratio(7), (Fraction{1, 1}));
  EXPECT_EQ(omega_ratio(4).num, 0u);
  EXPECT_EQ(omega_ratio(6).num, 0u);
  for (std::uint64_t n = 7; n <= 5000; ++n) ASSERT_GT(omega_ratio(n).num, 0u) << n;
  EXPECT_THROW(omega_ratio(3), std::invalid_argument);
}

TEST(Indicators, PrimeIndicatorAgreesWithTrialDivision) {
  const auto& t = table();
  for (std::uint64_t n = 4; n <= 100000; ++n) {
    int ind = prime_indicator(t, n);
    ASSERT_EQ(ind, oracle::is_prime(n) ? 1 : 0) << n;
    ASSERT_EQ(ind == 1, nontrivial_divisor_count(n) == 0) << n;
  }
  EXPECT_EQ(extended_prime_indicator(t, 2), 1);
  EXPECT_EQ(extended_prime_indicator(t, 3), 1);
  EXPECT_THROW(prime_indicator(t, 3), std::invalid_argument);
}

TEST(Indicators, CountFromIndicatorSum) {
  const auto& t = table();
  std::uint64_t k = 2;
  for (std::uint64_t n = 4; n <= 10000; ++n) {
    k += prime_indicator(t, n);
    ASSERT_EQ(k, t.count(n)) << n;
  }
}

TEST(Indicators, CommonDivisors) {
  EXPECT_EQ(common_divisor_count(12, 18), 3u);
  EXPECT_EQ(common_divisor_count(8, 9), 0u);
  EXPECT_EQ(common_divisor_count(7, 7), 1u);
  EXPECT_EQ(coprime_indicator(8, 9), 1);
  EXPECT_EQ(coprime_indicator(6, 9), 0);
  EXPECT_EQ(coprime_indicator(2, 4), 0);
  for (std::uint64_t n = 2; n <= 500; ++n) {
    for (std::uint64_t x = 2; x <= 500; ++x) {
      ASSERT_EQ(coprime_indicator(n, x), std::gcd(n, x) == 1 ? 1 : 0);
    }
  }
}

TEST(Indicators, CoprimeCountIsTotient) {
  EXPECT_EQ(coprime_count(10, 10), 4u);
  EXPECT_EQ(coprime_count(7, 7), 6u);
  EXPECT_EQ(coprime_count(12, 12), 4u);
  for (std::uint64_t n = 2; n <= 10000; ++n) ASSERT_EQ(coprime_count(n, n), totient(n)) << n;
  for (std::uint64_t n = 2; n <= 300; ++n) ASSERT_EQ(totient(n), oracle::totient(n)) << n;
  // Brute force at n != x.
  for (std::uint64_t n : {17u, 100u, 231u}) {
    for (std::uint64_t x : {6u, 35u, 64u}) {
      std::uint64_t c = 0;
      for (std::uint64_t i = 1; i <= n; ++i) c += std::gcd(i, x) == 1;
      EXPECT_EQ(coprime_count(n, x), c);
    }
  }
}

TEST(Indicators, TotientEnvelope) {
  // Below the primorial 2*3*5*7*11 = 2310 every n has at most four odd primes
  // dividing it, so the w = 11 envelope holds.
  for (std::uint64_t n = 2; n < 2310; ++n) {
    double phi = static_cast<double>(totient(n));
    ASSERT_LE(totient_min(n, 11), phi + 1e-9) << n;
    ASSERT_LE(phi, totient_max(n)) << n;
  }
}

TEST(Indicators, PairIndicator) {
  const auto& t = table();
  EXPECT_EQ(pair_indicator(t, 5, 2), 1);
  EXPECT_EQ(pair_indicator(t, 9, 2), 0);
  EXPECT_EQ(pair_indicator(t, 23, 6), 1);
  EXPECT_THROW(pair_indicator(t, 199999, 2), std::out_of_range);
  EXPECT_THROW(pair_indicator(t, 11, 3), std::invalid_argument);
}

TEST(Indicators, PairCounts) {
  const auto& t = table();
  auto a = pair_counts(t, 10, 2);
  EXPECT_EQ(a.member_count, 3u);
  EXPECT_EQ(a.pair_count, 2u);
  EXPECT_EQ(a.gamma, 1);
  EXPECT_EQ(pair_counts(t, 1000, 2).pair_count, 35u);
  EXPECT_EQ(pair_counts(t, 10, 4).pair_count, 1u);
  EXPECT_EQ(pair_counts(t, 100, 6).gamma, 0);

  for (std::uint64_t n = 4; n <= 5000; n += 37) {
    auto pc = pair_counts(t, n, 2);
    ASSERT_LE(pc.pair_count, pc.member_count);
    ASSERT_LE(pc.member_count, 2 * pc.pair_count + 1);
    std::uint64_t pairs = 0;
    for (std::uint64_t p = 2; p + 2 <= n; ++p) pairs += oracle::is_prime(p) && oracle::is_prime(p + 2);
    ASSERT_EQ(pc.pair_count, pairs);
  }
}
