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

#include <cmath>

#include "primelab/density.hpp"

using namespace primelab;

namespace {
const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(1000000);
  return t;
}
}  // namespace

TEST(LogValue, ArithmeticAndRoundTrip) {
  for (double v : {1e-300, 3.5e-120, 0.25, 1.0, 7.0, 6.02e23, 9.9e299}) {
    auto lv = LogValue::from_double(v);
    EXPECT_NEAR(lv.to_double() / v, 1.0, 1e-12);
    EXPECT_NEAR((-lv).to_double() / -v, 1.0, 1e-12);
  }
  auto a = LogValue::from_double(3.0);
  auto b = LogValue::from_double(-5.0);
  EXPECT_NEAR((a * b).to_double(), -15.0, 1e-12);
  EXPECT_NEAR((a + b).to_double(), -2.0, 1e-12);
  EXPECT_NEAR((a - b).to_double(), 8.0, 1e-12);
  EXPECT_NEAR((b / a).to_double(), -5.0 / 3.0, 1e-12);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE(b < a);
  EXPECT_TRUE(LogValue::from_double(-7.0) < b);
  EXPECT_TRUE(LogValue::pow10(-400) < LogValue::pow10(300));

  auto huge = LogValue::pow10(294) * LogValue::from_double(2.11);
  EXPECT_EQ(huge.scientific(3), "2.11e294");
  EXPECT_EQ(LogValue::from_double(9.996).scientific(3), "1.00e1");
}

TEST(Density, GlobalAndLocal) {
  const auto& t = table();
  EXPECT_DOUBLE_EQ(global_density(t, 10).density, 0.4);
  EXPECT_DOUBLE_EQ(global_density(t, 10).spacing, 2.5);
  EXPECT_DOUBLE_EQ(global_density(t, 2).density, 0.5);
  EXPECT_DOUBLE_EQ(global_density(t, 1000000).density, 0.078498);

  EXPECT_DOUBLE_EQ(local_density(t, 100, 10).density, 0.25);
  auto empty = local_density(t, 119, 3);
  EXPECT_EQ(empty.density, 0.0);
  EXPECT_TRUE(std::isinf(empty.spacing));
  EXPECT_DOUBLE_EQ(local_density(t, 6, 2).density, 0.5);
  auto w = local_density(t, 5000, 40);
  EXPECT_NEAR(w.density * w.spacing, 1.0, 1e-15);
  EXPECT_THROW(local_density(t, 5, 5), std::out_of_range);
  EXPECT_THROW(local_density(t, 999999, 2), std::out_of_range);
}

TEST(Density, LogIntegralValues) {
  // mpmath: li(n) - li(2)
  EXPECT_EQ(log_integral(2.0), 0.0);
  EXPECT_NEAR(log_integral(1e6), 78626.50399568207, 1e-6);
  EXPECT_NEAR(log_integral(1e3), 176.56449421003472, 1e-9);
  EXPECT_NEAR(log_integral(1e9) / 50849233.91183802, 1.0, 1e-12);
  EXPECT_THROW(log_integral(1.5), std::invalid_argument);
}

TEST(Density, LogIntegralAgreesWithHarmonicSum) {
  double sum = 0.0;
  // At 1e3 the endpoint correction (1/ln 2 + 1/ln n)/2 alone is 4e-3 of Li.
  std::uint64_t next = 10000;
  for (std::uint64_t k = 2; k <= 100000000ULL; ++k) {
    sum += 1.0 / std::log(static_cast<double>(k));
    if (k == next) {
      double li = log_integral(static_cast<double>(k));
      ASSERT_LE(std::fabs(li - sum) / li, 1e-3) << k;
      next *= 10;
      if (next > 100000000) break;
    }
  }
}

TEST(Density, SeriesMatchesQuadratureOnOverlap) {
  for (double n : {1e6, 3.3e6, 1e7, 4.2e7, 1e8, 5e8, 1e9}) {
    double q = log_integral_quadrature(n);
    double s = log_integral_series(std::log(n)).to_double();
    EXPECT_NEAR(s / q, 1.0, 1e-8) << n;
  }
}

TEST(Density, AsymptoticRegimeAgreesWithEiBranch) {
  // Both branches at the switch point ln n = 50.
  double l = 50.0;
  double rm1 = li_ratio_minus_one(l - 1e-9);
  double rm2 = li_ratio_minus_one(l + 1e-9);
  EXPECT_NEAR(rm1, rm2, 1e-9);
}

TEST(Density, RefinedEstimate) {
  double e = std::exp(1.0);
  auto a = refined_estimate(LogValue::from_log(e));
  EXPECT_NEAR(a.to_double(), std::exp(e) / e * (1 + 1.08 / std::pow(e, 1.01)), 1e-12);
  for (double n = 1e3; n <= 1e9; n *= 10) {
    double li = log_integral(n);
    double pnt = n / std::log(n);
    double an = refined_estimate(n);
    EXPECT_LT(pnt, an) << n;
    EXPECT_LT(an, li) << n;
  }
  EXPECT_THROW(refined_estimate(2.0), std::invalid_argument);
}

TEST(Density, Table5RowsFrozen) {
  // Oracle: mpmath li at 60 digits, ln n = 10^k ln 10.
  struct Row {
    double k, pnt, a;
  };
  const Row rows[] = {{10, -4.5616e-2, -2.2419e-3}, {100, -4.3620e-3, 6.0643e-5},
                      {1000, -4.3451e-4, -5.7577e-7}, {1e4, -4.3432e-5, -1.0118e-6},
                      {1e5, -4.3430e-6, -1.9736e-7}, {1e6, -4.3429e-7, -2.9172e-8}};
  for (const auto& r : rows) {
    auto got = table5_row(r.k);
    EXPECT_NEAR(got.err_pnt / r.pnt, 1.0, 1e-3) << r.k;
    EXPECT_NEAR(got.err_a / r.a, 1.0, 2e-3) << r.k;
  }
}

TEST(Density, PrimeMean) {
  const auto& t = table();
  EXPECT_DOUBLE_EQ(prime_mean(t, 10), 4.25);
  EXPECT_DOUBLE_EQ(prime_mean(t, 2), 2.0);
  EXPECT_DOUBLE_EQ(prime_mean(t, 100), 42.4);
  for (std::uint64_t n = 10; n <= 1000000; n += 997) ASSERT_LT(prime_mean(t, n) / n, 0.5) << n;
  double prev = 0;
  for (std::uint64_t n : {10000u, 100000u, 1000000u}) {
    double r = 2 * prime_mean(t, n) / n;
    EXPECT_GT(r, prev);
    EXPECT_LT(r, 1.0);
    prev = r;
  }
  EXPECT_NEAR(prime_mean_heuristic(&t, 1000), 449.83 + 1.1605, 0.01);
  EXPECT_GT(prime_mean_heuristic(nullptr, 1e12), 0);
}
