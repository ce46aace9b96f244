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

#include <array>
#include <cstdint>
#include <vector>

#include "primelab/log_value.hpp"
#include "primelab/prime_table.hpp"
#include "primelab/special.hpp"
#include "primelab/zero_table.hpp"

namespace primelab {

// Pi(n) = prod_{p <= n/2} (1 - 1/p). Requires n <= 2 * t.limit().
double mertens_product(const PrimeTable& t, std::uint64_t n);
// sum_{j=2}^{n} Pi(j), one pass over the primes.
double mertens_sum(const PrimeTable& t, std::uint64_t n);

// zeta(s, n) = prod_{p <= n/2} (1 - p^{-s})^{-1}, summed as complex logs.
Complex truncated_zeta(Complex s, const PrimeTable& t, std::uint64_t n);
// sum over prime powers m <= n of Lambda(m) / (m^s ln m) = sum 1/(k p^{ks}).
Complex log_zeta_prime_powers(Complex s, const PrimeTable& t, std::uint64_t n);

// zeta via the alternating eta series with Borwein's weights. terms == 0
// picks a count giving ~1e-10 for a >= 1/2, |b| <= 120.
Complex eta_zeta(Complex s, int terms = 0);
int eta_terms_for(double b);

// M(s) = 1 - 1/zeta(s) for real s > 1.
double sieve_density(double s);
// First-order form sum_{p <= limit} p^{-s}.
double sieve_density_first_order(double s, const PrimeTable& t, std::uint64_t limit);

struct Table21Row {
  int s;
  double zeta;
  double m_percent;
};
std::vector<Table21Row> table21_rows();

struct ConstantProducts {
  double gamma;
  double pi;
};
ConstantProducts constant_products(long terms);

// f(s), g(s, n), h(n) of the factorized Hadamard form.
struct HadamardFactors {
  Complex f;
  Complex g;
  double h;
};
HadamardFactors hadamard_factors(Complex s, long n);
// Number of zero pairs used at height b; at least 1.
long hadamard_zero_count(double b);
Complex truncated_hadamard(Complex s, const ZeroTable& zeros);

inline constexpr double kVisualExponent = 0.25;

struct FunctionalRatio {
  Complex v;
  double v1;
  double v2;
};
// V(s) = zeta(s)/zeta(1-s) = (2 pi)^s / (2 cos(pi s/2) Gamma(s)).
Complex functional_ratio(Complex s);
FunctionalRatio functional_ratio_parts(Complex s, double k = kVisualExponent);

// (b / 2 pi) ln(b / 2 pi e).
double zero_count(double b);

struct RefinedZeroCount {
  double main;
  double s_term;  // arg zeta(1/2 + ib) / pi
  double value;   // main + 7/8 + s_term
  bool accurate;  // false when |b| > 120
};
RefinedZeroCount refined_zero_count(double b);
// arg zeta(a + ib) continued from 2 along 2 -> 2+ib -> a+ib.
double continued_arg(double a, double b);

// q(n) = ln(n / 2 pi e) ln(n) / 2 pi and its inverse.
double zero_prime_ratio(double n);
double inverse_scale(double q);

struct BernoulliBridge {
  double n_est;       // N(2n) recovered from |B_2n|
  LogValue b_exact;   // |B_2n|
  LogValue b_est;     // |B_2n| rebuilt from n_est
  LogValue zeta_est;  // zeta(2n) from n_est
};
BernoulliBridge bernoulli_zero_bridge(int n);
LogValue bernoulli_from_count(int n, double count);

// 2 pi (k - 11/8) / W0((k - 11/8) / e).
double lambert_zero_height(int k);

}  // namespace primelab
