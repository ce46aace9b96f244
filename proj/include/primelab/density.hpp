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

#include "primelab/log_value.hpp"
#include "primelab/prime_table.hpp"

namespace primelab {

struct GlobalDensity {
  double density = 0.0;  // K(n)/n
  double spacing = 0.0;  // n/K(n)
};

struct DensityWindow {
  std::uint64_t n = 0;
  std::uint64_t x = 0;
  double density = 0.0;
  double spacing = 0.0;  // +inf when the window holds no prime
};

struct Table5Row {
  double err_pnt = 0.0;  // n/(Li(n) ln n) - 1
  double err_a = 0.0;    // A(n)/Li(n) - 1
};

inline constexpr double kLi2 = 1.045163780117492784844588889194613136522615578151;

GlobalDensity global_density(const PrimeTable& t, std::uint64_t n);
DensityWindow local_density(const PrimeTable& t, std::uint64_t n, std::uint64_t x);

// Li(n) = integral from 2 to n of du/ln u.
// Adaptive Gauss-Kronrod for n <= 1e9, log-domain series above.
double log_integral(double n);
LogValue log_integral(const LogValue& n);
double log_integral_quadrature(double n);
// Series evaluation from ln n alone: Ei-based for ln n < 50, asymptotic beyond.
LogValue log_integral_series(double ln_n);
// Li(n) ln n / n - 1, computed without forming n.
double li_ratio_minus_one(double ln_n);

// A(n) = (n/ln n)(1 + 1.08/(ln n)^1.01)
LogValue refined_estimate(const LogValue& n);
double refined_estimate(double n);

// Row of the relative-error table for n = 10^log10_n.
Table5Row table5_row(double log10_n);

// Mean of the primes <= n.
double prime_mean(const PrimeTable& t, std::uint64_t n);
// (n/2) ln(n/2)/ln n + K(n) ln n / n, with A(n) standing in for K(n)
// when n is beyond the table (or no table is given).
double prime_mean_heuristic(const PrimeTable* t, double n);

}  // namespace primelab
