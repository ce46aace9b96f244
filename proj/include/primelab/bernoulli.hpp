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

#include <gmpxx.h>

#include "primelab/log_value.hpp"
#include "primelab/prime_table.hpp"

namespace primelab {

// Exact rationals are GMP's mpq_class (always canonical: reduced, den > 0).
using BigRational = mpq_class;

inline constexpr int kMaxBernoulliIndex = 400;

// B_s from B_s = -(1/(s+1)) sum_{j<s} C(s+1, j) B_j, B_1 = -1/2.
// Results are cached; thread-safe.
BigRational bernoulli_exact(int s);

// |B_s| ~ sqrt(8 pi s) (s / 2 pi e)^s, for even s >= 2.
LogValue bernoulli_asymptotic(int s);

// -s!/(2^{s-1} pi^s) cos(pi s/2) prod_{p <= prime_limit} 1/(1 - p^{-s}); even s >= 2.
LogValue bernoulli_euler_product(int s, const PrimeTable& t, std::uint64_t prime_limit = 100000);

// ln |q| for a nonzero rational of any size.
double log_abs(const BigRational& q);

}  // namespace primelab
