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

#include "primelab/bernoulli.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace primelab {

namespace {

std::mutex cache_mu;
std::vector<mpq_class>& cache() {
  static std::vector<mpq_class> c{mpq_class(1)};
  return c;
}

}  // namespace

BigRational bernoulli_exact(int s) {
  if (s < 0 || s > kMaxBernoulliIndex) {
    throw std::invalid_argument("bernoulli_exact supports 0 <= s <= 400");
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  auto& b = cache();
  while (static_cast<int>(b.size()) <= s) {
    int m = static_cast<int>(b.size());
    mpq_class sum(0);
    mpz_class binom(1);  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      if (j > 1 && j % 2 == 1) {
        // odd B_j vanish beyond B_1; keep the binomial moving
      } else {
        sum += mpq_class(binom) * b[j];
      }
      binom = binom * (m + 1 - j) / (j + 1);
    }
    mpq_class next = -sum / (m + 1);
    next.canonicalize();
    b.push_back(next);
  }
  return b[s];
}

double log_abs(const BigRational& q) {
  if (q == 0) throw std::domain_error("log_abs of zero");
  long en = 0;
  long ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(std::fabs(mn / md)) + static_cast<double>(en - ed) * std::numbers::ln2;
}

LogValue bernoulli_asymptotic(int s) {
  if (s < 2 || s % 2 != 0) throw std::invalid_argument("bernoulli_asymptotic needs even s >= 2");
  double x = s;
  return LogValue::from_log(0.5 * std::log(8.0 * std::numbers::pi * x) +
                            x * std::log(x / (2.0 * std::numbers::pi * std::numbers::e)));
}

LogValue bernoulli_euler_product(int s, const PrimeTable& t, std::uint64_t prime_limit) {
  if (s < 2 || s % 2 != 0) throw std::invalid_argument("bernoulli_euler_product needs even s >= 2");
  double x = s;
  double ln_prod = 0.0;
  t.for_each_prime(2, std::min(prime_limit, t.limit()), [&](std::uint64_t p) {
    ln_prod -= std::log1p(-std::pow(static_cast<double>(p), -x));
  });
  double ln_mag = std::lgamma(x + 1.0) - (x - 1.0) * std::numbers::ln2 - x * std::log(std::numbers::pi) + ln_prod;
  // -cos(pi s/2) = (-1)^{s/2 + 1}
  int sign = (s / 2) % 2 == 0 ? -1 : 1;
  return LogValue::from_log(ln_mag, sign);
}

}  // namespace primelab
