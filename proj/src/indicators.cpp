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

#include "primelab/indicators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace primelab {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// sum_{i=1}^{n} floor(n/i)
std::uint64_t divisor_summatory(std::uint64_t n) {
  std::uint64_t r = isqrt(n);
  std::uint64_t s = 0;
  for (std::uint64_t i = 1; i <= r; ++i) s += n / i;
  return 2 * s - r * r;
}

std::uint64_t tau(std::uint64_t n) {
  std::uint64_t count = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

}  // namespace

std::uint64_t nontrivial_divisor_count(std::uint64_t n) {
  require(n >= 2, "nontrivial_divisor_count requires n >= 2");
  return tau(n) - 2;
}

std::uint64_t cumulative_zero_remainders(std::uint64_t n) {
  require(n >= 2, "cumulative_zero_remainders requires n >= 2");
  // Z(n) = D(n) - 2n + 1 where D is the divisor summatory function.
  return divisor_summatory(n) + 1 - 2 * n;
}

Fraction omega_ratio(std::uint64_t n) {
  require(n >= 4, "omega_ratio requires n >= 4");
  std::uint64_t m = (n - 2) / 2;
  std::uint64_t num = m - nontrivial_divisor_count(n);
  std::uint64_t g = std::gcd(num, m);
  if (num == 0) return {0, 1};
  return {num / g, m / g};
}

int prime_indicator(const PrimeTable& t, std::uint64_t n) {
  require(n >= 4, "prime_indicator requires n >= 4");
  return t.is_prime(n) ? 1 : 0;
}

int extended_prime_indicator(const PrimeTable& t, std::uint64_t n) {
  require(n >= 2, "extended_prime_indicator requires n >= 2");
  return t.is_prime(n) ? 1 : 0;
}

std::uint64_t common_divisor_count(std::uint64_t n, std::uint64_t x) {
  require(n >= 2 && x >= 2, "common_divisor_count requires n, x >= 2");
  return tau(std::gcd(n, x)) - 1;
}

int coprime_indicator(std::uint64_t n, std::uint64_t x) {
  require(n >= 2 && x >= 2, "coprime_indicator requires n, x >= 2");
  return std::gcd(n, x) == 1 ? 1 : 0;
}

std::uint64_t coprime_count(std::uint64_t n, std::uint64_t x) {
  require(n >= 2 && x >= 2, "coprime_count requires n, x >= 2");
  // Inclusion-exclusion over the distinct prime factors of x.
  std::vector<std::uint64_t> ps;
  std::uint64_t r = x;
  for (std::uint64_t p = 2; p * p <= r; ++p) {
    if (r % p) continue;
    ps.push_back(p);
    while (r % p == 0) r /= p;
  }
  if (r > 1) ps.push_back(r);
  std::int64_t total = 0;
  std::size_t k = ps.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::uint64_t d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) {
        d *= ps[i];
        ++bits;
      }
    }
    auto term = static_cast<std::int64_t>(n / d);
    total += (bits & 1) ? -term : term;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t totient(std::uint64_t n) {
  require(n >= 1, "totient requires n >= 1");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

double totient_min(std::uint64_t n, std::uint64_t w) {
  double v = static_cast<double>(n);
  for (std::uint64_t p = 2; p <= w; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) v *= 1.0 - 1.0 / static_cast<double>(p);
  }
  return v;
}

double totient_max(std::uint64_t n) { return static_cast<double>(n) - 1.0; }

int pair_indicator(const PrimeTable& t, std::uint64_t n, std::uint64_t x) {
  require(n >= 4, "pair_indicator requires n >= 4");
  require(x >= 2 && x % 2 == 0, "pair_indicator requires even x >= 2");
  if (n + x > t.limit()) {
    throw std::out_of_range("pair_indicator: n + x = " + std::to_string(n + x) +
                            " exceeds table limit");
  }
  if (!t.is_prime(n)) return 0;
  bool below = n > x && t.is_prime(n - x);
  return (below || t.is_prime(n + x)) ? 1 : 0;
}

PairCount pair_counts(const PrimeTable& t, std::uint64_t n, std::uint64_t x) {
  require(n >= 4, "pair_counts requires n >= 4");
  require(x >= 2 && x % 2 == 0, "pair_counts requires even x >= 2");
  if (n + x > t.limit()) {
    throw std::out_of_range("pair_counts: n + x = " + std::to_string(n + x) +
                            " exceeds table limit");
  }
  PairCount pc;
  pc.x = x;
  pc.gamma = t.is_prime(3 + x) ? 1 : 0;
  std::uint64_t members = static_cast<std::uint64_t>(pc.gamma);
  t.for_each_prime(4, n, [&](std::uint64_t p) {
    bool below = p > x && t.is_prime(p - x);
    bool above = t.is_prime(p + x);
    if (below || above) ++members;
  });
  pc.member_count = members;
  pc.pair_count = prime_pair_count(t, n, x);
  return pc;
}

std::uint64_t prime_pair_count(const PrimeTable& t, std::uint64_t n, std::uint64_t x) {
  require(x >= 2 && x % 2 == 0, "prime_pair_count requires even x >= 2");
  if (n > t.limit()) throw std::out_of_range("prime_pair_count: n exceeds table limit");
  std::uint64_t pairs = 0;
  if (n >= x + 2) {
    t.for_each_prime(2, n - x, [&](std::uint64_t p) {
      if (t.is_prime(p + x)) ++pairs;
    });
  }
  return pairs;
}

namespace floor_forms {

std::uint64_t zero_remainders(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t i = 2; i <= n / 2; ++i) s += (n - i) / i;
  return s;
}

std::uint64_t zero_remainders_alt(std::uint64_t n) {
  std::int64_t s = 1 - static_cast<std::int64_t>(n) - static_cast<std::int64_t>(n / 2);
  for (std::uint64_t i = 1; i <= n / 2; ++i) s += static_cast<std::int64_t>(n / i);
  return static_cast<std::uint64_t>(s);
}

std::uint64_t divisor_count(std::uint64_t n) {
  return zero_remainders(n) - (n >= 3 ? zero_remainders(n - 1) : 0);
}

std::uint64_t divisor_count_odd(std::uint64_t n) {
  // For odd n only odd i can divide; floor(n/i) - floor((n-1)/i) over odd 3 <= i <= n/3.
  std::uint64_t s = 0;
  for (std::uint64_t i = 3; i <= n / 3; i += 2) s += n / i - (n - 1) / i;
  return s;
}

int prime_indicator(std::uint64_t n) {
  std::uint64_t m = (n - 2) / 2;
  return static_cast<int>((m - divisor_count(n)) / m);
}

}  // namespace floor_forms

}  // namespace primelab
