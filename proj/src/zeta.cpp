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

#include "primelab/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primelab/bernoulli.hpp"
#include "primelab/errors.hpp"

namespace primelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kLnTwoPi = std::log(kTwoPi);

std::uint64_t half_bound(const PrimeTable& t, std::uint64_t n) {
  if (n / 2 > t.limit()) throw std::out_of_range("n exceeds twice the prime table limit");
  return n / 2;
}

// ln(1 - p^{-s}) with a singularity check.
Complex log_one_minus(double ln_p, Complex s) {
  Complex w = 1.0 - std::exp(-s * ln_p);
  if (std::abs(w) < 1e-300) throw SingularFactorError("Euler factor 1 - p^-s vanishes");
  return std::log(w);
}

}  // namespace

double mertens_product(const PrimeTable& t, std::uint64_t n) {
  std::uint64_t m = half_bound(t, n);
  double acc = 0.0;
  if (m >= 2) t.for_each_prime(2, m, [&](std::uint64_t p) { acc += std::log1p(-1.0 / static_cast<double>(p)); });
  return std::exp(acc);
}

double mertens_sum(const PrimeTable& t, std::uint64_t n) {
  std::uint64_t m = half_bound(t, n);
  if (n < 2) return 0.0;
  // Pi(j) is constant while floor(j/2) stays below the next prime.
  double sum = 0.0;
  double ln_prod = 0.0;
  std::uint64_t j = 2;
  auto flush = [&](std::uint64_t until) {
    // j in [j, until] share the current product
    if (until >= j) {
      sum += static_cast<double>(until - j + 1) * std::exp(ln_prod);
      j = until + 1;
    }
  };
  if (m >= 2) {
    t.for_each_prime(2, m, [&](std::uint64_t p) {
      flush(2 * p - 1);
      ln_prod += std::log1p(-1.0 / static_cast<double>(p));
    });
  }
  flush(n);
  return sum;
}

Complex truncated_zeta(Complex s, const PrimeTable& t, std::uint64_t n) {
  std::uint64_t m = half_bound(t, n);
  Complex acc = 0.0;
  if (m >= 2) t.for_each_prime(2, m, [&](std::uint64_t p) { acc -= log_one_minus(std::log(static_cast<double>(p)), s); });
  return std::exp(acc);
}

Complex log_zeta_prime_powers(Complex s, const PrimeTable& t, std::uint64_t n) {
  if (n > t.limit()) throw std::out_of_range("n exceeds the prime table limit");
  Complex acc = 0.0;
  if (n < 2) return acc;
  t.for_each_prime(2, n, [&](std::uint64_t p) {
    double ln_p = std::log(static_cast<double>(p));
    double pk = static_cast<double>(p);
    for (int k = 1; pk <= static_cast<double>(n); ++k, pk *= static_cast<double>(p)) {
      acc += std::exp(-s * (k * ln_p)) / static_cast<double>(k);
    }
  });
  return acc;
}

int eta_terms_for(double b) {
  double ab = std::fabs(b);
  return static_cast<int>(std::ceil((kPi * ab + std::log1p(2.0 * ab) + 30.0) / 1.7627)) + 10;
}

Complex eta_zeta(Complex s, int terms) {
  if (!(s.real() > 0.0)) throw std::domain_error("eta_zeta requires a > 0");
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  int n = terms > 0 ? terms : eta_terms_for(s.imag());
  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), stored relative to d_n.
  std::vector<long double> d(n + 1);
  long double term = 1.0L / n;
  long double acc = term;
  d[0] = acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0L * (n + i - 1) * (n - i + 1) / (static_cast<long double>(2 * i) * (2 * i - 1));
    acc += term;
    d[i] = acc;
  }
  long double dn = d[n];
  Complex sum = 0.0;
  for (int k = 0; k < n; ++k) {
    double w = static_cast<double>((d[k] - dn) / dn);
    Complex t = w * std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2 == 0) ? t : -t;
  }
  Complex eta = -sum;
  Complex denom = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
  if (std::abs(denom) < 1e-300) throw PoleError("1 - 2^(1-s) vanishes");
  return eta / denom;
}

double sieve_density(double s) {
  if (!(s > 1.0)) throw std::domain_error("sieve_density requires s > 1");
  if (s > 60.0) return std::exp2(-s) + std::pow(3.0, -s);
  double z = eta_zeta(Complex(s, 0.0)).real();
  return 1.0 - 1.0 / z;
}

double sieve_density_first_order(double s, const PrimeTable& t, std::uint64_t limit) {
  if (!(s > 1.0)) throw std::domain_error("sieve_density requires s > 1");
  double acc = 0.0;
  t.for_each_prime(2, std::min(limit, t.limit()), [&](std::uint64_t p) { acc += std::pow(static_cast<double>(p), -s); });
  return acc;
}

std::vector<Table21Row> table21_rows() {
  std::vector<Table21Row> rows;
  for (int s = 2; s <= 7; ++s) {
    double z = eta_zeta(Complex(s, 0.0)).real();
    rows.push_back({s, z, 100.0 * (1.0 - 1.0 / z)});
  }
  return rows;
}

ConstantProducts constant_products(long terms) {
  if (terms < 1) throw std::invalid_argument("constant_products needs at least one term");
  // gamma = ln((4/pi) prod 4n^2 e^{1/n} / (2n+1)^2); pi = 4 prod (n+1)/(n+1+1/(4n)).
  double lg = std::log(4.0 / kPi);
  double lp = std::log(4.0);
  for (long i = 1; i <= terms; ++i) {
    double n = static_cast<double>(i);
    lg += 1.0 / n - 2.0 * std::log1p(1.0 / (2.0 * n));
    lp -= std::log1p(1.0 / (4.0 * n * (n + 1.0)));
  }
  return {lg, std::exp(lp)};
}

HadamardFactors hadamard_factors(Complex s, long n) {
  if (s == Complex(1.0, 0.0)) throw PoleError("f(s) has a pole at s = 1");
  if (n < 1) throw std::invalid_argument("hadamard_factors needs n >= 1");
  double x = static_cast<double>(n);
  Complex f = 0.25 * (s + 2.0) / (s - 1.0) * std::exp(s * std::log(4.0 / std::numbers::e));
  Complex g = 1.0 + s / (2.0 * (x + 1.0));
  double h = 4.0 * x * x * x / ((4.0 * x * x - 1.0) * (x + 1.0));
  return {f, g, h};
}

long hadamard_zero_count(double b) {
  double ab = std::fabs(b);
  if (ab <= kTwoPi * std::numbers::e) return 1;
  long n = static_cast<long>(std::floor(zero_count(ab))) + 1;
  return std::max(1L, n);
}

Complex truncated_hadamard(Complex s, const ZeroTable& zeros) {
  long n_max = hadamard_zero_count(s.imag());
  if (static_cast<std::size_t>(n_max) > zeros.size()) {
    throw std::out_of_range("zero table too short for this height");
  }
  HadamardFactors base = hadamard_factors(s, 1);
  if (std::abs(base.f) == 0.0) return 0.0;
  Complex acc = std::log(base.f);
  for (long k = 1; k <= n_max; ++k) {
    HadamardFactors hk = hadamard_factors(s, k);
    Complex rho(0.5, zeros.height(static_cast<std::size_t>(k)));
    Complex rho_bar = std::conj(rho);
    Complex w1 = 1.0 - s / rho;
    Complex w2 = 1.0 - s / rho_bar;
    if (std::abs(hk.g) == 0.0 || std::abs(w1) == 0.0 || std::abs(w2) == 0.0) return 0.0;
    acc += std::log(hk.g) + s * std::log(hk.h) + s / (2.0 * static_cast<double>(k)) + std::log(w1) + s / rho +
           std::log(w2) + s / rho_bar;
  }
  return std::exp(acc);
}

Complex functional_ratio(Complex s) {
  Complex half = kPi * s / 2.0;
  bool odd_int = s.imag() == 0.0 && std::fmod(std::fabs(s.real()), 2.0) == 1.0;
  if (odd_int) throw PoleError("cos(pi s/2) vanishes at odd integers");
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) return 0.0;
  Complex ln_v = s * kLnTwoPi - std::numbers::ln2 - log_cos(half) - log_gamma(s);
  return std::exp(ln_v);
}

FunctionalRatio functional_ratio_parts(Complex s, double k) {
  Complex v = functional_ratio(s);
  double v1 = std::pow(std::fabs(std::abs(v) - 1.0), k);
  double v2 = std::pow(std::fabs((std::arg(v) + kPi) / kTwoPi), k);
  return {v, v1, v2};
}

double zero_count(double b) {
  if (!(b > 0.0)) throw std::domain_error("zero_count requires b > 0");
  return b / kTwoPi * std::log(b / (kTwoPi * std::numbers::e));
}

double continued_arg(double a, double b) {
  // On a = 2, |zeta - 1| < zeta(2) - 1 < 1 so the principal arg is continuous.
  Complex z = eta_zeta(Complex(2.0, b));
  double arg = std::arg(z);
  double prev = arg;
  double x = 2.0;
  double h = 0.02;
  while (x > a) {
    double next_x = std::max(a, x - h);
    Complex zn = eta_zeta(Complex(next_x, b));
    double d = std::remainder(std::arg(zn) - prev, kTwoPi);
    if (std::fabs(d) > kPi / 4.0 && h > 1e-6) {
      h *= 0.5;
      continue;
    }
    arg += d;
    prev = std::arg(zn);
    x = next_x;
    if (std::fabs(d) < kPi / 32.0) h = std::min(0.1, h * 1.5);
  }
  return arg;
}

RefinedZeroCount refined_zero_count(double b) {
  RefinedZeroCount r{};
  r.main = zero_count(b);
  r.s_term = continued_arg(0.5, b) / kPi;
  r.value = r.main + 7.0 / 8.0 + r.s_term;
  r.accurate = std::fabs(b) <= 120.0;
  return r;
}

double zero_prime_ratio(double n) {
  if (!(n > 0.0)) throw std::domain_error("zero_prime_ratio requires n > 0");
  return std::log(n / (kTwoPi * std::numbers::e)) * std::log(n) / kTwoPi;
}

double inverse_scale(double q) {
  if (!(q >= 0.0)) throw std::domain_error("inverse_scale requires q >= 0");
  double c = 1.0 + kLnTwoPi;
  return std::sqrt(kTwoPi * std::numbers::e) * std::exp(0.5 * std::sqrt(c * c + 8.0 * kPi * q));
}

LogValue bernoulli_from_count(int n, double count) {
  return LogValue::from_log(0.5 * std::log(16.0 * kPi * n) + kTwoPi * count);
}

BernoulliBridge bernoulli_zero_bridge(int n) {
  if (n < 1 || 2 * n > kMaxBernoulliIndex) throw std::out_of_range("bernoulli_zero_bridge needs 1 <= n <= 200");
  BernoulliBridge r{};
  double ln_b = log_abs(bernoulli_exact(2 * n));
  r.b_exact = LogValue::from_log(ln_b);
  r.n_est = (ln_b - 0.5 * std::log(16.0 * kPi * n)) / kTwoPi;
  r.b_est = bernoulli_from_count(n, r.n_est);
  double x = 2.0 * n;
  r.zeta_est = LogValue::from_log(0.5 * std::log(4.0 * kPi * n) + x * kLnTwoPi - std::lgamma(x + 1.0) + kTwoPi * r.n_est);
  return r;
}

double lambert_zero_height(int k) {
  if (k < 2) throw std::invalid_argument("lambert_zero_height needs k >= 2");
  double u = k - 11.0 / 8.0;
  return kTwoPi * u / lambert_w0(u / std::numbers::e);
}

}  // namespace primelab
