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

#include "primelab/density.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace primelab {

namespace {

constexpr double kAsymptoticThreshold = 50.0;

// Sum_{k>=1} k!/L^k truncated at k* = floor(L) or at the first term that
// stops decreasing.
double asymptotic_tail(double ln_n) {
  double term = 1.0;
  double sum = 0.0;
  auto kmax = static_cast<long>(std::floor(ln_n));
  for (long k = 1; k <= kmax; ++k) {
    double next = term * static_cast<double>(k) / ln_n;
    if (next >= term) break;
    term = next;
    sum += term;
  }
  return sum;
}

}  // namespace

GlobalDensity global_density(const PrimeTable& t, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("global_density requires n >= 2");
  double k = static_cast<double>(t.count(n));
  return {k / static_cast<double>(n), static_cast<double>(n) / k};
}

DensityWindow local_density(const PrimeTable& t, std::uint64_t n, std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("local_density requires x >= 1");
  if (n < x + 1 || n + x > t.limit()) {
    throw std::out_of_range("density window [" + std::to_string(n) + " +- " + std::to_string(x) +
                            "] leaves the table");
  }
  DensityWindow w{n, x, 0.0, 0.0};
  double primes = static_cast<double>(t.count(n + x) - t.count(n - x));
  w.density = primes / (2.0 * static_cast<double>(x));
  w.spacing = primes > 0 ? 1.0 / w.density : std::numeric_limits<double>::infinity();
  return w;
}

double log_integral_quadrature(double n) {
  if (!(n >= 2.0)) throw std::invalid_argument("log_integral requires n >= 2");
  if (n == 2.0) return 0.0;
  // u = e^t turns the integrand into e^t / t, smooth on [ln 2, ln n].
  auto f = [](double t) { return std::exp(t) / t; };
  return boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, std::log(2.0), std::log(n),
                                                                       20, 1e-13);
}

LogValue log_integral_series(double ln_n) {
  if (!(ln_n >= std::log(2.0))) throw std::invalid_argument("log_integral requires n >= 2");
  if (ln_n < kAsymptoticThreshold) {
    double li = boost::math::expint(ln_n) - kLi2;
    return LogValue::from_double(li);
  }
  // li(2) is below double resolution relative to Li(n) at this scale.
  return LogValue::from_log(ln_n - std::log(ln_n) + std::log1p(asymptotic_tail(ln_n)));
}

double li_ratio_minus_one(double ln_n) {
  if (ln_n < kAsymptoticThreshold) {
    LogValue li = log_integral_series(ln_n);
    return std::expm1(li.ln() - ln_n + std::log(ln_n));
  }
  return asymptotic_tail(ln_n);
}

double log_integral(double n) {
  if (!(n >= 2.0)) throw std::invalid_argument("log_integral requires n >= 2");
  if (n <= 1e9) return log_integral_quadrature(n);
  return log_integral_series(std::log(n)).to_double();
}

LogValue log_integral(const LogValue& n) {
  if (n.sign() <= 0 || n.ln() < std::log(2.0)) {
    throw std::invalid_argument("log_integral requires n >= 2");
  }
  if (n.ln() <= 9.0 * LogValue::kLn10) return LogValue::from_double(log_integral_quadrature(n.to_double()));
  return log_integral_series(n.ln());
}

LogValue refined_estimate(const LogValue& n) {
  if (n.sign() <= 0 || n.ln() < std::log(3.0)) {
    throw std::invalid_argument("refined_estimate requires n >= 3");
  }
  double l = n.ln();
  return LogValue::from_log(l - std::log(l) + std::log1p(1.08 / std::pow(l, 1.01)));
}

double refined_estimate(double n) { return refined_estimate(LogValue::from_double(n)).to_double(); }

Table5Row table5_row(double log10_n) {
  if (!(log10_n > 0)) throw std::invalid_argument("table5_row requires log10_n > 0");
  double l = log10_n * LogValue::kLn10;
  double rm1 = li_ratio_minus_one(l);  // R - 1, R = Li ln n / n
  double a = 1.08 / std::pow(l, 1.01);
  double r = 1.0 + rm1;
  return {-rm1 / r, (a - rm1) / r};
}

double prime_mean(const PrimeTable& t, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("prime_mean requires n >= 2");
  unsigned __int128 sum = 0;
  std::uint64_t k = 0;
  t.for_each_prime(2, n, [&](std::uint64_t p) {
    sum += p;
    ++k;
  });
  return static_cast<double>(static_cast<long double>(sum) / static_cast<long double>(k));
}

double prime_mean_heuristic(const PrimeTable* t, double n) {
  if (!(n >= 3.0)) throw std::invalid_argument("prime_mean_heuristic requires n >= 3");
  double ln = std::log(n);
  double k;
  if (t != nullptr && n <= static_cast<double>(t->limit())) {
    k = static_cast<double>(t->count(static_cast<std::uint64_t>(n)));
  } else {
    k = refined_estimate(n);
  }
  return 0.5 * n * std::log(n / 2.0) / ln + k * ln / n;
}

}  // namespace primelab
