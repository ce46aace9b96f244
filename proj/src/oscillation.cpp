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

#include "primelab/oscillation.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "primelab/errors.hpp"

namespace primelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Primes {
  std::vector<double> p;
  std::vector<double> ln_p;
};

Primes primes_upto(const PrimeTable& t, std::uint64_t k) {
  if (k > t.limit()) throw std::out_of_range("k exceeds the prime table limit");
  Primes out;
  if (k < 2) return out;
  t.for_each_prime(2, k, [&](std::uint64_t p) {
    out.p.push_back(static_cast<double>(p));
    out.ln_p.push_back(std::log(static_cast<double>(p)));
  });
  return out;
}

double modulus(double z, double theta) {
  double d = 1.0 - 2.0 * z * std::cos(theta) + z * z;
  if (d < 1e-300) throw SingularFactorError("Euler factor has a pole here");
  return 1.0 / std::sqrt(d);
}

}  // namespace

FactorPolar factor_polar(double p, Complex s) {
  if (!(p >= 2.0)) throw std::invalid_argument("factor_polar needs p >= 2");
  double ln_p = std::log(p);
  FactorPolar f{};
  f.p = p;
  f.s = s;
  f.z = std::exp(-s.real() * ln_p);
  f.theta = s.imag() * ln_p;
  f.r = modulus(f.z, f.theta);
  // arg of 1 - p^{-s} is atan2(z sin, 1 - z cos); the inverse flips it.
  f.phi = -std::atan2(f.z * std::sin(f.theta), 1.0 - f.z * std::cos(f.theta));
  return f;
}

FactorStatistics factor_statistics(double p, double a) {
  if (!(a > 0.0)) throw std::domain_error("factor_statistics needs a > 0");
  if (!(p >= 2.0)) throw std::invalid_argument("factor_statistics needs p >= 2");
  double z = std::pow(p, -a);
  double pa = std::pow(p, a);
  return {1.0 / (1.0 + z), 1.0 / (1.0 - z), 1.0 / (1.0 - z * z), 2.0 * pa / (pa * pa - 1.0)};
}

OscillationBudget oscillation_budget(const PrimeTable& t, double b, std::uint64_t n) {
  if (n < 4) throw std::invalid_argument("oscillation_budget needs n >= 4");
  if (b == 0.0) throw std::invalid_argument("oscillation_budget needs b != 0");
  double l = std::log(static_cast<double>(n) / 2.0);
  return {b / kTwoPi * l, kTwoPi * static_cast<double>(t.count(n)) / l};
}

double primes_per_period(double p, double b) {
  if (b == 0.0) throw std::invalid_argument("primes_per_period needs b != 0");
  return kTwoPi * p / (std::fabs(b) * std::log(p));
}

AvgModulus avg_modulus(const PrimeTable& t, double b, double a, std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("avg_modulus needs k >= 2");
  if (!(a > 0.0)) throw std::domain_error("avg_modulus needs a > 0");
  Primes ps = primes_upto(t, k);
  AvgModulus out{0.0, 0.0, 0.0, 1e300, 0.0, ps.p.size()};
  for (std::size_t i = 0; i < ps.p.size(); ++i) {
    double l = ps.ln_p[i];
    double z = std::exp(-a * l);
    double th = b * l;
    double c = std::cos(th);
    double sn = std::sin(th);
    double d = 1.0 - 2.0 * z * c + z * z;
    double r = 1.0 / std::sqrt(d);
    double d32 = r * r * r;
    double d52 = d32 * r * r;
    out.m += r;
    out.dm_db += -z * l * sn * d32;
    out.d2m_db2 += -z * l * l * (c * d32 - 3.0 * z * sn * sn * d52);
    out.r_min = std::min(out.r_min, r);
    out.r_max = std::max(out.r_max, r);
  }
  double kk = static_cast<double>(ps.p.size());
  out.m /= kk;
  out.dm_db /= kk;
  out.d2m_db2 /= kk;
  return out;
}

double ln_fluctuation_sigma(double ln_p, Complex s) {
  double b = std::fabs(s.imag());
  if (b == 0.0) throw std::invalid_argument("fluctuation_sigma needs b != 0");
  return 0.5 * std::log(kPi / (b * ln_p)) + (0.5 - s.real()) * ln_p;
}

double fluctuation_sigma(double p, Complex s) {
  if (!(p >= 3.0)) throw std::invalid_argument("fluctuation_sigma needs p >= 3");
  return std::exp(ln_fluctuation_sigma(std::log(p), s));
}

double stability_line_ln(double b, double ln_p) {
  if (b == 0.0) throw std::invalid_argument("stability_line needs b != 0");
  return 0.5 - std::log(std::fabs(b) / kPi * ln_p) / (2.0 * ln_p);
}

double stability_line(double b, double p) { return stability_line_ln(b, std::log(p)); }

double damping_fraction_single(double p, double a) {
  double half_z = 0.5 * std::pow(p, -a);
  if (half_z > 1.0) throw std::domain_error("p^-a / 2 exceeds 1");
  return 1.0 - std::acos(half_z) / kPi;
}

DampingIntervals damping_intervals(double p, double a, double b_lo, double b_hi) {
  if (!(a > 0.0)) throw std::domain_error("damping_intervals needs a > 0");
  if (!(b_hi >= b_lo)) throw std::invalid_argument("damping_intervals needs b_lo <= b_hi");
  double l = std::log(p);
  DampingIntervals out{};
  out.alpha = std::acos(0.5 * std::pow(p, -a));
  out.fraction = 1.0 - out.alpha / kPi;
  out.period = kTwoPi / l;
  // theta in [alpha + 2 pi m, 2 pi - alpha + 2 pi m]
  double m0 = std::floor((b_lo * l - (kTwoPi - out.alpha)) / kTwoPi);
  for (double m = m0;; m += 1.0) {
    double lo = (out.alpha + kTwoPi * m) / l;
    double hi = (kTwoPi - out.alpha + kTwoPi * m) / l;
    if (lo > b_hi) break;
    if (hi < b_lo) continue;
    out.intervals.push_back({std::max(lo, b_lo), std::min(hi, b_hi)});
  }
  return out;
}

double damping_fraction(const PrimeTable& t, Complex s, std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("damping_fraction needs k >= 2");
  Primes ps = primes_upto(t, k);
  std::size_t below = 0;
  for (std::size_t i = 0; i < ps.p.size(); ++i) {
    double z = std::exp(-s.real() * ps.ln_p[i]);
    if (modulus(z, s.imag() * ps.ln_p[i]) < 1.0) ++below;
  }
  return static_cast<double>(below) / static_cast<double>(ps.p.size());
}

HarmonicExpansion harmonic_expansion(double p, Complex s) {
  FactorPolar f = factor_polar(p, s);
  double c2 = std::cos(2.0 * f.theta);
  HarmonicExpansion h{};
  h.h1 = f.z * std::cos(f.theta);
  h.h2 = 0.75 * f.z * f.z * c2;
  h.residual = f.r - (1.0 + h.h1 + f.z * f.z * (0.25 + 0.75 * c2));
  return h;
}

LocalizationReport localization_report(const PrimeTable& t, double b, double a, const ZeroTable* zeros) {
  double ab = std::fabs(b);
  if (ab < 2.0) throw std::domain_error("localization needs |b| >= 2");
  LocalizationReport rep{};
  rep.b = b;
  rep.k = static_cast<std::uint64_t>(std::floor(ab));
  Primes ps = primes_upto(t, rep.k);
  double m = 0.0, sn = 0.0, cs = 0.0;
  std::size_t below = 0;
  for (std::size_t i = 0; i < ps.p.size(); ++i) {
    double th = b * ps.ln_p[i];
    double r = modulus(std::exp(-a * ps.ln_p[i]), th);
    m += r;
    sn += std::sin(th);
    cs += std::cos(th);
    if (r < 1.0) ++below;
  }
  double kk = static_cast<double>(ps.p.size());
  rep.m_k = m / kk;
  rep.sin_sum = sn / kk;
  rep.cos_sum = cs / kk;
  rep.f_k = static_cast<double>(below) / kk;
  double tol = 1.0 / ab;
  rep.criteria[0] = rep.m_k < 1.0 + tol;
  rep.criteria[1] = std::fabs(rep.sin_sum) < tol;
  rep.criteria[2] = rep.cos_sum < tol;
  if (zeros) rep.nearest_zero_distance = zeros->nearest_distance(ab);
  return rep;
}

std::vector<LocalizationReport> localization_scan(const PrimeTable& t, double b_min, double b_max, double step,
                                                  double a, const ZeroTable* zeros, unsigned threads) {
  if (!(b_min > 0.0) || !(b_max > b_min)) throw std::invalid_argument("localization_scan needs 0 < b_min < b_max");
  if (!(step > 0.0)) throw std::invalid_argument("localization_scan needs step > 0");
  if (b_min < 2.0) throw std::domain_error("localization needs b >= 2");
  std::size_t n = static_cast<std::size_t>(std::floor((b_max - b_min) / step + 1e-9)) + 1;
  std::vector<LocalizationReport> out(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      out[i] = localization_report(t, b_min + static_cast<double>(i) * step, a, zeros);
    }
  };
  unsigned nt = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nt; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

std::vector<LocalizationReport> merge_candidates(const std::vector<LocalizationReport>& scan, double merge_gap) {
  std::vector<LocalizationReport> out;
  double last_b = 0.0;
  bool open = false;
  for (const auto& r : scan) {
    if (!r.flagged()) continue;
    if (open && r.b - last_b <= merge_gap + 1e-12) {
      if (r.m_k < out.back().m_k) out.back() = r;
    } else {
      out.push_back(r);
      open = true;
    }
    last_b = r.b;
  }
  return out;
}

}  // namespace primelab
