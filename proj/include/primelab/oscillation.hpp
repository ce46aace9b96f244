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
#include <optional>
#include <vector>

#include "primelab/prime_table.hpp"
#include "primelab/special.hpp"
#include "primelab/zero_table.hpp"

namespace primelab {

// Polar form r e^{i phi} of the Euler factor (1 - p^{-s})^{-1}.
struct FactorPolar {
  double p;
  Complex s;
  double z;      // p^{-a}
  double theta;  // b ln p
  double r;
  double phi;
};
FactorPolar factor_polar(double p, Complex s);

struct FactorStatistics {
  double r_min;
  double r_max;
  double r_mean;
  double delta_r;
};
FactorStatistics factor_statistics(double p, double a);

struct OscillationBudget {
  double x;      // (b / 2 pi) ln(n / 2)
  double b_lim;  // 2 pi K(n) / ln(n / 2)
};
OscillationBudget oscillation_budget(const PrimeTable& t, double b, std::uint64_t n);
// Primes per oscillation period near p: 2 pi p / (|b| ln p).
double primes_per_period(double p, double b);

// M_k(b) = mean of r_p over p <= k, with exact b-derivatives.
struct AvgModulus {
  double m;
  double dm_db;
  double d2m_db2;
  double r_min;
  double r_max;
  std::uint64_t primes;
};
AvgModulus avg_modulus(const PrimeTable& t, double b, double a, std::uint64_t k);

// sigma_p = sqrt(pi / (|b| ln p)) p^{1/2 - a}, and the a where it equals 1.
double fluctuation_sigma(double p, Complex s);
double ln_fluctuation_sigma(double ln_p, Complex s);
double stability_line(double b, double p);
double stability_line_ln(double b, double ln_p);

struct Interval {
  double lo;
  double hi;
};
struct DampingIntervals {
  double alpha;     // arccos(p^{-a} / 2)
  double fraction;  // 1 - alpha / pi
  double period;    // 2 pi / ln p
  std::vector<Interval> intervals;
};
// b-intervals inside [b_lo, b_hi] where r_p <= 1, i.e. cos(theta_p) <= p^{-a}/2.
DampingIntervals damping_intervals(double p, double a, double b_lo, double b_hi);
double damping_fraction_single(double p, double a);

// F_k(s): share of primes p <= k with r_p(s) < 1.
double damping_fraction(const PrimeTable& t, Complex s, std::uint64_t k);

struct HarmonicExpansion {
  double h1;
  double h2;
  double residual;
};
HarmonicExpansion harmonic_expansion(double p, Complex s);

struct LocalizationReport {
  double b;
  std::uint64_t k;
  double m_k;
  double sin_sum;  // K(k)^{-1} sum sin(theta_p)
  double cos_sum;  // K(k)^{-1} sum cos(theta_p)
  double f_k;
  bool criteria[3];
  std::optional<double> nearest_zero_distance;
  bool flagged() const { return criteria[0] && criteria[1] && criteria[2]; }
};
LocalizationReport localization_report(const PrimeTable& t, double b, double a = 0.5,
                                       const ZeroTable* zeros = nullptr);
// Grid b_min, b_min + step, ... <= b_max. Truncation k = floor(|b|).
std::vector<LocalizationReport> localization_scan(const PrimeTable& t, double b_min, double b_max, double step,
                                                  double a = 0.5, const ZeroTable* zeros = nullptr,
                                                  unsigned threads = 1);
// Flagged points closer than merge_gap join one candidate, represented by
// the point of smallest M_k.
std::vector<LocalizationReport> merge_candidates(const std::vector<LocalizationReport>& scan,
                                                 double merge_gap = 0.05);

}  // namespace primelab
