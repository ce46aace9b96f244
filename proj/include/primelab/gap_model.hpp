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
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "primelab/log_value.hpp"
#include "primelab/prime_table.hpp"

namespace primelab {

inline constexpr double kTwinPrimeConstant = 0.660161815846869573927812110014555778432623;
inline constexpr double kReferenceC2 = 0.66;

// A scale n, carried by ln n so that n = 10^300 and beyond never overflows.
struct Scale {
  double ln_n = 0.0;
  static Scale from_log10(double log10_n) { return {log10_n * LogValue::kLn10}; }
  static Scale from_value(double n);
  double mu() const;  // ln ln n
};

struct GapHistogram {
  std::uint64_t n = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // even gaps only
  std::uint64_t unit_gaps = 0;                    // the gap 2 -> 3
  std::uint64_t total_gaps = 0;                   // K(n) - 1, including the unit gap

  std::uint64_t count(std::uint64_t j) const;
  double empirical_density(std::uint64_t j) const;  // counts(j) / n
  std::uint64_t mode() const;
};

GapHistogram gap_histogram(const PrimeTable& t, std::uint64_t n);

enum class C2Mode { kFixed, kScaleDependent, kSolved };
enum class RMode { kFixed, kSolved };
enum class RhoMaxMode { kFixed, kQuadFit, kSolved };
enum class FreeParam { kC2, kR, kRhoMax };

struct ModelConfig {
  C2Mode c2_mode = C2Mode::kFixed;
  double c2 = kTwinPrimeConstant;
  RMode r_mode = RMode::kFixed;
  double r = 2.0 / 3.0;
  RhoMaxMode rho_max_mode = RhoMaxMode::kFixed;
  double rho_max = 2.0;

  // C_2 = 0.66, r = 2/3, rho_max = 2.
  static ModelConfig reference();
  // C_2(n) from ln ln n, rho_max from the quadratic fit, r = 2/3.
  static ModelConfig scale_dependent();

  int solved_slots() const;
  void validate() const;  // throws std::invalid_argument
};

struct ModelParams {
  double c2 = 0.0;
  double r = 0.0;
  double rho_max = 0.0;
};

double c2_scale(Scale n);
double rho_max_quadfit(Scale n);
// Resolves scale-dependent modes; throws std::invalid_argument on a solved slot.
ModelParams resolve(const ModelConfig& config, Scale n);

// ln S_j(n). Throws std::domain_error unless 2 <= j <= (ln n)^rho_max,
// std::invalid_argument for odd j or n < 1e3.
double model_log_density(std::uint64_t j, const ModelParams& p, Scale n);
double model_density(std::uint64_t j, const ModelConfig& config, Scale n);
// Same formula without the range check, for real-valued j (figure sweeps).
double model_log_density_raw(double j, const ModelParams& p, Scale n);
// Branch-B exponent -mu(rho+1) - (rho-1)^2 alpha^2/2 at rho = rho_max.
double branch_b_exponent_at_rho_max(const ModelParams& p, Scale n);

struct ModelEval {
  Scale n;
  double mu = 0.0;
  double rho2 = 0.0;
  ModelParams params;
  double j_max = 0.0;
  std::uint64_t bins = 0;     // even j in [2, floor(j_max)]
  double ln_sum = 0.0;        // ln sum_j S_j
  double eps = 0.0;           // n sum S_j / Li(n) - 1
  double k1 = 0.0;
  double k2 = 0.0;
  double avg_small = 0.0;     // <S>_1 = 2 k1 / (ln n)^2
  double avg_large = 0.0;     // <S>_2 = 2 k2 (ln n)^-1 / ((ln n)^rho_max - ln n)
  double seam_ratio = 0.0;    // branch B / branch A at rho = 1
};

ModelEval evaluate(const ModelParams& p, Scale n);
ModelEval evaluate(const ModelConfig& config, Scale n);
double pnt_error(const ModelConfig& config, Scale n);
double k1_fraction(const ModelConfig& config, Scale n);
// Consistency relation k_1 = C_2/2 + 1/4.
double k1_from_c2(double c2);

struct SolveResult {
  double value = 0.0;
  double eps = 0.0;
  int iterations = 0;
};

// Bisection on eps(n) = 0 over one parameter with the others at the
// reference values. Brackets: C_2 [0.3, 1.5], r [0.4, 1.2], rho_max [1.5, 3.5].
SolveResult solve_scenario(Scale n, FreeParam which);

struct SuperGapForecast {
  double rho_t = 0.0;
  double j_max = 0.0;
  double theta = 0.0;
  // Present only when rho_max > 2.
  std::optional<LogValue> n_s;        // sum over even (ln n)^2 < j <= j_max of n S_j
  std::optional<LogValue> n_s_bound;  // (n/2) S_{(ln n)^2} ((ln n)^rho_max - (ln n)^2)
  std::optional<LogValue> r_s;        // N_S / Li(n)
  std::optional<double> r_s_percent_log10;  // log10(100 N_S / Li(n))
};

SuperGapForecast super_gap_forecast(Scale n, const ModelConfig& config);

// pi_2(n) (ln n)^2 / (2n)
double empirical_c2(std::uint64_t pair_count, std::uint64_t n);

// Log-normal gap density normalised so that the even-j sum up to (ln n)^2 is 1/ln n.
double lognormal_density(std::uint64_t j, Scale n, double alpha);
// (P_j / 2)(3 + cos(pi j / 3))
double modulated_density(std::uint64_t j, Scale n, double alpha);

struct Deviation {
  double value = 0.0;
  std::uint64_t bins_used = 0;
  std::uint64_t bins_skipped = 0;  // empty empirical bins
};

// E(n) over even j <= max_j with nonzero counts; max_j is capped at (ln n)^2.
Deviation mean_relative_deviation(const GapHistogram& h,
                                  const std::function<double(std::uint64_t)>& model,
                                  std::uint64_t max_j);
// Against the final model; j is also capped at (ln n)^rho_max.
Deviation mean_relative_deviation(const GapHistogram& h, const ModelParams& p);

// Table rows.
struct Table8Row {
  double log10_n = 0.0;
  std::vector<std::optional<LogValue>> n_s_j;  // j = 1e2, 1e3, 1e4, 1e5
};
struct Table9Row {
  double log10_n = 0.0;
  SuperGapForecast forecast;
  double rho_max = 0.0;
};
struct Table17Row {
  double log10_n = 0.0;
  double k1 = 0.0;
  double eps = 0.0;
  double c2 = 0.0;
  double r = 0.0;
  double rho_max = 0.0;
};
struct Table18Row {
  double log10_n = 0.0;
  double mu = 0.0;
  double c2 = 0.0;
  double rho_max = 0.0;
  double k1 = 0.0;
  double eps = 0.0;
};
struct Table19Row {
  double log10_n = 0.0;
  std::optional<double> c_emp;  // absent beyond the table
  double c2 = 0.0;
};

std::vector<Table8Row> table8_rows();
std::vector<Table9Row> table9_rows();
std::vector<Table17Row> table17_rows();
std::vector<Table18Row> table18_rows();
std::vector<Table19Row> table19_rows(const PrimeTable* t);

}  // namespace primelab
