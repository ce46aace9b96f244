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

#include "primelab/gap_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primelab/density.hpp"
#include "primelab/errors.hpp"
#include "primelab/indicators.hpp"

namespace primelab {

namespace {

constexpr double kLn2 = std::numbers::ln2;
// Branch-B terms below e^-60 of the e^-2mu scale no longer move a double sum.
constexpr double kTailCutoff = -60.0;

// N_j = 1 + cos(pi j / 3) / 3, exact for integral j.
double n_factor(double j) {
  double r = std::fmod(j, 6.0);
  if (r == std::floor(r)) {
    static constexpr double kTable[6] = {4.0 / 3, 7.0 / 6, 5.0 / 6, 2.0 / 3, 5.0 / 6, 7.0 / 6};
    return kTable[static_cast<int>(r)];
  }
  return 1.0 + std::cos(std::numbers::pi * j / 3.0) / 3.0;
}

struct Kernel {
  double l, mu, rho2, z, r, rho_max, cube;
  Kernel(const ModelParams& p, Scale n)
      : l(n.ln_n),
        mu(std::log(n.ln_n)),
        rho2(kLn2 / mu),
        z(8.0 * p.c2 / (5.0 * p.r)),
        r(p.r),
        rho_max(p.rho_max),
        cube(std::pow(p.rho_max - 1.0, 3)) {}

  // ln S_j + 2 mu, and the branch used.
  double shifted(double j, bool& branch_b) const {
    double rho = std::log(j) / mu;
    double ln_y = std::log(1.5 * r * n_factor(j));
    if (rho <= 1.0) {
      branch_b = false;
      double lin = z + (1.0 - z) * (rho - rho2);
      if (!(lin > 0.0)) {
        throw NumericError("branch A density is nonpositive at j=" + std::to_string(j) +
                           " (z=" + std::to_string(z) + ")");
      }
      return ln_y + std::log(lin);
    }
    branch_b = true;
    double half_alpha2 = (mu * (rho_max - 1.0) + (l - mu * rho_max) * (rho - 1.0)) / cube;
    return ln_y - mu * (rho - 1.0) - (rho - 1.0) * (rho - 1.0) * half_alpha2;
  }
};

void check_params(const ModelParams& p) {
  if (!(p.r > 0.0) || !(p.c2 > 0.0) || !(p.rho_max > 1.0)) {
    throw std::invalid_argument("model parameters need c2 > 0, r > 0, rho_max > 1");
  }
}

void check_scale(Scale n) {
  if (!(n.ln_n >= 3.0 * LogValue::kLn10 - 1e-12)) {
    throw std::invalid_argument("gap model requires n >= 1e3");
  }
}

double floor_j_max(const Kernel& k) { return std::floor(std::pow(k.l, k.rho_max) * (1 + 1e-15)); }

}  // namespace

Scale Scale::from_value(double n) {
  if (!(n > 1.0)) throw std::invalid_argument("scale requires n > 1");
  return {std::log(n)};
}

double Scale::mu() const { return std::log(ln_n); }

std::uint64_t GapHistogram::count(std::uint64_t j) const {
  auto it = counts.find(j);
  return it == counts.end() ? 0 : it->second;
}

double GapHistogram::empirical_density(std::uint64_t j) const {
  return static_cast<double>(count(j)) / static_cast<double>(n);
}

std::uint64_t GapHistogram::mode() const {
  std::uint64_t best = 0;
  std::uint64_t bc = 0;
  for (auto [j, c] : counts) {
    if (c > bc) {
      best = j;
      bc = c;
    }
  }
  return best;
}

GapHistogram gap_histogram(const PrimeTable& t, std::uint64_t n) {
  if (n > t.limit()) throw std::out_of_range("gap_histogram: n exceeds table limit");
  GapHistogram h;
  h.n = n;
  std::vector<std::uint64_t> dense;
  std::uint64_t prev = 0;
  t.for_each_prime(2, n, [&](std::uint64_t p) {
    if (prev != 0) {
      std::uint64_t g = p - prev;
      if (g == 1) {
        ++h.unit_gaps;
      } else {
        if (g >= dense.size()) dense.resize(g + 1, 0);
        ++dense[g];
      }
      ++h.total_gaps;
    }
    prev = p;
  });
  for (std::uint64_t g = 0; g < dense.size(); ++g) {
    if (dense[g]) h.counts[g] = dense[g];
  }
  return h;
}

ModelConfig ModelConfig::reference() {
  ModelConfig c;
  c.c2 = kReferenceC2;
  return c;
}

ModelConfig ModelConfig::scale_dependent() {
  ModelConfig c;
  c.c2_mode = C2Mode::kScaleDependent;
  c.rho_max_mode = RhoMaxMode::kQuadFit;
  return c;
}

int ModelConfig::solved_slots() const {
  return (c2_mode == C2Mode::kSolved) + (r_mode == RMode::kSolved) +
         (rho_max_mode == RhoMaxMode::kSolved);
}

void ModelConfig::validate() const {
  if (solved_slots() > 1) throw std::invalid_argument("at most one model parameter may be solved");
  if (c2_mode == C2Mode::kFixed && !(c2 > 0.0)) throw std::invalid_argument("c2 must be positive");
  if (r_mode == RMode::kFixed && !(r > 0.0)) throw std::invalid_argument("r must be positive");
  if (rho_max_mode == RhoMaxMode::kFixed && !(rho_max > 1.0)) {
    throw std::invalid_argument("rho_max must exceed 1");
  }
}

double c2_scale(Scale n) { return 0.5 + 1.0 / (1.0 + n.mu()); }

double rho_max_quadfit(Scale n) {
  double mu = n.mu();
  return 2.192 - 0.2257 * mu + 0.03828 * mu * mu;
}

ModelParams resolve(const ModelConfig& config, Scale n) {
  config.validate();
  if (config.solved_slots() != 0) {
    throw std::invalid_argument("config has a solved parameter; use solve_scenario");
  }
  ModelParams p;
  p.c2 = config.c2_mode == C2Mode::kScaleDependent ? c2_scale(n) : config.c2;
  p.r = config.r;
  p.rho_max = config.rho_max_mode == RhoMaxMode::kQuadFit ? rho_max_quadfit(n) : config.rho_max;
  return p;
}

double model_log_density_raw(double j, const ModelParams& p, Scale n) {
  check_params(p);
  Kernel k(p, n);
  bool b;
  return k.shifted(j, b) - 2.0 * k.mu;
}

double model_log_density(std::uint64_t j, const ModelParams& p, Scale n) {
  check_scale(n);
  if (j % 2 != 0) throw std::invalid_argument("model density is defined on even gaps");
  double jm = std::pow(n.ln_n, p.rho_max);
  if (j < 2 || static_cast<double>(j) > jm) {
    throw std::domain_error("gap " + std::to_string(j) + " outside [2, (ln n)^rho_max = " +
                            std::to_string(jm) + "]");
  }
  return model_log_density_raw(static_cast<double>(j), p, n);
}

double model_density(std::uint64_t j, const ModelConfig& config, Scale n) {
  return std::exp(model_log_density(j, resolve(config, n), n));
}

double branch_b_exponent_at_rho_max(const ModelParams& p, Scale n) {
  double mu = n.mu();
  double rho = p.rho_max;
  double half_alpha2 =
      (mu * (p.rho_max - 1.0) + (n.ln_n - mu * p.rho_max) * (rho - 1.0)) / std::pow(p.rho_max - 1.0, 3);
  return -mu * (rho + 1.0) - (rho - 1.0) * (rho - 1.0) * half_alpha2;
}

ModelEval evaluate(const ModelParams& p, Scale n) {
  check_scale(n);
  check_params(p);
  Kernel k(p, n);
  ModelEval e;
  e.n = n;
  e.mu = k.mu;
  e.rho2 = k.rho2;
  e.params = p;
  e.j_max = std::pow(k.l, p.rho_max);
  double jmax_floor = floor_j_max(k);
  e.bins = jmax_floor >= 2 ? static_cast<std::uint64_t>(jmax_floor) / 2 : 0;
  if (e.bins == 0) throw NumericError("no even gaps below (ln n)^rho_max");

  auto small_limit = static_cast<std::uint64_t>(std::floor(k.l));
  double total = 0.0;
  double small = 0.0;
  auto top = static_cast<std::uint64_t>(jmax_floor);
  for (std::uint64_t j = 2; j <= top; j += 2) {
    bool branch_b;
    double v = k.shifted(static_cast<double>(j), branch_b);
    if (branch_b && v < kTailCutoff) break;
    double term = std::exp(v);
    total += term;
    if (j < small_limit) small += term;
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw NumericError("gap density sum is not finite (ln n=" + std::to_string(n.ln_n) + ")");
  }
  e.ln_sum = std::log(total) - 2.0 * k.mu;
  LogValue li = log_integral_series(n.ln_n);
  e.eps = std::expm1(n.ln_n + e.ln_sum - li.ln());
  e.k1 = small / total;
  e.k2 = 1.0 - e.k1;
  e.avg_small = 2.0 * e.k1 / (k.l * k.l);
  e.avg_large = 2.0 * e.k2 / k.l / (e.j_max - k.l);
  e.seam_ratio = 1.0 - k.rho2 * (1.0 - k.z);
  return e;
}

ModelEval evaluate(const ModelConfig& config, Scale n) { return evaluate(resolve(config, n), n); }

double pnt_error(const ModelConfig& config, Scale n) { return evaluate(config, n).eps; }

double k1_fraction(const ModelConfig& config, Scale n) { return evaluate(config, n).k1; }

double k1_from_c2(double c2) { return 0.5 * c2 + 0.25; }

SolveResult solve_scenario(Scale n, FreeParam which) {
  if (!(n.ln_n >= 6.0 * LogValue::kLn10 - 1e-12)) {
    throw std::invalid_argument("solve_scenario requires n >= 1e6");
  }
  ModelParams base{kReferenceC2, 2.0 / 3.0, 2.0};
  double lo = 0, hi = 0;
  double ModelParams::*slot = nullptr;
  switch (which) {
    case FreeParam::kC2:
      lo = 0.3, hi = 1.5, slot = &ModelParams::c2;
      break;
    case FreeParam::kR:
      lo = 0.4, hi = 1.2, slot = &ModelParams::r;
      break;
    case FreeParam::kRhoMax:
      lo = 1.5, hi = 3.5, slot = &ModelParams::rho_max;
      break;
  }
  auto f = [&](double x) {
    ModelParams p = base;
    p.*slot = x;
    return evaluate(p, n).eps;
  };
  double flo = f(lo);
  double fhi = f(hi);
  if ((flo > 0) == (fhi > 0)) {
    throw SolverError("no sign change of eps in bracket [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]: eps=" + std::to_string(flo) + ", " +
                          std::to_string(fhi),
                      lo, hi);
  }
  SolveResult res;
  for (res.iterations = 1; res.iterations <= 200; ++res.iterations) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    res.value = mid;
    res.eps = fm;
    if (std::fabs(fm) < 1e-10 || hi - lo < 1e-12) break;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  if (!(std::fabs(res.eps) < 1e-6)) {
    throw SolverError("bisection did not reach |eps| < 1e-6", lo, hi);
  }
  return res;
}

SuperGapForecast super_gap_forecast(Scale n, const ModelConfig& config) {
  check_scale(n);
  ModelParams p = resolve(config, n);
  Kernel k(p, n);
  SuperGapForecast f;
  f.rho_t = 1.0 + std::cbrt((k.l - 2.0 * k.mu) / k.l);
  f.j_max = std::pow(k.l, p.rho_max);
  f.theta = k.mu * p.rho_max / k.l;
  if (!(p.rho_max > 2.0)) return f;

  double l2 = k.l * k.l;
  auto first = static_cast<std::uint64_t>(std::floor(l2)) + 1;
  if (first % 2) ++first;
  auto top = static_cast<std::uint64_t>(floor_j_max(k));
  double ref = 0.0;
  double acc = 0.0;
  bool b;
  for (std::uint64_t j = first; j <= top; j += 2) {
    double v = k.shifted(static_cast<double>(j), b);
    if (j == first) ref = v;
    if (v - ref < kTailCutoff) break;
    acc += std::exp(v - ref);
  }
  LogValue li = log_integral_series(n.ln_n);
  if (acc > 0.0) {
    LogValue ns = LogValue::from_log(n.ln_n + ref - 2.0 * k.mu + std::log(acc));
    f.n_s = ns;
    f.r_s = ns / li;
    f.r_s_percent_log10 = (ns / li).log10() + 2.0;
  }
  double s_l2 = k.shifted(l2, b) - 2.0 * k.mu;
  f.n_s_bound = LogValue::from_log(std::log(0.5) + n.ln_n + s_l2 + std::log(f.j_max - l2));
  return f;
}

double empirical_c2(std::uint64_t pair_count, std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("empirical_c2 requires n >= 3");
  double l = std::log(static_cast<double>(n));
  return static_cast<double>(pair_count) * l * l / (2.0 * static_cast<double>(n));
}

double lognormal_density(std::uint64_t j, Scale n, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  double l2 = n.ln_n * n.ln_n;
  if (j % 2 != 0 || j < 2 || static_cast<double>(j) > l2) {
    throw std::invalid_argument("lognormal_density needs even j in [2, (ln n)^2]");
  }
  double mu = n.mu();
  double sigma = mu / alpha;
  auto shape = [&](double x) {
    double d = std::log(x) - mu;
    return std::exp(-d * d / (2.0 * sigma * sigma)) / (x * sigma * std::sqrt(2.0 * std::numbers::pi));
  };
  double norm = 0.0;
  auto top = static_cast<std::uint64_t>(std::floor(l2));
  for (std::uint64_t i = 2; i <= top; i += 2) norm += shape(static_cast<double>(i));
  return shape(static_cast<double>(j)) / norm / n.ln_n;
}

double modulated_density(std::uint64_t j, Scale n, double alpha) {
  return 1.5 * lognormal_density(j, n, alpha) * n_factor(static_cast<double>(j));
}

Deviation mean_relative_deviation(const GapHistogram& h,
                                  const std::function<double(std::uint64_t)>& model,
                                  std::uint64_t max_j) {
  if (h.counts.empty()) throw std::invalid_argument("empty gap histogram");
  double l = std::log(static_cast<double>(h.n));
  auto cap = std::min<std::uint64_t>(max_j, static_cast<std::uint64_t>(std::floor(l * l)));
  Deviation d;
  double sum = 0.0;
  for (std::uint64_t j = 2; j <= cap; j += 2) {
    std::uint64_t c = h.count(j);
    if (c == 0) {
      ++d.bins_skipped;
      continue;
    }
    sum += std::fabs(model(j) / h.empirical_density(j) - 1.0);
    ++d.bins_used;
  }
  d.value = sum / (l * l);
  return d;
}

Deviation mean_relative_deviation(const GapHistogram& h, const ModelParams& p) {
  Scale s = Scale::from_value(static_cast<double>(h.n));
  auto cap = static_cast<std::uint64_t>(std::floor(std::pow(s.ln_n, p.rho_max)));
  return mean_relative_deviation(
      h, [&](std::uint64_t j) { return std::exp(model_log_density(j, p, s)); }, cap);
}

std::vector<Table8Row> table8_rows() {
  std::vector<Table8Row> rows;
  ModelConfig cfg = ModelConfig::scale_dependent();
  for (double k : {25.0, 50.0, 100.0, 200.0, 300.0}) {
    Scale s = Scale::from_log10(k);
    ModelParams p = resolve(cfg, s);
    Table8Row row;
    row.log10_n = k;
    for (std::uint64_t j : {100ULL, 1000ULL, 10000ULL, 100000ULL}) {
      if (static_cast<double>(j) > std::pow(s.ln_n, p.rho_max)) {
        row.n_s_j.emplace_back(std::nullopt);
      } else {
        row.n_s_j.emplace_back(LogValue::from_log(s.ln_n + model_log_density(j, p, s)));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table9Row> table9_rows() {
  std::vector<Table9Row> rows;
  ModelConfig cfg = ModelConfig::scale_dependent();
  for (double k : {10.0, 25.0, 50.0, 100.0, 200.0, 300.0}) {
    Scale s = Scale::from_log10(k);
    rows.push_back({k, super_gap_forecast(s, cfg), rho_max_quadfit(s)});
  }
  return rows;
}

std::vector<Table17Row> table17_rows() {
  std::vector<Table17Row> rows;
  for (double k : {10.0, 25.0, 50.0, 100.0, 200.0, 300.0}) {
    Scale s = Scale::from_log10(k);
    ModelEval e = evaluate(ModelConfig::reference(), s);
    rows.push_back({k, e.k1, e.eps, solve_scenario(s, FreeParam::kC2).value,
                    solve_scenario(s, FreeParam::kR).value, solve_scenario(s, FreeParam::kRhoMax).value});
  }
  return rows;
}

std::vector<Table18Row> table18_rows() {
  std::vector<Table18Row> rows;
  for (double k : {10.0, 25.0, 50.0, 100.0, 200.0, 300.0}) {
    Scale s = Scale::from_log10(k);
    ModelEval e = evaluate(ModelConfig::scale_dependent(), s);
    rows.push_back({k, e.mu, e.params.c2, e.params.rho_max, e.k1, e.eps});
  }
  return rows;
}

std::vector<Table19Row> table19_rows(const PrimeTable* t) {
  std::vector<Table19Row> rows;
  for (double k : {3.0, 6.0, 9.0, 12.0, 15.0}) {
    Table19Row row;
    row.log10_n = k;
    row.c2 = c2_scale(Scale::from_log10(k));
    double n = std::pow(10.0, k);
    if (t != nullptr && n <= static_cast<double>(t->limit())) {
      auto ni = static_cast<std::uint64_t>(std::llround(n));
      row.c_emp = empirical_c2(prime_pair_count(*t, ni, 2), ni);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace primelab
