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

#include "primelab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "primelab/bernoulli.hpp"
#include "primelab/density.hpp"
#include "primelab/goldbach.hpp"
#include "primelab/indicators.hpp"
#include "primelab/oscillation.hpp"
#include "primelab/zeta.hpp"

namespace primelab {

namespace {

constexpr double kPi = std::numbers::pi;

std::string pow10_label(double k) {
  std::ostringstream os;
  os << "1e" << k;
  return os.str();
}

Cell n_cell(double log10_n) { return Cell::text(pow10_label(log10_n)); }

Cell opt_log(const std::optional<LogValue>& v) { return v ? Cell::log_value(*v) : Cell::missing(); }

std::string fmt(double v, int sig = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig, v);
  return buf;
}

std::string fmt_pm(double v, double tol) { return fmt(v) + " (tol " + fmt(tol, 3) + ")"; }

}  // namespace

// ---- configuration ------------------------------------------------------

void RunConfig::validate() const {
  if (sieve_limit < 1000) throw std::invalid_argument("sieve_limit must be at least 1000");
  if (sieve_limit > PrimeTable::kMaxLimit) throw std::invalid_argument("sieve_limit above 1e10");
  if (!(visual_k > 0.0)) throw std::invalid_argument("visualization exponent must be positive");
  if (threads == 0) throw std::invalid_argument("threads must be at least 1");
}

std::string RunConfig::tag() const {
  std::ostringstream os;
  os << "sieve_limit=" << sieve_limit << ";format=" << format_name(format) << ";seed=" << seed
     << ";k=" << fmt(visual_k, 17);
  return hex64(fnv1a(os.str()));
}

Lab::Lab(RunConfig config) : config_(std::move(config)) { config_.validate(); }

const PrimeTable& Lab::primes() {
  if (!primes_) {
    SieveOptions opts;
    opts.threads = config_.threads;
    primes_ = std::make_unique<PrimeTable>(PrimeTable::build(config_.sieve_limit, opts));
  }
  return *primes_;
}

const ZeroTable& Lab::zeros() {
  if (!zeros_) zeros_ = std::make_unique<ZeroTable>(ZeroTable::load_default());
  return *zeros_;
}

void Lab::require_sieve(std::uint64_t needed, const std::string& what) const {
  if (config_.sieve_limit < needed) {
    throw std::invalid_argument(what + " needs --sieve-limit " + std::to_string(needed) + " or more (have " +
                                std::to_string(config_.sieve_limit) + ")");
  }
}

const std::vector<int>& table_ids() {
  static const std::vector<int> ids{5, 8, 9, 17, 18, 19, 21};
  return ids;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"p_average", "co_primes", "co_primes_dist", "S_j_emp",
                                            "S_j_scan",  "nS_j_scan", "G_envelope",     "B_2s",
                                            "V_grids",   "q_n",       "r_n",            "r_n_multi",
                                            "M_a",       "M_b",       "F_k_a",          "ln_sigma"};
  return ids;
}

ModelConfig figure_gap_config() {
  ModelConfig c = ModelConfig::scale_dependent();
  c.rho_max_mode = RhoMaxMode::kFixed;
  c.rho_max = 1.92;
  return c;
}

double fit_error(const GapHistogram& h) {
  Scale s = Scale::from_value(static_cast<double>(h.n));
  ModelParams p = resolve(figure_gap_config(), s);
  double cap = std::min(s.ln_n * s.ln_n, std::pow(s.ln_n, p.rho_max));
  auto cap_j = static_cast<std::uint64_t>(std::floor(cap));
  return mean_relative_deviation(
             h, [&](std::uint64_t j) { return std::exp(model_log_density(j, p, s)); }, cap_j)
      .value;
}

// ---- tables ---------------------------------------------------------------

namespace {

TableData table5() {
  TableData t{"table5", {"n", "err_pnt", "err_A"}, {}};
  for (int k = 1; k <= 6; ++k) {
    Table5Row r = table5_row(std::pow(10.0, k));
    t.add({Cell::text("1e" + std::to_string(static_cast<long>(std::pow(10.0, k)))), Cell::real(r.err_pnt, 3), Cell::real(r.err_a, 3)});
  }
  return t;
}

TableData table8() {
  TableData t{"table8", {"n", "nS_j(1e2)", "nS_j(1e3)", "nS_j(1e4)", "nS_j(1e5)"}, {}};
  for (const auto& r : table8_rows()) {
    std::vector<Cell> row{n_cell(r.log10_n)};
    for (const auto& v : r.n_s_j) row.push_back(opt_log(v));
    t.add(std::move(row));
  }
  return t;
}

TableData table9() {
  TableData t{"table9", {"n", "rho_max", "j_max", "theta", "N_S", "R_S_percent"}, {}};
  for (const auto& r : table9_rows()) {
    const auto& f = r.forecast;
    Cell rs = f.r_s_percent_log10 ? Cell::log_value(LogValue::pow10(*f.r_s_percent_log10)) : Cell::missing();
    t.add({n_cell(r.log10_n), Cell::fixed(r.rho_max, 3), Cell::log_value(LogValue::from_double(f.j_max)),
           Cell::real(f.theta, 3), opt_log(f.n_s), rs});
  }
  return t;
}

TableData table17() {
  TableData t{"table17", {"n", "k1_percent", "eps_percent", "C2", "r", "rho_max"}, {}};
  for (const auto& r : table17_rows()) {
    t.add({n_cell(r.log10_n), Cell::percent(100.0 * r.k1, 1), Cell::percent(100.0 * r.eps, 2), Cell::fixed(r.c2, 3),
           Cell::fixed(r.r, 3), Cell::fixed(r.rho_max, 3)});
  }
  return t;
}

TableData table18() {
  TableData t{"table18", {"n", "mu", "C2", "rho_max", "k1_percent", "eps_percent"}, {}};
  for (const auto& r : table18_rows()) {
    t.add({n_cell(r.log10_n), Cell::fixed(r.mu, 3), Cell::fixed(r.c2, 3), Cell::fixed(r.rho_max, 3),
           Cell::percent(100.0 * r.k1, 1), Cell::percent(100.0 * r.eps, 2)});
  }
  return t;
}

TableData table19(Lab& lab) {
  lab.require_sieve(1000, "table 19");
  TableData t{"table19", {"n", "C_emp", "C2", "C2_over_C_emp_minus_1_percent", "C066_over_C_emp_minus_1_percent"}, {}};
  for (const auto& r : table19_rows(&lab.primes())) {
    if (r.c_emp) {
      t.add({n_cell(r.log10_n), Cell::fixed(*r.c_emp, 3), Cell::fixed(r.c2, 3),
             Cell::percent(100.0 * (r.c2 / *r.c_emp - 1.0), 2),
             Cell::percent(100.0 * (kReferenceC2 / *r.c_emp - 1.0), 2)});
    } else {
      t.add({n_cell(r.log10_n), Cell::missing(), Cell::fixed(r.c2, 3), Cell::missing(), Cell::missing()});
    }
  }
  return t;
}

TableData table21() {
  TableData t{"table21", {"s", "zeta", "M_percent"}, {}};
  for (const auto& r : table21_rows()) {
    t.add({Cell::integer(r.s), Cell::real(r.zeta, 4), Cell::percent(r.m_percent, 2)});
  }
  return t;
}

}  // namespace

TableData build_table(Lab& lab, int id) {
  switch (id) {
    case 5: return table5();
    case 8: return table8();
    case 9: return table9();
    case 17: return table17();
    case 18: return table18();
    case 19: return table19(lab);
    case 21: return table21();
    default: throw std::invalid_argument("unknown table id " + std::to_string(id));
  }
}

std::filesystem::path run_table(Lab& lab, int id) {
  return write_table(build_table(lab, id), lab.config().output_dir, lab.config().format, lab.config().tag());
}

// ---- figures --------------------------------------------------------------

namespace {

TableData fig_p_average(Lab& lab) {
  lab.require_sieve(1000, "p_average");
  const auto& t = lab.primes();
  TableData f{"p_average", {"n", "two_pbar_over_n", "heuristic"}, {}};
  for (std::uint64_t n = 3; n <= 1000; ++n) {
    double x = static_cast<double>(n);
    f.add({Cell::integer(n), Cell::real(2.0 * prime_mean(t, n) / x, 6),
           Cell::real(2.0 * prime_mean_heuristic(&t, x) / x, 6)});
  }
  return f;
}

TableData fig_co_primes() {
  TableData f{"co_primes", {"n", "K_C", "phi_min", "phi_max"}, {}};
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    f.add({Cell::integer(n), Cell::integer(coprime_count(n, n)), Cell::real(totient_min(n, 11), 6),
           Cell::real(totient_max(n), 6)});
  }
  return f;
}

TableData fig_co_primes_dist() {
  TableData f{"co_primes_dist", {"n", "K_C_over_n", "one_minus_inv_n"}, {}};
  for (std::uint64_t n = 2; n <= 200; ++n) {
    double x = static_cast<double>(n);
    f.add({Cell::integer(n), Cell::real(coprime_count(n, n) / x, 6), Cell::real(1.0 - 1.0 / x, 6)});
  }
  return f;
}

TableData fig_s_j_emp(Lab& lab) {
  const std::uint64_t n = 10'000'000;
  lab.require_sieve(n, "S_j_emp");
  auto h = gap_histogram(lab.primes(), n);
  Scale s = Scale::from_value(static_cast<double>(n));
  ModelParams p = resolve(figure_gap_config(), s);
  auto j_max = static_cast<std::uint64_t>(std::floor(std::pow(s.ln_n, p.rho_max)));
  TableData f{"S_j_emp", {"j", "S_j", "P_emp"}, {}};
  for (std::uint64_t j = 2; j <= j_max; j += 2) {
    f.add({Cell::integer(j), Cell::real(std::exp(model_log_density(j, p, s)), 6),
           Cell::real(h.empirical_density(j), 6)});
  }
  return f;
}

TableData fig_s_j_scan() {
  TableData f{"S_j_scan", {"n", "j", "log10_S_j"}, {}};
  ModelConfig cfg = ModelConfig::scale_dependent();
  for (double k : {10.0, 25.0, 50.0, 100.0, 200.0, 300.0}) {
    Scale s = Scale::from_log10(k);
    ModelParams p = resolve(cfg, s);
    double j_max = std::pow(s.ln_n, p.rho_max);
    std::uint64_t last = 0;
    for (int i = 0; i <= 400; ++i) {
      double jr = 2.0 * std::pow(j_max / 2.0, i / 400.0);
      auto j = static_cast<std::uint64_t>(std::floor(jr / 2.0)) * 2;
      if (j < 2 || j == last || static_cast<double>(j) > j_max) continue;
      last = j;
      f.add({n_cell(k), Cell::integer(j), Cell::real(model_log_density(j, p, s) / LogValue::kLn10, 6)});
    }
  }
  return f;
}

TableData fig_ns_j_scan() {
  TableData f{"nS_j_scan", {"n", "j", "log10_nS_j"}, {}};
  ModelConfig cfg = ModelConfig::scale_dependent();
  for (std::uint64_t j : {10ULL, 100ULL, 1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    for (int k = 10; k <= 300; k += 2) {
      Scale s = Scale::from_log10(k);
      ModelParams p = resolve(cfg, s);
      if (static_cast<double>(j) > std::pow(s.ln_n, p.rho_max)) continue;
      f.add({n_cell(k), Cell::integer(j), Cell::real((s.ln_n + model_log_density(j, p, s)) / LogValue::kLn10, 6)});
    }
  }
  return f;
}

TableData fig_g_envelope(Lab& lab) {
  lab.require_sieve(1000, "G_envelope");
  auto bulk = goldbach_counts_bulk(lab.primes(), 500);
  TableData f{"G_envelope", {"n", "G", "G_min", "G_avg", "G_max"}, {}};
  for (std::uint64_t n = 3; n <= 500; ++n) {
    GoldbachBounds b = goldbach_bounds(static_cast<double>(n));
    f.add({Cell::integer(n), Cell::integer(bulk[n]), Cell::real(b.g_min, 6), Cell::real(b.g_avg, 6),
           Cell::real(b.g_max, 6)});
  }
  return f;
}

TableData fig_b_2s() {
  TableData f{"B_2s", {"s", "log10_abs_B_2s", "log10_asymptotic"}, {}};
  for (int s = 1; s <= 200; ++s) {
    double exact = log_abs(bernoulli_exact(2 * s)) / LogValue::kLn10;
    f.add({Cell::integer(s), Cell::real(exact, 8), Cell::real(bernoulli_asymptotic(2 * s).log10(), 8)});
  }
  for (int s = 201; s <= 236; ++s) {
    f.add({Cell::integer(s), Cell::missing(), Cell::real(bernoulli_asymptotic(2 * s).log10(), 8)});
  }
  return f;
}

TableData fig_v_grids(Lab& lab) {
  TableData f{"V_grids", {"a", "b", "V1", "V2"}, {}};
  double k = lab.config().visual_k;
  for (int ia = 1; ia <= 49; ++ia) {
    double a = 0.02 * ia;
    for (int ib = 1; ib <= 300; ++ib) {
      double b = 0.1 * ib;
      auto v = functional_ratio_parts(Complex(a, b), k);
      f.add({Cell::real(a, 4), Cell::real(b, 5), Cell::real(v.v1, 6), Cell::real(v.v2, 6)});
    }
  }
  return f;
}

TableData fig_q_n() {
  TableData f{"q_n", {"log10_n", "q"}, {}};
  for (int i = 0; i <= 300; ++i) {
    double l10 = 1.25 + 0.05 * i;
    f.add({Cell::real(l10, 5), Cell::real(zero_prime_ratio(std::pow(10.0, l10)), 6)});
  }
  return f;
}

TableData fig_r_n(Lab& lab) {
  lab.require_sieve(1000, "r_n");
  const auto& t = lab.primes();
  const double b = 14.135;
  TableData f{"r_n", {"n", "r", "r_min", "r_max", "r_mean", "prime"}, {}};
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    double x = static_cast<double>(n);
    auto st = factor_statistics(x, 0.5);
    f.add({Cell::integer(n), Cell::real(factor_polar(x, Complex(0.5, b)).r, 6), Cell::real(st.r_min, 6),
           Cell::real(st.r_max, 6), Cell::real(st.r_mean, 6), Cell::integer(t.is_prime(n) ? 1 : 0)});
  }
  return f;
}

TableData fig_r_n_multi(Lab& lab) {
  lab.require_sieve(1000, "r_n_multi");
  const auto& t = lab.primes();
  const double b = 14.135;
  const double as[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  TableData f{"r_n_multi", {"n", "r_a0.1", "r_a0.3", "r_a0.5", "r_a0.7", "r_a0.9", "prime"}, {}};
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    std::vector<Cell> row{Cell::integer(n)};
    for (double a : as) row.push_back(Cell::real(factor_polar(static_cast<double>(n), Complex(a, b)).r, 6));
    row.push_back(Cell::integer(t.is_prime(n) ? 1 : 0));
    f.add(std::move(row));
  }
  return f;
}

TableData fig_m_a(Lab& lab) {
  const auto& t = lab.primes();
  TableData f{"M_a", {"a", "M_avg", "r_min_avg", "r_max_avg"}, {}};
  for (int ia = 1; ia <= 30; ++ia) {
    double a = 0.05 * ia;
    double m = 0, lo = 0, hi = 0;
    int n = 0;
    for (int ib = 1; ib < 1000; ++ib, ++n) {
      auto am = avg_modulus(t, 0.1 * ib, a, 50);
      m += am.m, lo += am.r_min, hi += am.r_max;
    }
    f.add({Cell::real(a, 4), Cell::real(m / n, 6), Cell::real(lo / n, 6), Cell::real(hi / n, 6)});
  }
  return f;
}

TableData fig_m_b(Lab& lab) {
  const auto& t = lab.primes();
  auto scan = localization_scan(t, 10.0, 100.0, 0.01, 0.5, &lab.zeros(), lab.config().threads);
  TableData f{"M_b", {"b", "M_k", "flagged", "nearest_zero"}, {}};
  for (const auto& r : scan) {
    f.add({Cell::real(r.b, 6), Cell::real(r.m_k, 6), Cell::integer(r.flagged() ? 1 : 0),
           Cell::real(*r.nearest_zero_distance, 6)});
  }
  return f;
}

TableData fig_f_k_a(Lab& lab) {
  const auto& t = lab.primes();
  const auto& z = lab.zeros();
  std::mt19937_64 rng(lab.config().seed);
  std::uniform_real_distribution<double> ub(10.0, 100.0);
  std::vector<double> bs(500);
  for (auto& b : bs) b = ub(rng);
  std::size_t nz = z.count_below(100.0);
  TableData f{"F_k_a", {"a", "F_generic", "F_zeros"}, {}};
  for (int ia = 1; ia <= 30; ++ia) {
    double a = 0.05 * ia;
    double g = 0, zs = 0;
    for (double b : bs) g += damping_fraction(t, Complex(a, b), 100);
    for (std::size_t k = 1; k <= nz; ++k) zs += damping_fraction(t, Complex(a, z.height(k)), 100);
    f.add({Cell::real(a, 4), Cell::real(g / bs.size(), 6), Cell::real(zs / nz, 6)});
  }
  return f;
}

TableData fig_ln_sigma() {
  const double b = 14.135;
  const double ks[] = {50, 100, 200, 300};
  TableData f{"ln_sigma", {"a", "p1e50", "p1e100", "p1e200", "p1e300"}, {}};
  for (int ia = 0; ia <= 100; ++ia) {
    double a = 0.01 * ia;
    std::vector<Cell> row{Cell::real(a, 4)};
    for (double k : ks) row.push_back(Cell::real(ln_fluctuation_sigma(k * LogValue::kLn10, Complex(a, b)), 6));
    f.add(std::move(row));
  }
  return f;
}

}  // namespace

TableData build_figure(Lab& lab, const std::string& id) {
  if (id == "p_average") return fig_p_average(lab);
  if (id == "co_primes") return fig_co_primes();
  if (id == "co_primes_dist") return fig_co_primes_dist();
  if (id == "S_j_emp") return fig_s_j_emp(lab);
  if (id == "S_j_scan") return fig_s_j_scan();
  if (id == "nS_j_scan") return fig_ns_j_scan();
  if (id == "G_envelope") return fig_g_envelope(lab);
  if (id == "B_2s") return fig_b_2s();
  if (id == "V_grids") return fig_v_grids(lab);
  if (id == "q_n") return fig_q_n();
  if (id == "r_n") return fig_r_n(lab);
  if (id == "r_n_multi") return fig_r_n_multi(lab);
  if (id == "M_a") return fig_m_a(lab);
  if (id == "M_b") return fig_m_b(lab);
  if (id == "F_k_a") return fig_f_k_a(lab);
  if (id == "ln_sigma") return fig_ln_sigma();
  throw std::invalid_argument("unknown figure id '" + id + "'");
}

std::filesystem::path run_figure(Lab& lab, const std::string& id) {
  return write_table(build_figure(lab, id), lab.config().output_dir, lab.config().format, lab.config().tag());
}

// ---- verification ---------------------------------------------------------

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerifyReport::print(std::ostream& os) const {
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.suite << '/' << c.name << ": " << c.detail << '\n';
  }
  std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  os << passed << '/' << checks.size() << " checks passed\n";
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"indicators", "gaps", "goldbach", "zeta", "oscillation"};
  return s;
}

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void verify_indicators(Lab& lab, VerifyReport& rep) {
  lab.require_sieve(10'000, "verify indicators");
  const auto& t = lab.primes();
  std::uint64_t bad = 0;
  for (std::uint64_t n = 4; n <= 10'000; ++n) bad += prime_indicator(t, n) != (trial_prime(n) ? 1 : 0);
  rep.checks.push_back({"indicators", "prime_indicator_vs_trial_division", bad == 0,
                        std::to_string(bad) + " mismatches for 4 <= n <= 1e4"});
  bad = 0;
  for (std::uint64_t n = 2; n <= 10'000; ++n) bad += coprime_count(n, n) != totient(n);
  rep.checks.push_back({"indicators", "coprime_count_equals_totient", bad == 0,
                        std::to_string(bad) + " mismatches for n <= 1e4"});
  bad = 0;
  for (std::uint64_t n = 2; n < 2310; ++n) {
    double phi = static_cast<double>(totient(n));
    bad += !(totient_min(n, 11) <= phi && phi <= totient_max(n));
  }
  rep.checks.push_back({"indicators", "totient_envelope_w11", bad == 0, std::to_string(bad) + " violations"});
}

void verify_gaps(Lab& lab, VerifyReport& rep) {
  lab.require_sieve(10'000'000, "verify gaps");
  const auto& t = lab.primes();
  double worst = 0.0;
  for (const auto& r : table18_rows()) worst = std::max(worst, std::fabs(r.eps));
  rep.checks.push_back({"gaps", "table18_pnt_error", worst <= 0.25, "max |eps| " + fmt_pm(worst, 0.25) + " %"});
  double e5 = fit_error(gap_histogram(t, 100'000));
  double e6 = fit_error(gap_histogram(t, 1'000'000));
  double e7 = fit_error(gap_histogram(t, 10'000'000));
  rep.checks.push_back({"gaps", "fit_error_decreasing", std::isfinite(e7) && e5 > e6 && e6 > e7,
                        "E = " + fmt(e5, 4) + ", " + fmt(e6, 4) + ", " + fmt(e7, 4) + " at 1e5, 1e6, 1e7"});
  auto h = gap_histogram(t, 1'000'000);
  rep.checks.push_back({"gaps", "histogram_total", h.total_gaps == t.count(1'000'000) - 1,
                        std::to_string(h.total_gaps) + " gaps"});
}

void verify_goldbach(Lab& lab, VerifyReport& rep) {
  lab.require_sieve(2'000'000, "verify goldbach");
  const auto& t = lab.primes();
  auto v = primelab::verify_goldbach(t, 1'000'000);
  rep.checks.push_back({"goldbach", "every_even_up_to_2e6", v.ok(),
                        v.ok() ? "largest minimal prime " + std::to_string(v.largest_min_prime)
                               : "first failure at n = " + std::to_string(v.first_failure)});
  auto bulk = goldbach_counts_bulk(t, 10'000);
  std::uint64_t bad = 0, bad_hl = 0;
  for (std::uint64_t n = 10; n <= 10'000; ++n) {
    auto c = cumulative_counts(t, n, bulk);
    bad += !(c.cp_n <= c.g_star && c.g_star <= c.cp_2n2);
    double sp = hl_singular_product(n);
    bad_hl += !(sp >= 1.0 && sp <= 1.4 * std::log(static_cast<double>(n)));
  }
  rep.checks.push_back({"goldbach", "cumulative_sandwich", bad == 0, std::to_string(bad) + " violations"});
  rep.checks.push_back({"goldbach", "singular_product_window", bad_hl == 0, std::to_string(bad_hl) + " violations"});
}

void verify_zeta(Lab& lab, VerifyReport& rep) {
  double worst = 0.0;
  for (int i = 0; i < 270; ++i) {
    double b = 1.0 + 0.37 * i;
    worst = std::max(worst, std::fabs(std::abs(functional_ratio(Complex(0.5, b))) - 1.0));
  }
  rep.checks.push_back({"zeta", "unit_modulus_critical_line", worst <= 1e-8, fmt_pm(worst, 1e-8)});
  std::mt19937_64 rng(lab.config().seed);
  std::uniform_real_distribution<double> ua(0.0, 1.0), ub(-50.0, 50.0);
  worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Complex s(ua(rng), ub(rng));
    Complex ratio = std::exp(log_gamma(s) + log_gamma(1.0 - s) - std::log(kPi) + log_sin(kPi * s));
    worst = std::max(worst, std::abs(ratio - 1.0));
  }
  rep.checks.push_back({"zeta", "gamma_reflection", worst <= 1e-9, fmt_pm(worst, 1e-9)});
  worst = 0.0;
  for (int s2 = 2; s2 <= 20; s2 += 2) {
    double via_b = std::exp(log_abs(bernoulli_exact(s2)) + s2 * std::log(2.0 * kPi) - std::log(2.0) -
                            std::lgamma(s2 + 1.0));
    worst = std::max(worst, std::fabs(via_b - eta_zeta(Complex(s2, 0.0)).real()));
  }
  rep.checks.push_back({"zeta", "bernoulli_identity", worst <= 1e-9, fmt_pm(worst, 1e-9)});
  worst = 0.0;
  for (int k = 10; k <= 29; ++k) {
    worst = std::max(worst, std::fabs(lambert_zero_height(k) / lab.zeros().height(k) - 1.0));
  }
  rep.checks.push_back({"zeta", "lambert_heights", worst <= 0.02, fmt_pm(worst, 0.02)});
  auto cp = constant_products(1'000'000);
  double dg = std::fabs(cp.gamma - kEulerGamma), dp = std::fabs(cp.pi - kPi);
  rep.checks.push_back({"zeta", "gamma_product", dg <= 1e-6, fmt_pm(dg, 1e-6)});
  rep.checks.push_back({"zeta", "pi_product", dp <= 1e-5, fmt_pm(dp, 1e-5)});
}

void verify_oscillation(Lab& lab, VerifyReport& rep) {
  const auto& t = lab.primes();
  std::mt19937_64 rng(lab.config().seed);
  std::uniform_real_distribution<double> ua(0.3, 1.5), ub(10.0, 100.0);
  double w1 = 0.0, w2 = 0.0;
  for (int i = 0; i < 20; ++i) {
    double a = ua(rng), b = ub(rng);
    auto m = avg_modulus(t, b, a, 50);
    double h1 = 1e-5, h2 = 1e-3;
    double fd1 = (avg_modulus(t, b + h1, a, 50).m - avg_modulus(t, b - h1, a, 50).m) / (2 * h1);
    double fd2 = (avg_modulus(t, b + h2, a, 50).m - 2 * m.m + avg_modulus(t, b - h2, a, 50).m) / (h2 * h2);
    w1 = std::max(w1, std::fabs(fd1 / m.dm_db - 1.0));
    w2 = std::max(w2, std::fabs(fd2 / m.d2m_db2 - 1.0));
  }
  rep.checks.push_back({"oscillation", "first_derivative", w1 <= 1e-5, fmt_pm(w1, 1e-5)});
  rep.checks.push_back({"oscillation", "second_derivative", w2 <= 1e-3, fmt_pm(w2, 1e-3)});
  auto scan = localization_scan(t, 10.0, 100.0, 0.01, 0.5, &lab.zeros(), lab.config().threads);
  double sum = 0.0;
  int flagged = 0;
  bool near_first = false;
  for (const auto& r : scan) {
    if (!r.flagged()) continue;
    ++flagged;
    sum += *r.nearest_zero_distance;
    near_first |= std::fabs(r.b - 14.1347) <= 0.05;
  }
  double base = 0.0;
  std::uniform_real_distribution<double> ubase(10.0, 100.0);
  for (int i = 0; i < 10'000; ++i) base += lab.zeros().nearest_distance(ubase(rng));
  base /= 10'000;
  double mean = flagged ? sum / flagged : INFINITY;
  rep.checks.push_back({"oscillation", "localization_vs_random", flagged > 0 && mean <= 0.5 * base && near_first,
                        std::to_string(flagged) + " flagged, mean distance " + fmt(mean, 4) + " vs baseline " +
                            fmt(base, 4)});
  double worst = 0.0;
  for (double p : {2.0, 101.0, 10007.0}) {
    auto di = damping_intervals(p, 0.5, 0.0, 1000.0);
    const int n = 200'000;
    int below = 0;
    for (int i = 0; i < n; ++i) below += factor_polar(p, Complex(0.5, 1000.0 * (i + 0.5) / n)).r <= 1.0;
    worst = std::max(worst, std::fabs(double(below) / n - di.fraction));
  }
  rep.checks.push_back({"oscillation", "damping_fraction_measure", worst <= 1e-3, fmt_pm(worst, 1e-3)});
}

}  // namespace

VerifyReport run_verify(Lab& lab, const std::string& suite) {
  VerifyReport rep;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  bool known = suite == "all" || std::find(verify_suites().begin(), verify_suites().end(), suite) != verify_suites().end();
  if (!known) throw std::invalid_argument("unknown verify suite '" + suite + "'");
  if (want("indicators")) verify_indicators(lab, rep);
  if (want("gaps")) verify_gaps(lab, rep);
  if (want("goldbach")) verify_goldbach(lab, rep);
  if (want("zeta")) verify_zeta(lab, rep);
  if (want("oscillation")) verify_oscillation(lab, rep);
  return rep;
}

}  // namespace primelab
