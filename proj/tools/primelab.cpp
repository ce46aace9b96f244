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

// primelab <module> <verb> [--flags]

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "primelab/density.hpp"
#include "primelab/errors.hpp"
#include "primelab/gap_model.hpp"
#include "primelab/goldbach.hpp"
#include "primelab/harness.hpp"
#include "primelab/oscillation.hpp"
#include "primelab/zeta.hpp"

using namespace primelab;

namespace {

// "1e50", "10^50" and plain numbers; large exponents never leave log form.
Scale parse_scale(const std::string& s) {
  for (const std::string prefix : {"1e", "1E", "10^"}) {
    if (s.rfind(prefix, 0) == 0) return Scale::from_log10(std::stod(s.substr(prefix.size())));
  }
  return Scale::from_value(std::stod(s));
}

std::uint64_t parse_count(const std::string& s) {
  double v = std::stod(s);
  if (!(v >= 0) || v > 1e19) throw std::invalid_argument("bad count '" + s + "'");
  return static_cast<std::uint64_t>(std::llround(v));
}

void kv(const std::string& k, double v) { std::printf("%s: %.10g\n", k.c_str(), v); }

void emit(Lab& lab, const TableData& t) {
  std::cout << write_table(t, lab.config().output_dir, lab.config().format, lab.config().tag()).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primelab: primes, gaps, Goldbach counts and zeta diagnostics"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string sieve_limit = "1e7";
  std::string out = "out";
  std::string format = "csv";
  unsigned threads = 1;
  std::uint64_t seed = RunConfig{}.seed;
  app.add_option("--sieve-limit", sieve_limit, "Sieve bound (accepts 1e7 style)")->capture_default_str();
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized diagnostics")->capture_default_str();

  // table / figure / verify
  auto* table = app.add_subcommand("table", "Write a table (5, 8, 9, 17, 18, 19, 21 or all)");
  std::string table_id;
  table->add_option("id", table_id)->required();
  auto* figure = app.add_subcommand("figure", "Write figure data (or all)");
  std::string figure_id;
  figure->add_option("id", figure_id)->required();
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "indicators, gaps, goldbach, zeta, oscillation or all")->capture_default_str();

  // gaps
  auto* gaps = app.add_subcommand("gaps", "Gap histogram and model");
  gaps->require_subcommand(1);
  auto* g_emp = gaps->add_subcommand("empirical", "Sieve histogram with model comparison");
  std::string g_limit = "1e7";
  g_emp->add_option("--limit", g_limit)->capture_default_str();
  auto* g_model = gaps->add_subcommand("model", "Evaluate the gap model at one scale");
  std::string g_n = "1e50", g_c2 = "scale", g_rho = "fit";
  double g_r = 2.0 / 3.0;
  g_model->add_option("--n", g_n)->capture_default_str();
  g_model->add_option("--c2", g_c2, "scale or a number")->capture_default_str();
  g_model->add_option("--r", g_r)->capture_default_str();
  g_model->add_option("--rho-max", g_rho, "fit or a number")->capture_default_str();
  auto* g_solve = gaps->add_subcommand("solve", "Solve one parameter for eps(n) = 0");
  std::string g_free = "rho_max";
  g_solve->add_option("--n", g_n)->capture_default_str();
  g_solve->add_option("--free", g_free)->check(CLI::IsMember({"c2", "r", "rho_max"}))->capture_default_str();

  // goldbach
  auto* gold = app.add_subcommand("goldbach", "Goldbach counts and envelope");
  std::string max_n = "500";
  bool bulk = false;
  gold->add_option("--max-n", max_n)->capture_default_str();
  gold->add_flag("--bulk", bulk, "Enumerate all pairs at once");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Zeta-side tables and grids");
  zeta->require_subcommand(1);
  zeta->add_subcommand("table21", "zeta(s) and M(s) for s = 2..7");
  auto* vgrid = zeta->add_subcommand("vgrid", "V_1 and V_2 over a grid");
  double amin = 0.0, amax = 1.0, bmax = 30.0, vk = 0.25, vstep = 0.1;
  vgrid->add_option("--amin", amin)->capture_default_str();
  vgrid->add_option("--amax", amax)->capture_default_str();
  vgrid->add_option("--bmax", bmax)->capture_default_str();
  vgrid->add_option("--step", vstep)->capture_default_str();
  vgrid->add_option("--k", vk)->check(CLI::PositiveNumber)->capture_default_str();
  auto* zz = zeta->add_subcommand("zeros", "Reference zeros against counting formulas");
  double zb = 100.0;
  zz->add_option("--bmax", zb)->capture_default_str();

  // osc
  auto* osc = app.add_subcommand("osc", "Euler-factor oscillation");
  osc->require_subcommand(1);
  auto* scan = osc->add_subcommand("scan", "Localization scan");
  double bmin = 10.0, sbmax = 100.0, step = 0.01, sa = 0.5;
  scan->add_option("--bmin", bmin)->capture_default_str();
  scan->add_option("--bmax", sbmax)->capture_default_str();
  scan->add_option("--step", step)->capture_default_str();
  scan->add_option("--a", sa)->capture_default_str();
  auto* factor = osc->add_subcommand("factor", "Polar form of one Euler factor");
  double fp = 2, fa = 0.5, fb = 14.135;
  factor->add_option("--p", fp)->capture_default_str();
  factor->add_option("--a", fa)->capture_default_str();
  factor->add_option("--b", fb)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    cfg.sieve_limit = parse_count(sieve_limit);
    cfg.output_dir = out;
    cfg.format = parse_format(format);
    cfg.threads = threads;
    cfg.seed = seed;
    if (*vgrid) cfg.visual_k = vk;
    Lab lab(cfg);

    if (*table) {
      if (table_id == "all") {
        for (int id : table_ids()) std::cout << run_table(lab, id).string() << "\n";
      } else {
        std::cout << run_table(lab, std::stoi(table_id)).string() << "\n";
      }
    } else if (*figure) {
      if (figure_id == "all") {
        for (const auto& id : figure_ids()) {
          if (id == "S_j_emp" && cfg.sieve_limit < 10'000'000) {
            std::cerr << "skipping S_j_emp: needs --sieve-limit 1e7\n";
            continue;
          }
          std::cout << run_figure(lab, id).string() << "\n";
        }
      } else {
        std::cout << run_figure(lab, figure_id).string() << "\n";
      }
    } else if (*verify) {
      VerifyReport rep = run_verify(lab, suite);
      rep.print(std::cout);
      return rep.ok() ? 0 : 1;
    } else if (*g_emp) {
      std::uint64_t n = parse_count(g_limit);
      lab.require_sieve(n, "gaps empirical");
      GapHistogram h = gap_histogram(lab.primes(), n);
      Scale s = Scale::from_value(static_cast<double>(n));
      ModelParams p = resolve(figure_gap_config(), s);
      TableData t{"gaps_empirical", {"j", "count", "P_emp", "S_j"}, {}};
      for (const auto& [j, c] : h.counts) {
        bool in_range = static_cast<double>(j) <= std::pow(s.ln_n, p.rho_max);
        t.add({Cell::integer(j), Cell::integer(c), Cell::real(h.empirical_density(j), 6),
               in_range ? Cell::real(std::exp(model_log_density(j, p, s)), 6) : Cell::missing()});
      }
      emit(lab, t);
      kv("total_gaps", static_cast<double>(h.total_gaps));
      kv("mode", static_cast<double>(h.mode()));
      kv("fit_error", fit_error(h));
    } else if (*g_model) {
      Scale s = parse_scale(g_n);
      ModelConfig c = ModelConfig::reference();
      c.r = g_r;
      if (g_c2 == "scale") {
        c.c2_mode = C2Mode::kScaleDependent;
      } else {
        c.c2 = std::stod(g_c2);
      }
      if (g_rho == "fit") {
        c.rho_max_mode = RhoMaxMode::kQuadFit;
      } else {
        c.rho_max = std::stod(g_rho);
      }
      ModelEval e = evaluate(c, s);
      kv("log10_n", s.ln_n / LogValue::kLn10);
      kv("mu", e.mu);
      kv("C2", e.params.c2);
      kv("r", e.params.r);
      kv("rho_max", e.params.rho_max);
      kv("j_max", e.j_max);
      kv("k1_percent", 100.0 * e.k1);
      kv("eps_percent", 100.0 * e.eps);
    } else if (*g_solve) {
      Scale s = parse_scale(g_n);
      FreeParam which = g_free == "c2" ? FreeParam::kC2 : g_free == "r" ? FreeParam::kR : FreeParam::kRhoMax;
      SolveResult r = solve_scenario(s, which);
      kv(g_free, r.value);
      kv("eps_percent", 100.0 * r.eps);
      kv("iterations", r.iterations);
    } else if (*gold) {
      std::uint64_t m = parse_count(max_n);
      lab.require_sieve(2 * m, "goldbach");
      const auto& t = lab.primes();
      std::vector<std::uint32_t> counts;
      if (bulk) {
        counts = goldbach_counts_bulk(t, m);
      } else {
        counts.assign(m + 1, 0);
        for (std::uint64_t n = 2; n <= m; ++n) counts[n] = static_cast<std::uint32_t>(goldbach_count(t, n));
      }
      TableData out_t{"goldbach", {"n", "G", "G_min", "G_avg", "G_max"}, {}};
      for (std::uint64_t n = 3; n <= m; ++n) {
        GoldbachBounds b = goldbach_bounds(static_cast<double>(n));
        out_t.add({Cell::integer(n), Cell::integer(counts[n]), Cell::real(b.g_min, 6), Cell::real(b.g_avg, 6),
                   Cell::real(b.g_max, 6)});
      }
      emit(lab, out_t);
      GoldbachVerification v = primelab::verify_goldbach(t, m);
      if (!v.ok()) {
        std::printf("first_failure: %llu\n", static_cast<unsigned long long>(v.first_failure));
        return 1;
      }
      kv("verified_up_to", static_cast<double>(m));
      kv("largest_min_prime", static_cast<double>(v.largest_min_prime));
    } else if (zeta->got_subcommand("table21")) {
      std::cout << run_table(lab, 21).string() << "\n";
    } else if (*vgrid) {
      if (!(amax > amin) || !(bmax > 0) || !(vstep > 0)) throw std::invalid_argument("empty grid");
      TableData t{"vgrid", {"a", "b", "V1", "V2"}, {}};
      double da = (amax - amin) / 50.0;
      for (int ia = 1; ia < 50; ++ia) {
        double a = amin + da * ia;
        for (double b = vstep; b <= bmax + 1e-12; b += vstep) {
          auto v = functional_ratio_parts(Complex(a, b), vk);
          t.add({Cell::real(a, 4), Cell::real(b, 5), Cell::real(v.v1, 6), Cell::real(v.v2, 6)});
        }
      }
      emit(lab, t);
    } else if (*zz) {
      const auto& z = lab.zeros();
      TableData t{"zeros", {"k", "b_k", "lambert_b_k", "N_main", "N_refined"}, {}};
      for (std::size_t k = 1; k <= z.size() && z.height(k) <= zb; ++k) {
        double b = z.height(k);
        t.add({Cell::integer(static_cast<std::int64_t>(k)), Cell::real(b, 12),
               k >= 2 ? Cell::real(lambert_zero_height(static_cast<int>(k)), 8) : Cell::missing(),
               Cell::real(zero_count(b), 6), Cell::real(refined_zero_count(b + 0.05).value, 6)});
      }
      emit(lab, t);
      kv("count_below", static_cast<double>(z.count_below(zb)));
      kv("main_term", zero_count(zb));
      RefinedZeroCount rc = refined_zero_count(zb);
      kv("refined", rc.value);
      if (!rc.accurate) std::cerr << "warning: refined count beyond |b| = 120 is not accuracy-checked\n";
    } else if (*scan) {
      auto reps = localization_scan(lab.primes(), bmin, sbmax, step, sa, &lab.zeros(), cfg.threads);
      TableData t{"osc_scan", {"b", "k", "M_k", "sin_sum", "cos_sum", "F_k", "flagged", "nearest_zero"}, {}};
      for (const auto& r : reps) {
        t.add({Cell::real(r.b, 6), Cell::integer(static_cast<std::int64_t>(r.k)), Cell::real(r.m_k, 6),
               Cell::real(r.sin_sum, 6), Cell::real(r.cos_sum, 6), Cell::real(r.f_k, 4),
               Cell::integer(r.flagged() ? 1 : 0), Cell::real(*r.nearest_zero_distance, 6)});
      }
      emit(lab, t);
      for (const auto& c : merge_candidates(reps)) {
        std::printf("candidate b=%.2f M_k=%.4f nearest_zero=%.3f\n", c.b, c.m_k, *c.nearest_zero_distance);
      }
    } else if (*factor) {
      FactorPolar f = factor_polar(fp, Complex(fa, fb));
      kv("z", f.z);
      kv("theta", f.theta);
      kv("r", f.r);
      kv("phi", f.phi);
      FactorStatistics st = factor_statistics(fp, fa);
      kv("r_min", st.r_min);
      kv("r_max", st.r_max);
      kv("r_mean", st.r_mean);
      kv("delta_r", st.delta_r);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
