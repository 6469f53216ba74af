// Copyright 2026 The cachemarket Authors
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

#include "commands.h"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "cachemarket/caching.h"
#include "cachemarket/delay.h"
#include "cachemarket/error.h"
#include "cachemarket/geometry.h"
#include "figures.h"
#include "parallel.h"
#include "pipeline.h"
#include "scenario.h"
#include "table.h"
#include "validate.h"

namespace cachemarket::cli {
namespace {

struct Common {
  std::string config;
  std::string preset = "baseline";
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
};

void AddCommon(CLI::App* app, Common& c, bool json_allowed = false) {
  app->add_option("--config", c.config, "Scenario file (YAML)")
      ->check(CLI::ExistingFile);
  app->add_option("--preset", c.preset, "Built-in scenario")
      ->check(CLI::IsMember({"baseline"}))
      ->capture_default_str();
  app->add_option("--out", c.out, "Write output here instead of stdout");
  c.seed_opt =
      app->add_option("--seed", c.seed, "Master seed for the simulations");
  std::vector<std::string> formats{"csv"};
  if (json_allowed) formats.push_back("json");
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
}

Scenario LoadFor(const Common& c) {
  Scenario s = c.config.empty() ? BaselineScenario() : LoadScenario(c.config);
  if (c.seed_opt->count() > 0) s.sim.seed = c.seed;
  s.Validate();
  return s;
}

std::shared_ptr<spdlog::logger> MakeLogger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto log = std::make_shared<spdlog::logger>("cachemarket", sink);
  log->set_pattern("[%l] %v");
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("CACHEMARKET_LOG")) {
    const std::string v = env;
    if (v == "off") level = spdlog::level::off;
    if (v == "error") level = spdlog::level::err;
    if (v == "warn") level = spdlog::level::warn;
    if (v == "info") level = spdlog::level::info;
    if (v == "debug") level = spdlog::level::debug;
    if (v == "trace") level = spdlog::level::trace;
  }
  log->set_level(level);
  return log;
}

using HeaderFn = std::function<std::vector<std::string>(const Scenario&)>;
using RowsFn = std::function<std::vector<Row>(const Scenario&)>;

// One table for the scenario, or one block of rows per sweep point with the
// swept value in the first column. Points run concurrently, rows come out in
// grid order.
Table Sweep(const Scenario& s, const HeaderFn& header, const RowsFn& rows,
            spdlog::logger& log) {
  Table t;
  t.header = header(s);
  if (!s.sweep) {
    t.rows = rows(s);
    return t;
  }
  const SweepSpec& sw = *s.sweep;
  t.header.insert(t.header.begin(), sw.variable);
  log.info("sweeping {} over {} points", sw.variable, sw.grid.size());
  auto blocks = OrderedMap(sw.grid.size(), [&](std::size_t i) {
    Scenario point = s;
    SetField(point, sw.variable, sw.grid[i]);
    point.Validate();
    std::vector<Row> r = rows(point);
    for (Row& row : r) row.insert(row.begin(), Cell(sw.grid[i]));
    return r;
  });
  for (auto& b : blocks) {
    for (Row& r : b) t.rows.push_back(std::move(r));
  }
  return t;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw InvalidArgument("cannot open " + path + " for writing");
    os_ = &file_;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

// Diagnostics gathered from concurrent sweep points.
class Notes {
 public:
  void Add(std::string s) {
    std::lock_guard<std::mutex> lock(mu_);
    notes_.push_back(std::move(s));
  }
  bool empty() const { return notes_.empty(); }
  const std::string& front() const { return notes_.front(); }
  std::size_t size() const { return notes_.size(); }

 private:
  std::mutex mu_;
  std::vector<std::string> notes_;
};

// --- coverage ---

std::vector<std::string> CoverageHeader(const Scenario&) {
  return {"lambda",   "L",          "alpha",         "t_bar",
          "sigma2",   "beta",       "p_c_exact",     "p_c_closed_form",
          "p_c_interference_limited", "throughput"};
}

std::vector<Row> CoverageRows(const Scenario& s) {
  const geometry::NetworkParams& n = s.network;
  const double beta = geometry::ComputeBeta(n);
  const double closed = geometry::CoverageClosedForm(n, beta).p_c;
  return {{Cell(n.bs_density), Cell(n.subchannels), Cell(n.path_loss),
           Cell(n.sinr_threshold), Cell(n.noise), Cell(beta),
           Cell(geometry::CoverageExact(n, beta).p_c), Cell(closed),
           Cell(geometry::CoverageInterferenceLimited(n, beta).p_c),
           Cell(geometry::Throughput(n, closed))}};
}

// --- hitprob ---

std::vector<std::string> HitHeader(const std::string& method) {
  std::vector<std::string> h{"F", "nu", "S"};
  if (method != "asymptotic") h.push_back("p_hit_exact");
  if (method != "exact") h.push_back("p_hit_asymptotic");
  if (method == "both") h.push_back("rel_error");
  return h;
}

std::vector<Row> HitRows(const Scenario& s, const std::string& method) {
  const caching::CatalogParams& c = s.catalog;
  Row row{Cell(c.files), Cell(c.zipf), Cell(c.cache)};
  double exact = 0.0, asym = 0.0;
  if (method != "asymptotic") {
    exact = caching::HitProbExact(c);
    row.push_back(Cell(exact));
  }
  if (method != "exact") {
    asym = caching::HitProbAsymptotic(c);
    row.push_back(Cell(asym));
  }
  if (method == "both") row.push_back(Cell(std::abs(asym - exact) / exact));
  return {row};
}

// --- delay ---

std::vector<std::string> DelayHeader(const Scenario&) {
  return {"lambda",   "throughput",    "fronthaul",  "backhaul",
          "p_hit",    "total",         "budget",     "ue_per_bs",
          "max_ue_per_bs", "lambda_min", "status"};
}

std::vector<Row> DelayRows(const Scenario& s, Notes& notes) {
  const geometry::NetworkParams& n = s.network;
  const double g =
      geometry::Throughput(n, geometry::CoverageClosedForm(n).p_c);
  const double fh = delay::FronthaulDelay(n, g, s.catalog.file_bits);
  const double bh = delay::BackhaulDelay(s.queue);
  const double hit = caching::HitProbExact(s.catalog);
  const delay::FeasibilityReport f =
      delay::CheckFeasibility(n, g, s.catalog.file_bits, s.budget);
  if (f.status != delay::Feasibility::kFeasible) {
    notes.Add("lambda = " + FormatDouble(n.bs_density) + ": " + f.Describe());
  }
  return {{Cell(n.bs_density), Cell(g), Cell(fh), Cell(bh), Cell(hit),
           Cell(delay::TotalDelay(fh, bh, hit)), Cell(f.budget),
           Cell(f.ue_per_bs), Cell(f.max_ue_per_bs), Cell(f.min_bs_density),
           delay::FeasibilityName(f.status)}};
}

// --- mno-solve ---

std::vector<std::string> FollowerHeader(const Scenario&) {
  return {"mno",          "W",           "L",       "omega",
          "p_c",          "throughput",  "c1",      "c2",
          "c3",           "A",           "V",       "R",
          "method",       "r_star",      "q_star",  "lambda_star",
          "s_star",       "cache_intensity", "duality_gap", "status"};
}

std::vector<Row> FollowerRows(const Scenario& s, Notes& notes) {
  const FollowerStage stage = RunFollowers(s, s.solver.price);
  std::vector<Row> rows;
  for (const MnoResult& m : stage.mnos) {
    if (auto why = Infeasibility(m)) notes.Add(*why);
    const mno::GpConstants& c = m.constants;
    const mno::GpSolution& x = m.solution;
    rows.push_back({m.name, Cell(m.network.bandwidth),
                    Cell(m.network.subchannels), Cell(x.omega),
                    Cell(m.coverage.p_c), Cell(m.throughput), Cell(c.c1),
                    Cell(c.c2), Cell(c.c3), Cell(c.a), Cell(c.v), Cell(c.r),
                    mno::ResponseMethodName(x.method), Cell(x.r_star),
                    Cell(x.q_star), Cell(x.lambda_star), Cell(x.s_star),
                    Cell(x.cache_intensity()),
                    Cell(x.diagnostics.duality_gap),
                    delay::FeasibilityName(m.feasibility.status)});
  }
  return rows;
}

// --- solve ---

std::vector<std::string> SolveHeader(const Scenario& s) {
  std::vector<std::string> h{"omega_star", "z_star",     "revenue",
                             "cost",       "profit",     "iterations",
                             "total_rent", "config_hash"};
  for (const MnoSpec& m : s.mnos) {
    h.push_back("lambda_" + m.name);
    h.push_back("S_" + m.name);
    h.push_back("psi_" + m.name);
  }
  return h;
}

std::vector<Row> SolveRows(const Scenario& s) {
  const RunReport r = RunPipeline(s);
  const market::MarketOutcome& m = r.market;
  Row row{Cell(m.omega_star), Cell(m.z_star), Cell(m.revenue),
          Cell(m.cost),       Cell(m.profit), Cell(m.iterations),
          Cell(r.shares.total), r.config_hash};
  for (std::size_t k = 0; k < r.shares.shares.size(); ++k) {
    row.push_back(Cell(m.bs_density[k]));
    row.push_back(Cell(m.cache_size[k]));
    row.push_back(Cell(r.shares.shares[k]));
  }
  return {row};
}


}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  auto log = MakeLogger(err);
  CLI::App app{"Cache-enabled network sharing: coverage, caching, delay, "
               "operator best responses, infrastructure pricing and rent "
               "sharing."};
  app.name("cachemarket");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common cov_c, hit_c, del_c, mno_c, sol_c, rep_c, val_c;

  CLI::App* cov = app.add_subcommand(
      "coverage",
      "Coverage probability and throughput.\nColumns: lambda, L, alpha, "
      "t_bar, sigma2, beta, p_c_exact, p_c_closed_form, "
      "p_c_interference_limited, throughput (bit/s, closed-form coverage).");
  AddCommon(cov, cov_c);

  std::optional<std::int64_t> hit_files, hit_cache;
  std::optional<double> hit_nu;
  std::string hit_method = "both";
  CLI::App* hit = app.add_subcommand(
      "hitprob",
      "Cache hit probability.\nColumns: F, nu, S, p_hit_exact, "
      "p_hit_asymptotic, rel_error (|asymptotic - exact| / exact).");
  AddCommon(hit, hit_c);
  hit->add_option("--F", hit_files, "Catalog size");
  hit->add_option("--nu", hit_nu, "Zipf exponent");
  hit->add_option("--S", hit_cache, "Cache size in files");
  hit->add_option("--method", hit_method, "exact, asymptotic or both")
      ->check(CLI::IsMember({"exact", "asymptotic", "both"}))
      ->capture_default_str();

  bool require_feasible = false;
  CLI::App* del = app.add_subcommand(
      "delay",
      "Fronthaul, backhaul and total delay with the fronthaul feasibility "
      "check.\nColumns: lambda, throughput, fronthaul, backhaul, p_hit, "
      "total, budget (gamma D_th), ue_per_bs, max_ue_per_bs, lambda_min, "
      "status (feasible, boundary or infeasible).");
  AddCommon(del, del_c);
  del->add_flag("--require-feasible", require_feasible,
                "Exit 3 unless every row is feasible");

  std::optional<double> mno_omega;
  CLI::App* mno = app.add_subcommand(
      "mno-solve",
      "Best response of every MNO at a fixed price.\nColumns: mno, W, L, "
      "omega, p_c, throughput, c1, c2, c3, A, V, R, method, r_star, q_star, "
      "lambda_star, s_star, cache_intensity, duality_gap, status.");
  AddCommon(mno, mno_c);
  mno->add_option("--omega", mno_omega,
                  "Price per unit cache intensity (default: solver.omega)");

  CLI::App* sol = app.add_subcommand(
      "solve",
      "Full equilibrium: best responses, price, rent shares.\nJSON report "
      "by default; --format csv gives omega_star, z_star, revenue, cost, "
      "profit, iterations, total_rent, config_hash and per MNO lambda, S, "
      "psi.");
  AddCommon(sol, sol_c, true);
  sol_c.format = "json";
  sol->get_option("--format")->default_str("json");

  int figure = 0;
  FigureOptions fig_opts;
  CLI::App* rep = app.add_subcommand(
      "reproduce", "Data series behind one result figure (3 to 12).");
  AddCommon(rep, rep_c);
  rep->add_option("--figure", figure, "Figure number")->required();
  rep->add_option("--nu", fig_opts.nu, "Zipf exponent for figure 7")
      ->capture_default_str();
  rep->add_option("--omega", fig_opts.omega,
                  "Price for the single-MNO figures 5 and 6")
      ->capture_default_str();

  ValidateOptions val_opts;
  CLI::App* val = app.add_subcommand(
      "validate",
      "Analytic models against simulation and grid-search references.\n"
      "Columns: check, analytic, reference, statistic, tolerance, verdict.");
  AddCommon(val, val_c);
  val->add_option("--beta-scale", val_opts.beta_scale,
                  "Scale beta before the analytic coverage (testing aid)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);

    auto emit = [&](const Common& c, const Table& t) {
      Output o(c.out, out);
      WriteCsv(t, o.stream());
    };

    if (*cov) {
      const Scenario s = LoadFor(cov_c);
      emit(cov_c, Sweep(s, CoverageHeader, CoverageRows, *log));
      return kExitOk;
    }
    if (*hit) {
      Scenario s = LoadFor(hit_c);
      if (hit_files) s.catalog.files = *hit_files;
      if (hit_nu) s.catalog.zipf = *hit_nu;
      if (hit_cache) s.catalog.cache = *hit_cache;
      s.catalog.Validate();
      emit(hit_c, Sweep(
                      s, [&](const Scenario&) { return HitHeader(hit_method); },
                      [&](const Scenario& p) { return HitRows(p, hit_method); },
                      *log));
      return kExitOk;
    }
    if (*del) {
      const Scenario s = LoadFor(del_c);
      Notes notes;
      emit(del_c, Sweep(s, DelayHeader,
                        [&](const Scenario& p) { return DelayRows(p, notes); },
                        *log));
      if (!notes.empty()) {
        log->warn("{} point(s) fail the fronthaul condition; first: {}",
                  notes.size(), notes.front());
        if (require_feasible) {
          err << "infeasible: " << notes.front() << "\n";
          return kExitInfeasible;
        }
      }
      return kExitOk;
    }
    if (*mno) {
      Scenario s = LoadFor(mno_c);
      if (mno_omega) s.solver.price = *mno_omega;
      Require(s.solver.price > 0.0, "--omega must be positive");
      Notes notes;
      const Table t =
          Sweep(s, FollowerHeader,
                [&](const Scenario& p) { return FollowerRows(p, notes); }, *log);
      emit(mno_c, t);
      if (!notes.empty()) {
        err << "infeasible: " << notes.front() << "\n";
        return kExitInfeasible;
      }
      return kExitOk;
    }
    if (*sol) {
      const Scenario s = LoadFor(sol_c);
      log->info("config hash {}", ConfigHash(s));
      if (sol_c.format == "csv") {
        emit(sol_c, Sweep(s, SolveHeader, SolveRows, *log));
        return kExitOk;
      }
      nlohmann::ordered_json j;
      if (!s.sweep) {
        j = ToJson(RunPipeline(s));
      } else {
        const SweepSpec& sw = *s.sweep;
        auto reports = OrderedMap(sw.grid.size(), [&](std::size_t i) {
          Scenario p = s;
          SetField(p, sw.variable, sw.grid[i]);
          p.Validate();
          return ToJson(RunPipeline(p));
        });
        j = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < reports.size(); ++i) {
          j.push_back({{"variable", sw.variable},
                       {"value", sw.grid[i]},
                       {"report", std::move(reports[i])}});
        }
      }
      Output o(sol_c.out, out);
      o.stream() << j.dump(2) << "\n";
      return kExitOk;
    }
    if (*rep) {
      const Scenario s = LoadFor(rep_c);
      emit(rep_c, ReproduceFigure(figure, s, fig_opts));
      return kExitOk;
    }
    if (*val) {
      const Scenario s = LoadFor(val_c);
      const std::vector<CheckResult> checks = RunValidation(s, val_opts);
      emit(val_c, ValidationTable(checks));
      int failed = 0;
      for (const CheckResult& c : checks) {
        if (!c.pass) {
          ++failed;
          err << "check failed: " << c.name << " (statistic "
              << FormatDouble(c.statistic) << ", tolerance "
              << FormatDouble(c.tolerance) << ")\n";
        }
      }
      return failed ? kExitValidation : kExitOk;
    }
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace cachemarket::cli
