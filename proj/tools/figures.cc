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

#include "figures.h"

#include <cmath>
#include <string>
#include <utility>

#include "cachemarket/caching.h"
#include "cachemarket/error.h"
#include "cachemarket/market.h"
#include "parallel.h"
#include "pipeline.h"

namespace cachemarket::cli {
namespace {

constexpr double kHitZipf[] = {0.5, 1.5, 2.5};
constexpr std::int64_t kHitFiles = 1000;

struct Bandwidth {
  const char* tag;
  double hz;
};
constexpr Bandwidth kBandwidths[] = {
    {"W1e9", 1e9}, {"W9e8", 9e8}, {"W6e8", 6e8}, {"W3e8", 3e8}};

struct PowerCase {
  const char* tag;
  double theta;
  double p_c;
};
constexpr PowerCase kPowerCases[] = {{"theta10_pc1", 10.0, 1.0},
                                     {"theta10_pc2", 10.0, 2.0},
                                     {"theta20_pc1", 20.0, 1.0},
                                     {"theta20_pc2", 20.0, 2.0}};

std::string NuTag(double nu) {
  return "nu" + FormatDouble(nu);
}

Table HitFigure(const Scenario& base, bool error_only) {
  Table t;
  t.header = {"S"};
  for (double nu : kHitZipf) {
    if (error_only) {
      t.header.push_back("rel_error_" + NuTag(nu));
    } else {
      t.header.push_back("exact_" + NuTag(nu));
      t.header.push_back("asymptotic_" + NuTag(nu));
    }
  }
  for (std::int64_t s = 1; s <= kHitFiles; ++s) {
    Row row{Cell(s)};
    for (double nu : kHitZipf) {
      caching::CatalogParams cat = base.catalog;
      cat.files = kHitFiles;
      cat.zipf = nu;
      cat.cache = s;
      const double exact = caching::HitProbExact(cat);
      const double asym = caching::HitProbAsymptotic(cat);
      if (error_only) {
        row.push_back(Cell(std::abs(asym - exact) / exact));
      } else {
        row.push_back(Cell(exact));
        row.push_back(Cell(asym));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

// One MNO with bandwidth W on the shared network, at price omega.
MnoResult LoneMno(const Scenario& base, double nu, double w, double omega) {
  Scenario s = base;
  s.catalog.zipf = nu;
  s.mnos = {MnoSpec{"MNO", w, std::nullopt, std::nullopt, std::nullopt}};
  return RunFollowers(s, omega).mnos.front();
}

Table FollowerFigure(const Scenario& base, double omega, bool cache) {
  Table t;
  t.header = {"nu"};
  for (const char* what : cache ? std::vector<const char*>{"S_star", "S_price",
                                                           "ue_per_bs"}
                                : std::vector<const char*>{"lambda_star",
                                                           "lambda_price"}) {
    for (const Bandwidth& b : kBandwidths) {
      t.header.push_back(std::string(what) + "_" + b.tag);
    }
  }
  const std::vector<double> grid = ZipfGrid();
  t.rows = OrderedMap(grid.size(), [&](std::size_t i) {
    const double nu = grid[i];
    const double k = 1.0 / (nu - 1.0);
    std::vector<MnoResult> mnos;
    for (const Bandwidth& b : kBandwidths) {
      mnos.push_back(LoneMno(base, nu, b.hz, omega));
    }
    Row row{Cell(nu)};
    if (!cache) {
      for (const MnoResult& m : mnos) row.push_back(Cell(m.solution.lambda_star));
      for (const MnoResult& m : mnos) {
        const market::MnoDemand d = market::DemandOf(m.constants, m.solution, nu);
        row.push_back(Cell(d.t / omega));
      }
    } else {
      for (const MnoResult& m : mnos) row.push_back(Cell(m.solution.s_star));
      for (const MnoResult& m : mnos) {
        const market::MnoDemand d = market::DemandOf(m.constants, m.solution, nu);
        row.push_back(Cell(d.u * std::pow(omega, -k)));
      }
      for (const MnoResult& m : mnos) {
        row.push_back(Cell(m.network.ue_density / m.solution.lambda_star));
      }
    }
    return row;
  });
  return t;
}

Scenario WithPower(const Scenario& base, const PowerCase& pc, double nu) {
  Scenario s = base;
  s.catalog.zipf = nu;
  s.inp.power_price = pc.theta;
  s.inp.circuit_power = pc.p_c;
  return s;
}

Table ConvergenceFigure(const Scenario& base, double nu) {
  Table t;
  t.header = {"theta", "p_c", "iteration", "z", "omega"};
  for (const PowerCase& pc : kPowerCases) {
    const RunReport r = RunPipeline(WithPower(base, pc, nu));
    for (const market::SgaState& h : r.market.history) {
      t.rows.push_back({Cell(pc.theta), Cell(pc.p_c), Cell(h.iteration),
                        Cell(h.z), Cell(h.omega)});
    }
  }
  return t;
}

Table EquilibriumFigure(const Scenario& base, int id) {
  Table t;
  t.header = {"nu"};
  switch (id) {
    case 8:
      for (const PowerCase& pc : kPowerCases) {
        t.header.push_back(std::string("omega_star_") + pc.tag);
        t.header.push_back(std::string("z_star_") + pc.tag);
      }
      break;
    case 9:
    case 10:
      for (const MnoSpec& m : base.mnos) {
        t.header.push_back((id == 9 ? "lambda_" : "S_") + m.name);
      }
      break;
    case 11:
      t.header.push_back("omega_star");
      t.header.push_back("total_rent");
      for (const MnoSpec& m : base.mnos) t.header.push_back("psi_" + m.name);
      break;
    case 12:
      for (const PowerCase& pc : kPowerCases) {
        t.header.push_back(std::string("profit_") + pc.tag);
      }
      break;
  }
  t.header.push_back("followers_feasible");
  const std::vector<double> grid = ZipfGrid();
  t.rows = OrderedMap(grid.size(), [&](std::size_t i) {
    const double nu = grid[i];
    Row row{Cell(nu)};
    if (id == 8 || id == 12) {
      bool feasible = true;
      for (const PowerCase& pc : kPowerCases) {
        const RunReport r = RunPipeline(WithPower(base, pc, nu), Gate::kReport);
        if (id == 8) {
          row.push_back(Cell(r.market.omega_star));
          row.push_back(Cell(r.market.z_star));
        } else {
          row.push_back(Cell(r.market.profit));
        }
        feasible = feasible && AllFollowersFeasible(r.followers);
      }
      row.push_back(Cell(feasible));
      return row;
    }
    Scenario s = base;
    s.catalog.zipf = nu;
    const RunReport r = RunPipeline(s, Gate::kReport);
    if (id == 9) {
      for (double v : r.market.bs_density) row.push_back(Cell(v));
    } else if (id == 10) {
      for (double v : r.market.cache_size) row.push_back(Cell(v));
    } else {
      row.push_back(Cell(r.market.omega_star));
      row.push_back(Cell(r.shares.total));
      for (double v : r.shares.shares) row.push_back(Cell(v));
    }
    row.push_back(Cell(AllFollowersFeasible(r.followers)));
    return row;
  });
  return t;
}

}  // namespace

std::vector<double> ZipfGrid() {
  std::vector<double> g;
  for (int i = 11; i <= 100; ++i) g.push_back(i / 10.0);
  return g;
}

Table ReproduceFigure(int id, const Scenario& base, const FigureOptions& opts) {
  switch (id) {
    case 3:
      return HitFigure(base, false);
    case 4:
      return HitFigure(base, true);
    case 5:
      return FollowerFigure(base, opts.omega, false);
    case 6:
      return FollowerFigure(base, opts.omega, true);
    case 7:
      return ConvergenceFigure(base, opts.nu);
    case 8:
    case 9:
    case 10:
    case 11:
    case 12:
      return EquilibriumFigure(base, id);
  }
  throw InvalidArgument("unknown figure " + std::to_string(id) +
                        "; expected 3 to 12");
}

}  // namespace cachemarket::cli
