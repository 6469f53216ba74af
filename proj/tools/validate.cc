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

#include "validate.h"

#include <cmath>

#include "cachemarket/caching.h"
#include "cachemarket/delay.h"
#include "cachemarket/geometry.h"
#include "cachemarket/montecarlo.h"
#include "oracles.h"
#include "pipeline.h"

namespace cachemarket::cli {
namespace {

CheckResult WithinInterval(std::string name, double analytic,
                           const montecarlo::Estimate& e) {
  CheckResult c{std::move(name), analytic, e.mean};
  c.statistic = std::abs(e.mean - analytic);
  c.tolerance = e.half_width;
  c.pass = c.statistic <= c.tolerance;
  return c;
}

CheckResult Relative(std::string name, double analytic, double reference,
                     double tol) {
  CheckResult c{std::move(name), analytic, reference};
  c.statistic = std::abs(analytic - reference) / std::abs(reference);
  c.tolerance = tol;
  c.pass = c.statistic <= tol;
  return c;
}

CheckResult Skipped(std::string name) {
  CheckResult c{std::move(name)};
  c.skipped = true;
  c.pass = true;
  return c;
}

}  // namespace

std::vector<CheckResult> RunValidation(const Scenario& s,
                                       const ValidateOptions& opts) {
  s.Validate();
  std::vector<CheckResult> out;

  const double beta = geometry::ComputeBeta(s.network) * opts.beta_scale;
  out.push_back(WithinInterval(
      "coverage", geometry::CoverageExact(s.network, beta).p_c,
      montecarlo::SimulateCoverage(s.network, s.sim)));

  out.push_back(WithinInterval("hit_rate", caching::HitProbExact(s.catalog),
                               montecarlo::SimulateHitRate(s.catalog, s.sim)));

  out.push_back(Relative("queue", delay::BackhaulDelay(s.queue),
                         montecarlo::SimulateQueue(s.queue, s.sim).mean, 0.05));

  const double nu = s.catalog.zipf;
  const FollowerStage followers = RunFollowers(s, s.solver.price);
  for (const MnoResult& m : followers.mnos) {
    if (nu < 1.0) {
      out.push_back(Skipped("gp_grid:" + m.name));
      out.push_back(Skipped("gp_gap:" + m.name));
      continue;
    }
    const FollowerGridResult grid =
        FollowerGridSearch(m.constants, nu, s.solver.price);
    out.push_back(Relative("gp_grid:" + m.name, m.solution.q_star, grid.cost,
                           0.01));
    CheckResult gap{"gp_gap:" + m.name, m.solution.q_star,
                    s.solver.price * m.solution.cache_intensity()};
    gap.statistic = m.solution.diagnostics.duality_gap;
    gap.tolerance = 1e-9;
    gap.pass = gap.statistic < gap.tolerance;
    out.push_back(gap);
  }
  if (nu < 1.0) {
    out.push_back(Skipped("sga_grid"));
  } else {
    const LeaderStage leader = RunLeader(s, followers);
    const LeaderGridResult grid =
        LeaderGridSearch(leader.demand, s.Inp(), nu);
    out.push_back(Relative("sga_grid", leader.market.z_star, grid.z, 0.005));
  }
  return out;
}

Table ValidationTable(const std::vector<CheckResult>& checks) {
  Table t;
  t.header = {"check",     "analytic",  "reference",
              "statistic", "tolerance", "verdict"};
  for (const CheckResult& c : checks) {
    if (c.skipped) {
      t.rows.push_back({c.name, "", "", "", "", "skipped"});
      continue;
    }
    t.rows.push_back({c.name, Cell(c.analytic), Cell(c.reference),
                      Cell(c.statistic), Cell(c.tolerance),
                      c.pass ? "pass" : "fail"});
  }
  return t;
}

}  // namespace cachemarket::cli
