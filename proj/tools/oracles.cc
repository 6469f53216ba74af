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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cachemarket/error.h"

namespace cachemarket::cli {

FollowerGridResult FollowerGridSearch(const mno::GpConstants& c, double nu,
                                      double omega, int points, int zooms) {
  Require(nu > 1.0 && points >= 2 && zooms >= 0 && omega > 0.0,
          "follower grid search: bad arguments");
  const double k = 1.0 / (nu - 1.0);
  const double lam_floor = std::max(c.a, c.r);
  // Any feasible S exceeds V^k. A box one decade past the dual-feasible
  // ranges (lambda up to A (1 + k) or R, S up to (nu V)^k) holds the optimum.
  double lo_l = std::log(lam_floor);
  double hi_l = std::log(10.0 * std::max(c.a * (1.0 + k), c.r));
  double lo_s = k * std::log(c.v);
  double hi_s = std::log(10.0) + k * std::log(nu * c.v);

  FollowerGridResult best{0.0, 0.0, std::numeric_limits<double>::infinity()};
  for (int level = 0; level <= zooms; ++level) {
    const double dl = (hi_l - lo_l) / (points - 1);
    const double ds = (hi_s - lo_s) / (points - 1);
    double best_ll = 0.0, best_ls = 0.0;
    bool found = false;
    for (int i = 0; i < points; ++i) {
      const double ll = lo_l + i * dl;
      const double lam = std::exp(ll);
      if (lam < c.r) continue;
      for (int j = 0; j < points; ++j) {
        const double ls = lo_s + j * ds;
        const double s = std::exp(ls);
        if (c.a / lam + c.v * std::pow(s, 1.0 - nu) > 1.0) continue;
        const double cost = omega * lam * s;
        if (cost < best.cost) {
          best = {lam, s, cost};
          best_ll = ll;
          best_ls = ls;
          found = true;
        }
      }
    }
    if (!found && level == 0) {
      throw NumericalError("follower grid search found no feasible point", 0.0);
    }
    if (!found) break;
    // The cost is flat along the constraint, so the coarse best can sit many
    // cells from the optimum; keep a wide window.
    constexpr double kWindow = 40.0;
    lo_l = std::max(std::log(lam_floor), best_ll - kWindow * dl);
    hi_l = best_ll + kWindow * dl;
    lo_s = best_ls - kWindow * ds;
    hi_s = best_ls + kWindow * ds;
  }
  return best;
}

LeaderGridResult LeaderGridSearch(const market::DemandSummary& d,
                                  const market::InpParams& inp, double nu,
                                  double step) {
  Require(step > 0.0, "leader grid search: step must be positive");
  const double lo = std::log10(inp.price_min);
  const double hi = std::log10(inp.price_max);
  const long n = static_cast<long>(std::ceil((hi - lo) / step));
  LeaderGridResult best{0.0, std::numeric_limits<double>::infinity()};
  for (long i = 0; i <= n; ++i) {
    const double omega = std::pow(10.0, std::min(hi, lo + i * step));
    const double z =
        std::max(market::LeaderObjective(d, inp, nu, omega), inp.z_floor);
    if (z < best.z) best = {omega, z};
  }
  return best;
}

}  // namespace cachemarket::cli
