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

// Brute-force references for the two optimizers. Slow, used by `validate`
// and the tests.

#ifndef CACHEMARKET_TOOLS_ORACLES_H_
#define CACHEMARKET_TOOLS_ORACLES_H_

#include "cachemarket/market.h"
#include "cachemarket/mno_solver.h"

namespace cachemarket::cli {

struct FollowerGridResult {
  double lambda = 0.0;
  double s = 0.0;
  double cost = 0.0;  // omega lambda S
};

// Log grid over (lambda, S) keeping only feasible points, then `zooms`
// refinements around the best cell.
FollowerGridResult FollowerGridSearch(const mno::GpConstants& c, double nu,
                                      double omega, int points = 400,
                                      int zooms = 2);

struct LeaderGridResult {
  double omega = 0.0;
  double z = 0.0;
};

// max(Q1(omega), epsilon) minimized over a log grid of the price box with
// `step` decades between points. The smallest price wins ties.
LeaderGridResult LeaderGridSearch(const market::DemandSummary& d,
                                  const market::InpParams& inp, double nu,
                                  double step = 1e-3);

}  // namespace cachemarket::cli

#endif  // CACHEMARKET_TOOLS_ORACLES_H_
