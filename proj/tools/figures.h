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

// Data behind the published result figures, on the baseline scenario unless
// a config says otherwise.

#ifndef CACHEMARKET_TOOLS_FIGURES_H_
#define CACHEMARKET_TOOLS_FIGURES_H_

#include <vector>

#include "scenario.h"
#include "table.h"

namespace cachemarket::cli {

struct FigureOptions {
  double nu = 2.0;      // Zipf exponent for figure 7
  double omega = 10.0;  // price offered to a lone MNO in figures 5 and 6
};

constexpr int kFirstFigure = 3;
constexpr int kLastFigure = 12;

// 1.1, 1.2, ..., 10.
std::vector<double> ZipfGrid();

// Figures:
//   3  S, exact and asymptotic hit probability for nu = 0.5, 1.5, 2.5, F = 1e3
//   4  S, relative error of the asymptotic form, same setup
//   5  nu, lambda* of a lone MNO for W = 1e9, 9e8, 6e8, 3e8, and the
//      price-response density lambda = T/omega the leader sees
//   6  nu, S* for the same MNOs, the price-response cache and xi/lambda*
//   7  iteration, z and omega of the price iteration for theta in {10, 20}
//      and p_c in {1, 2}
//   8  nu, omega* and z* for the same four (theta, p_c) pairs
//   9  nu, lambda_k at equilibrium
//  10  nu, S_k at equilibrium
//  11  nu, total rent and the Shapley shares psi_k
//  12  nu, InP profit for the four (theta, p_c) pairs
// Figures 8 to 12 keep points where a follower sits on the fronthaul
// boundary and flag them in a followers_feasible column.
// Throws InvalidArgument for any other id.
Table ReproduceFigure(int id, const Scenario& base, const FigureOptions& opts);

}  // namespace cachemarket::cli

#endif  // CACHEMARKET_TOOLS_FIGURES_H_
