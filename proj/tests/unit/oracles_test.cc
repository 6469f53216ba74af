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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cachemarket/error.h"

namespace cachemarket::cli {
namespace {

TEST(FollowerGridSearch, AgreesWithClosedForm) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const double nu = 1.2 + 3.8 * u(rng);
    mno::GpConstants c;
    c.a = std::pow(10.0, -4.0 + 4.0 * u(rng));
    c.v = std::pow(10.0, -1.0 + 4.0 * u(rng));
    c.r = std::pow(10.0, -4.0 + 4.0 * u(rng));
    const mno::GpSolution s = mno::BestResponse(c, nu, 3.0);
    const FollowerGridResult g = FollowerGridSearch(c, nu, 3.0);
    // A grid point is feasible, so it can never beat the optimum.
    EXPECT_GE(g.cost, s.q_star * (1.0 - 1e-12));
    EXPECT_LT((g.cost - s.q_star) / s.q_star, 0.01);
    EXPECT_LE(c.a / g.lambda + c.v * std::pow(g.s, 1.0 - nu), 1.0);
    EXPECT_GE(g.lambda, c.r);
  }
}

TEST(FollowerGridSearch, RejectsBadArguments) {
  mno::GpConstants c;
  c.a = c.v = c.r = 1.0;
  EXPECT_THROW(FollowerGridSearch(c, 0.9, 1.0), InvalidArgument);
  EXPECT_THROW(FollowerGridSearch(c, 2.0, 1.0, 1), InvalidArgument);
}

TEST(LeaderGridSearch, MonotoneObjectiveSitsOnTheBox) {
  // nu = 2: Q1 = (T pbar - U T) / omega, decreasing when T pbar > U T.
  market::DemandSummary d;
  d.mnos = {{2.0, 0.5}};
  d.ut_max = 1.0;
  market::InpParams inp;
  inp.power_price = 1.0;
  inp.circuit_power = 0.0;
  inp.mnos = 1;
  const LeaderGridResult g = LeaderGridSearch(d, inp, 2.0);
  EXPECT_NEAR(g.omega, 1e6, 1e-6);
  EXPECT_NEAR(g.z, (2.0 - 1.0) / 1e6, 1e-18);
  inp.power_price = 0.25;  // Q1 < 0 everywhere: the floor wins
  EXPECT_EQ(LeaderGridSearch(d, inp, 2.0).z, inp.z_floor);
}

}  // namespace
}  // namespace cachemarket::cli
