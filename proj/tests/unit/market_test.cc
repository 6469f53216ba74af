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

#include "cachemarket/market.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "cachemarket/error.h"

namespace cachemarket::market {
namespace {

struct Fixture {
  std::vector<mno::GpConstants> constants;
  std::vector<mno::GpSolution> solutions;
  DemandSummary demand;
};

Fixture ThreeOperators(double nu, double omega = 10.0) {
  Fixture f;
  caching::CatalogParams cat;
  cat.files = 100000;
  cat.zipf = nu;
  cat.cache = 100;
  delay::QueueParams q;
  q.cv_arrival = 2.0;
  for (double w : {3e8, 5e8, 1e9}) {
    geometry::NetworkParams n;
    n.noise = 1e-18;
    n.path_loss = 5.0;
    n.sinr_threshold = 10.0;
    n.subchannels = 6;
    n.bandwidth = w;
    n.ue_density = 60.0 / (std::numbers::pi * 500.0 * 500.0);
    n.activity = 0.014;
    f.constants.push_back(mno::BuildConstants(n, cat, q, delay::DelayBudget{}));
    f.solutions.push_back(mno::BestResponse(f.constants.back(), nu, omega));
  }
  f.demand = SummarizeDemands(f.constants, f.solutions, nu);
  return f;
}

InpParams Inp(double theta = 10.0, double p_c = 1.0) {
  InpParams p;
  p.power_price = theta;
  p.circuit_power = p_c;
  p.mnos = 3;
  p.bs_power = 1.0;
  return p;
}

// max(Q1, epsilon) on a 1e-3-decade grid of the price box.
double GridMinimum(const DemandSummary& d, const InpParams& inp, double nu) {
  double best = INFINITY;
  for (int i = 0; i <= 12000; ++i) {
    const double omega = std::pow(10.0, -6.0 + i * 1e-3);
    best = std::min(best, std::max(LeaderObjective(d, inp, nu, omega),
                                   inp.z_floor));
  }
  return best;
}

TEST(SolveEquilibrium, ThreeOperatorFixture) {
  const Fixture f = ThreeOperators(2.0);
  const MarketOutcome m = SolveEquilibrium(f.demand, Inp(), 2.0);
  EXPECT_EQ(m.iterations, 7);
  EXPECT_EQ(m.omega_star, 1e6);
  EXPECT_NEAR(m.z_star, 4.938806003671375e-07, 1e-12 * 4.94e-7);
  EXPECT_TRUE(m.price_at_bound);
  EXPECT_FALSE(m.z_floor_active);
  EXPECT_EQ(f.demand.argmax, 2u);
}

TEST(SolveEquilibrium, MonotoneAndFeasibleIterates) {
  for (double nu : {1.5, 2.0, 2.5}) {
    const Fixture f = ThreeOperators(nu);
    const MarketOutcome m = SolveEquilibrium(f.demand, Inp(), nu);
    ASSERT_GE(m.history.size(), 2u);
    for (std::size_t i = 1; i < m.history.size(); ++i) {
      EXPECT_LE(m.history[i].z, m.history[i - 1].z * (1.0 + 1e-12));
      EXPECT_LE(ConstraintResidual(f.demand, Inp(), nu, m.history[i].z,
                                   m.history[i].omega),
                1.0 + 1e-9);
    }
    EXPECT_LE(m.iterations, 20);
  }
}

TEST(SolveEquilibrium, AgreesWithGridMinimum) {
  for (double nu : {2.0, 2.5, 3.0}) {
    const Fixture f = ThreeOperators(nu);
    const MarketOutcome m = SolveEquilibrium(f.demand, Inp(), nu);
    const double grid = GridMinimum(f.demand, Inp(), nu);
    EXPECT_LE(std::abs(m.z_star - grid), 0.005 * grid) << nu;
  }
}

// Below nu = 2, Q1 has a local minimum at the top of the price box and runs
// negative as omega -> 0. The iteration is local: it settles in the basin of
// its starting price.
TEST(SolveEquilibrium, FollowsTheStartingBasinBelowNuTwo) {
  const double nu = 1.5;
  const Fixture f = ThreeOperators(nu);
  const double grid = GridMinimum(f.demand, Inp(), nu);
  const MarketOutcome high = SolveEquilibrium(f.demand, Inp(), nu);
  EXPECT_EQ(high.omega_star, Inp().price_max);
  EXPECT_FALSE(high.z_floor_active);
  EXPECT_LE(LeaderObjective(f.demand, Inp(), nu, high.omega_star),
            LeaderObjective(f.demand, Inp(), nu, high.omega_star / 1.01));
  EXPECT_GT(high.z_star, grid);
  const MarketOutcome low =
      SolveEquilibrium(f.demand, Inp(), nu, 1e-9, 200, 1e-5);
  EXPECT_TRUE(low.z_floor_active);
  EXPECT_EQ(low.omega_star, Inp().price_min);
  EXPECT_LE(std::abs(low.z_star - grid), 0.005 * grid);
}

TEST(SolveEquilibrium, PowerPriceRaisesZ) {
  const Fixture f = ThreeOperators(2.0);
  const double z10 = SolveEquilibrium(f.demand, Inp(10.0), 2.0).z_star;
  const double z20 = SolveEquilibrium(f.demand, Inp(20.0), 2.0).z_star;
  const double z20pc2 = SolveEquilibrium(f.demand, Inp(20.0, 2.0), 2.0).z_star;
  EXPECT_GT(z20, z10);
  EXPECT_GT(z20pc2, z20);
  EXPECT_NEAR(z20, 1.14555e-6, 1e-10);
}

TEST(SolveEquilibrium, FloorFlaggedWhenQ1GoesNegative) {
  const Fixture f = ThreeOperators(3.0);
  const MarketOutcome m = SolveEquilibrium(f.demand, Inp(), 3.0);
  EXPECT_TRUE(m.z_floor_active);
  EXPECT_EQ(m.z_star, Inp().z_floor);
}

TEST(SolveEquilibrium, OutcomeIdentities) {
  const Fixture f = ThreeOperators(2.0);
  const InpParams inp = Inp();
  const MarketOutcome m = SolveEquilibrium(f.demand, inp, 2.0);
  const double w = m.omega_star;
  EXPECT_NEAR(m.revenue, f.demand.ut_max / w, 1e-12 * m.revenue);
  EXPECT_NEAR(m.cost, f.demand.t_const() * inp.areal_cost() / w,
              1e-12 * m.cost);
  EXPECT_DOUBLE_EQ(m.profit, m.revenue - m.cost);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(m.bs_density[k], f.demand.mnos[k].t / w, 1e-15);
    EXPECT_NEAR(m.cache_size[k], f.demand.mnos[k].u / w,
                1e-12 * m.cache_size[k]);
    EXPECT_NEAR(m.demands[k], m.bs_density[k] * m.cache_size[k],
                1e-12 * m.demands[k]);
  }
}

TEST(SolveEquilibrium, ThrowsWithHistoryWhenOutOfIterations) {
  const Fixture f = ThreeOperators(2.0);
  try {
    SolveEquilibrium(f.demand, Inp(), 2.0, 1e-9, 2);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_FALSE(e.history().empty());
  }
}

TEST(Condense, ExactAtTheExpansionPointAndBelowElsewhere) {
  const Fixture f = ThreeOperators(2.5);
  const double nu = 2.5, k = 1.0 / (nu - 1.0);
  const double ut = f.demand.ut_max;
  const double z0 = 0.3, w0 = 2.0;
  const Condensation c = Condense(f.demand, nu, z0, w0);
  const auto posy = [&](double z, double w) { return z + ut * std::pow(w, -k); };
  EXPECT_NEAR(c.Eval(z0, w0), posy(z0, w0), 1e-12 * posy(z0, w0));
  for (double z : {0.01, 0.3, 4.0}) {
    for (double w : {0.1, 2.0, 50.0}) {
      EXPECT_LE(c.Eval(z, w), posy(z, w) * (1.0 + 1e-12));
    }
  }
  EXPECT_GT(c.alpha_bar, 0.0);
  EXPECT_LE(c.alpha_bar, 1.0);
}

TEST(DemandOf, DoesNotDependOnTheFollowersPrice) {
  const Fixture a = ThreeOperators(2.0, 1.0);
  const Fixture b = ThreeOperators(2.0, 37.0);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(a.demand.mnos[k].t, b.demand.mnos[k].t,
                1e-12 * a.demand.mnos[k].t);
    EXPECT_NEAR(a.demand.mnos[k].u, b.demand.mnos[k].u,
                1e-12 * a.demand.mnos[k].u);
  }
}

TEST(SummarizeDemands, TiesGoToTheLowestIndex) {
  const Fixture f = ThreeOperators(2.0);
  const std::vector<mno::GpConstants> c{f.constants[2], f.constants[2]};
  const std::vector<mno::GpSolution> s{f.solutions[2], f.solutions[2]};
  EXPECT_EQ(SummarizeDemands(c, s, 2.0).argmax, 0u);
  EXPECT_THROW(SummarizeDemands({}, {}, 2.0), InvalidArgument);
}

TEST(InpParams, Validation) {
  InpParams p = Inp();
  p.trust_region = 1.0;
  EXPECT_THROW(p.Validate(), InvalidArgument);
  p = Inp();
  p.price_min = 10.0;
  p.price_max = 1.0;
  EXPECT_THROW(p.Validate(), InvalidArgument);
  p = Inp();
  p.mnos = 0;
  EXPECT_THROW(p.Validate(), InvalidArgument);
  EXPECT_DOUBLE_EQ(Inp().areal_cost(), 10.0 * (3.0 + 1.0));
}

}  // namespace
}  // namespace cachemarket::market
