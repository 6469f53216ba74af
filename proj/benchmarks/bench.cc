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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "cachemarket/caching.h"
#include "cachemarket/delay.h"
#include "cachemarket/geometry.h"
#include "cachemarket/market.h"
#include "cachemarket/mno_solver.h"
#include "cachemarket/montecarlo.h"
#include "cachemarket/sharing.h"

namespace cachemarket {
namespace {

geometry::NetworkParams Network(double bandwidth = 1e9) {
  geometry::NetworkParams n;
  n.noise = 1e-18;
  n.path_loss = 5.0;
  n.sinr_threshold = 10.0;
  n.subchannels = 6;
  n.bandwidth = bandwidth;
  n.ue_density = 60.0 / (std::numbers::pi * 500.0 * 500.0);
  n.activity = 0.014;
  return n;
}

caching::CatalogParams Catalog(double nu) {
  caching::CatalogParams c;
  c.files = 100000;
  c.zipf = nu;
  c.cache = 100;
  return c;
}

delay::QueueParams Queue() {
  delay::QueueParams q;
  q.cv_arrival = 2.0;
  return q;
}

void BM_ComputeBeta(benchmark::State& state) {
  geometry::NetworkParams n = Network();
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometry::ComputeBeta(n));
    n.sinr_threshold = n.sinr_threshold == 10.0 ? 10.5 : 10.0;
  }
}
BENCHMARK(BM_ComputeBeta);

void BM_CoverageExact(benchmark::State& state) {
  const geometry::NetworkParams n = Network();
  const double beta = geometry::ComputeBeta(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometry::CoverageExact(n, beta).p_c);
  }
}
BENCHMARK(BM_CoverageExact);

void BM_HarmonicExact(benchmark::State& state) {
  const std::int64_t f = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(caching::HarmonicExact(f, 0.8));
  }
  state.SetComplexityN(f);
}
BENCHMARK(BM_HarmonicExact)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_BestResponse(benchmark::State& state) {
  const mno::GpConstants c =
      mno::BuildConstants(Network(3e8), Catalog(2.0), Queue(), delay::DelayBudget{});
  double omega = 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mno::BestResponse(c, 2.0, omega).q_star);
    omega = omega == 10.0 ? 11.0 : 10.0;
  }
}
BENCHMARK(BM_BestResponse);

void BM_SolveEquilibrium(benchmark::State& state) {
  std::vector<mno::GpConstants> consts;
  std::vector<mno::GpSolution> sols;
  for (double w : {3e8, 5e8, 1e9}) {
    consts.push_back(mno::BuildConstants(Network(w), Catalog(2.0), Queue(),
                                         delay::DelayBudget{}));
    sols.push_back(mno::BestResponse(consts.back(), 2.0, 10.0));
  }
  const market::DemandSummary d = market::SummarizeDemands(consts, sols, 2.0);
  market::InpParams inp;
  inp.mnos = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(market::SolveEquilibrium(d, inp, 2.0).z_star);
  }
}
BENCHMARK(BM_SolveEquilibrium);

sharing::RentProblem RandomRent(std::size_t k) {
  std::mt19937_64 rng(k);
  std::lognormal_distribution<double> dist(0.0, 1.0);
  sharing::RentProblem p;
  p.price = 1.0;
  for (std::size_t i = 0; i < k; ++i) p.demands.push_back(dist(rng));
  return p;
}

void BM_AirportShare(benchmark::State& state) {
  const sharing::RentProblem p = RandomRent(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sharing::AirportShare(p).total);
  }
}
BENCHMARK(BM_AirportShare)->DenseRange(2, 8, 2)->Arg(1000);

void BM_ShapleyExact(benchmark::State& state) {
  const sharing::RentProblem p = RandomRent(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sharing::ShapleyExact(p).total);
  }
}
BENCHMARK(BM_ShapleyExact)->DenseRange(2, 8, 2);

void BM_SimulateCoverage(benchmark::State& state) {
  const geometry::NetworkParams n = Network();
  montecarlo::SimConfig sim;
  sim.trials = state.range(0);
  sim.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(montecarlo::SimulateCoverage(n, sim).mean);
  }
  state.SetItemsProcessed(state.iterations() * sim.trials);
}
BENCHMARK(BM_SimulateCoverage)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cachemarket

BENCHMARK_MAIN();
