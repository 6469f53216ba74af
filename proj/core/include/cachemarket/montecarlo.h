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

// Stochastic oracles for the analytic models: SINR coverage on a simulated
// Poisson deployment, Zipf request sampling, and a FCFS multi-server queue.
// Every estimate is bit-reproducible from the seed.

#ifndef CACHEMARKET_MONTECARLO_H_
#define CACHEMARKET_MONTECARLO_H_

#include <cstdint>
#include <random>
#include <vector>

#include "cachemarket/caching.h"
#include "cachemarket/delay.h"
#include "cachemarket/geometry.h"

namespace cachemarket::montecarlo {

struct SimConfig {
  std::uint64_t seed = 42;
  std::int64_t trials = 100000;  // trials, requests or measured departures
  double region_radius = 0.0;    // PPP disc radius, m; 0 picks a default
  std::int64_t warmup = 10000;   // discarded departures (queue)
  int batch_count = 20;
  int threads = 0;               // 0 uses the hardware concurrency

  void Validate() const;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  double half_width = 0.0;  // 99% confidence half-width
  std::int64_t samples = 0;
  std::vector<double> batch_means;

  double lower() const { return mean - half_width; }
  double upper() const { return mean + half_width; }
};

struct CoverageEstimate : Estimate {
  double radius = 0.0;
  std::int64_t empty_windows = 0;  // resampled realizations with no BS
};

// Two-sided 99% standard normal quantile.
constexpr double kZ99 = 2.5758293035489004;

// splitmix64 of the master seed and stream index.
std::uint64_t SubstreamSeed(std::uint64_t master, std::uint64_t stream);

// Disc radius that leaves the truncated interference below 0.1% of its mean:
// the tail beyond R_w relative to that beyond the nearest-neighbour distance
// r_nn = 1/(2 sqrt(lambda)) scales as (r_nn/R_w)^(alpha-2), so
// R_w = clamp(1000^(1/(alpha-2)), 20, 200) r_nn. The cap keeps alpha near 2
// affordable at the cost of a larger truncation there.
double DefaultRegionRadius(const geometry::NetworkParams& net);

// Number of PPP points of the given density in a disc.
std::int64_t SamplePppCount(std::mt19937_64& rng, double density,
                            double radius);

// Per trial: PPP of BSs, typical UE at the origin served by the nearest BS,
// co-channel interferers an independent 1/L thinning, Rayleigh fading.
CoverageEstimate SimulateCoverage(const geometry::NetworkParams& net,
                                  const SimConfig& sim);

// Fraction of Zipf requests falling on the S most popular files.
Estimate SimulateHitRate(const caching::CatalogParams& cat,
                         const SimConfig& sim);

// Inter-event law matching a mean and coefficient of variation: exponential
// at c = 1, balanced-means two-phase hyperexponential above, mixed Erlang
// below, deterministic at c = 0.
class RenewalSampler {
 public:
  RenewalSampler(double mean, double cv);
  double operator()(std::mt19937_64& rng) const;

 private:
  enum class Kind { kDeterministic, kExponential, kHyper, kErlangMix };
  Kind kind_;
  double mean_;
  double p_ = 0.0;
  double rate1_ = 0.0;
  double rate2_ = 0.0;
  int phases_ = 0;
};

// Mean sojourn of a FCFS G/G/m queue by batch means over `trials` departures
// after `warmup`. Throws InvalidArgument for m > 8 or utilization >= 1, and
// NumericalError if the waiting time diverges.
Estimate SimulateQueue(const delay::QueueParams& queue, const SimConfig& sim);

}  // namespace cachemarket::montecarlo

#endif  // CACHEMARKET_MONTECARLO_H_
