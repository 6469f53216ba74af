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

#include "cachemarket/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "cachemarket/error.h"

namespace cachemarket::montecarlo {
namespace {

// Caps the window at 200 nearest-neighbour distances (about 31k expected
// points) for path-loss exponents close to 2.
constexpr double kMaxRadiusFactor = 200.0;
// A waiting time this many service times long means the queue is diverging.
constexpr double kDivergenceFactor = 1e6;

// Runs fn(b) for b in [0, batches) on a small pool. Each batch writes only its
// own slot, so the reduction order is fixed.
void ForEachBatch(int batches, int threads,
                  const std::function<void(int)>& fn) {
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, batches);
  if (workers == 1) {
    for (int b = 0; b < batches; ++b) fn(b);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int b = next++; b < batches; b = next++) {
        try {
          fn(b);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::int64_t BatchBegin(std::int64_t total, int batches, int b) {
  return total * b / batches;
}

void FillBinomial(Estimate& e, std::int64_t successes, std::int64_t n) {
  e.samples = n;
  e.mean = static_cast<double>(successes) / static_cast<double>(n);
  e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(n));
  e.half_width = kZ99 * e.std_error;
}

}  // namespace

void SimConfig::Validate() const {
  Require(trials >= 1, "trials must be at least 1");
  Require(warmup >= 0, "warmup must be >= 0");
  Require(batch_count >= 2, "at least two batches are required");
  Require(batch_count <= trials, "more batches than trials");
  Require(region_radius >= 0.0, "region radius must be >= 0");
  Require(threads >= 0, "thread count must be >= 0");
}

std::uint64_t SubstreamSeed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double DefaultRegionRadius(const geometry::NetworkParams& net) {
  net.Validate();
  const double nearest = 1.0 / (2.0 * std::sqrt(net.bs_density));
  const double factor = std::clamp(
      std::pow(1000.0, 1.0 / (net.path_loss - 2.0)), 20.0, kMaxRadiusFactor);
  return factor * nearest;
}

std::int64_t SamplePppCount(std::mt19937_64& rng, double density,
                            double radius) {
  std::poisson_distribution<std::int64_t> count(density * std::numbers::pi *
                                                radius * radius);
  return count(rng);
}

CoverageEstimate SimulateCoverage(const geometry::NetworkParams& net,
                                  const SimConfig& sim) {
  net.Validate();
  sim.Validate();
  const double radius =
      sim.region_radius > 0.0 ? sim.region_radius : DefaultRegionRadius(net);
  const int batches = sim.batch_count;
  std::vector<std::int64_t> covered(batches, 0);
  std::vector<std::int64_t> empty(batches, 0);
  const double keep = 1.0 / net.subchannels;
  ForEachBatch(batches, sim.threads, [&](int b) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::exponential_distribution<double> fading(1.0);
    std::vector<double> dist;
    const std::int64_t end = BatchBegin(sim.trials, batches, b + 1);
    for (std::int64_t t = BatchBegin(sim.trials, batches, b); t < end; ++t) {
      std::mt19937_64 rng(SubstreamSeed(sim.seed, static_cast<std::uint64_t>(t)));
      std::int64_t n = SamplePppCount(rng, net.bs_density, radius);
      while (n == 0) {
        ++empty[b];
        n = SamplePppCount(rng, net.bs_density, radius);
      }
      dist.resize(static_cast<std::size_t>(n));
      for (double& r : dist) r = radius * std::sqrt(unit(rng));
      const auto serving = std::min_element(dist.begin(), dist.end());
      const double signal =
          fading(rng) * std::pow(*serving, -net.path_loss) * net.power;
      double interference = 0.0;
      for (auto it = dist.begin(); it != dist.end(); ++it) {
        if (it == serving) continue;
        if (unit(rng) >= keep) continue;
        interference += fading(rng) * std::pow(*it, -net.path_loss) * net.power;
      }
      if (signal > net.sinr_threshold * (interference + net.noise)) {
        ++covered[b];
      }
    }
  });
  CoverageEstimate e;
  e.radius = radius;
  std::int64_t hits = 0;
  for (int b = 0; b < batches; ++b) {
    const double size = static_cast<double>(BatchBegin(sim.trials, batches, b + 1) -
                                            BatchBegin(sim.trials, batches, b));
    e.batch_means.push_back(static_cast<double>(covered[b]) / size);
    hits += covered[b];
    e.empty_windows += empty[b];
  }
  FillBinomial(e, hits, sim.trials);
  return e;
}

Estimate SimulateHitRate(const caching::CatalogParams& cat,
                         const SimConfig& sim) {
  cat.Validate();
  sim.Validate();
  std::vector<double> cumulative(static_cast<std::size_t>(cat.files));
  double acc = 0.0;
  for (std::int64_t k = 1; k <= cat.files; ++k) {
    acc += std::pow(static_cast<double>(k), -cat.zipf);
    cumulative[static_cast<std::size_t>(k - 1)] = acc;
  }
  const double total = cumulative.back();
  const int batches = sim.batch_count;
  std::vector<std::int64_t> hits(batches, 0);
  ForEachBatch(batches, sim.threads, [&](int b) {
    std::mt19937_64 rng(SubstreamSeed(sim.seed, static_cast<std::uint64_t>(b)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::int64_t n = BatchBegin(sim.trials, batches, b + 1) -
                           BatchBegin(sim.trials, batches, b);
    for (std::int64_t i = 0; i < n; ++i) {
      const double u = unit(rng) * total;
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      const std::int64_t rank =
          std::min<std::int64_t>(it - cumulative.begin(), cat.files - 1) + 1;
      if (rank <= cat.cache) ++hits[b];
    }
  });
  Estimate e;
  std::int64_t sum = 0;
  for (int b = 0; b < batches; ++b) {
    const double n = static_cast<double>(BatchBegin(sim.trials, batches, b + 1) -
                                         BatchBegin(sim.trials, batches, b));
    e.batch_means.push_back(static_cast<double>(hits[b]) / n);
    sum += hits[b];
  }
  FillBinomial(e, sum, sim.trials);
  return e;
}

RenewalSampler::RenewalSampler(double mean, double cv) : mean_(mean) {
  Require(std::isfinite(mean) && mean > 0.0, "sampler mean must be positive");
  Require(std::isfinite(cv) && cv >= 0.0, "coefficient of variation must be >= 0");
  const double c2 = cv * cv;
  if (cv == 0.0) {
    kind_ = Kind::kDeterministic;
  } else if (cv == 1.0) {
    kind_ = Kind::kExponential;
    rate1_ = 1.0 / mean;
  } else if (cv > 1.0) {
    kind_ = Kind::kHyper;
    p_ = 0.5 * (1.0 + std::sqrt((c2 - 1.0) / (c2 + 1.0)));
    rate1_ = 2.0 * p_ / mean;
    rate2_ = 2.0 * (1.0 - p_) / mean;
  } else {
    // Erlang(k-1) with probability p, else Erlang(k), common rate.
    kind_ = Kind::kErlangMix;
    const int k = static_cast<int>(std::ceil(1.0 / c2 - 1e-12));
    phases_ = k;
    const double disc = k * (1.0 + c2) - static_cast<double>(k) * k * c2;
    p_ = std::max(0.0, (k * c2 - std::sqrt(std::max(0.0, disc))) / (1.0 + c2));
    rate1_ = (k - p_) / mean;
  }
}

double RenewalSampler::operator()(std::mt19937_64& rng) const {
  switch (kind_) {
    case Kind::kDeterministic:
      return mean_;
    case Kind::kExponential:
      return std::exponential_distribution<double>(rate1_)(rng);
    case Kind::kHyper: {
      const bool first = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p_;
      return std::exponential_distribution<double>(first ? rate1_ : rate2_)(rng);
    }
    case Kind::kErlangMix: {
      const bool shorter =
          std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p_;
      const int phases = shorter ? phases_ - 1 : phases_;
      if (phases == 0) return 0.0;
      return std::gamma_distribution<double>(phases, 1.0 / rate1_)(rng);
    }
  }
  return mean_;
}

Estimate SimulateQueue(const delay::QueueParams& queue, const SimConfig& sim) {
  queue.Validate();
  sim.Validate();
  Require(queue.servers <= 8, "queue simulation supports at most 8 servers");
  Require(queue.arrivals > 0.0, "queue simulation needs phi > 0");
  const RenewalSampler interarrival(1.0 / queue.arrivals, queue.cv_arrival);
  const RenewalSampler service(queue.service, queue.cv_service);
  std::mt19937_64 arrival_rng(SubstreamSeed(sim.seed, 0));
  std::mt19937_64 service_rng(SubstreamSeed(sim.seed, 1));
  std::vector<double> free_at(static_cast<std::size_t>(queue.servers), 0.0);
  const double divergence = kDivergenceFactor * queue.service;
  const int batches = sim.batch_count;
  std::vector<double> sums(batches, 0.0);
  double clock = 0.0;
  int batch = 0;
  const std::int64_t total = sim.warmup + sim.trials;
  for (std::int64_t n = 0; n < total; ++n) {
    clock += interarrival(arrival_rng);
    auto server = std::min_element(free_at.begin(), free_at.end());
    const double start = std::max(clock, *server);
    const double wait = start - clock;
    if (wait > divergence) {
      throw NumericalError("queue simulation diverging: waiting time exceeds "
                           "1e6 service times",
                           wait);
    }
    *server = start + service(service_rng);
    if (n < sim.warmup) continue;
    const std::int64_t i = n - sim.warmup;
    while (i >= BatchBegin(sim.trials, batches, batch + 1)) ++batch;
    sums[batch] += *server - clock;
  }
  Estimate e;
  e.samples = sim.trials;
  double grand = 0.0;
  for (int b = 0; b < batches; ++b) {
    const double n = static_cast<double>(BatchBegin(sim.trials, batches, b + 1) -
                                         BatchBegin(sim.trials, batches, b));
    e.batch_means.push_back(sums[b] / n);
    grand += sums[b];
  }
  e.mean = grand / static_cast<double>(sim.trials);
  double ss = 0.0;
  for (double m : e.batch_means) ss += (m - e.mean) * (m - e.mean);
  const double sd = std::sqrt(ss / (batches - 1));
  e.std_error = sd / std::sqrt(static_cast<double>(batches));
  const boost::math::students_t t_dist(batches - 1);
  e.half_width = boost::math::quantile(t_dist, 0.995) * e.std_error;
  return e;
}

}  // namespace cachemarket::montecarlo
