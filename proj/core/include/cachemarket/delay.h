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

// Fronthaul and backhaul delay, and the fronthaul feasibility conditions that
// gate the cache-intensity problem.

#ifndef CACHEMARKET_DELAY_H_
#define CACHEMARKET_DELAY_H_

#include <string>

#include "cachemarket/geometry.h"

namespace cachemarket::delay {

// Cloud-server queue. tau is the mean service time of one server, so the
// utilization is phi * tau / m.
struct QueueParams {
  int servers = 1;         // m
  double service = 5e-3;   // tau, s
  double arrivals = 0.8;   // phi, 1/s
  double cv_arrival = 1.0; // c_a
  double cv_service = 1.0; // c_s

  double utilization() const { return arrivals * service / servers; }

  // Throws InvalidArgument, including for utilization >= 1.
  void Validate() const;
};

struct DelayBudget {
  double threshold = 1e-3;  // D_th, s
  double violation = 0.1;   // gamma

  // gamma * D_th, the bound on the expected delay.
  double target() const { return violation * threshold; }

  void Validate() const;
};

// eta xi x_f / (lambda G). Throws InfeasibleError when G = 0.
double FronthaulDelay(const geometry::NetworkParams& net, double throughput,
                      double file_bits);

// Mean sojourn time of the G/G/m cloud queue: the M/M/m waiting time
// approximation tau rho^(sqrt(2(m+1))-1) / (m (1-rho)) scaled by
// (c_a^2 + c_s^2)/2, plus one service time.
double BackhaulDelay(const QueueParams& queue);

// d_fh + d_bh (1 - p_hit).
double TotalDelay(double fronthaul, double backhaul, double p_hit);

enum class Feasibility { kFeasible, kBoundary, kInfeasible };

const char* FeasibilityName(Feasibility f);

struct FeasibilityReport {
  Feasibility status = Feasibility::kInfeasible;
  double fronthaul = 0.0;       // E[D_fh], s
  double budget = 0.0;          // gamma D_th, s
  double max_ue_per_bs = 0.0;   // gamma D_th G / (eta x_f)
  double ue_per_bs = 0.0;       // xi / lambda
  double min_bs_density = 0.0;  // eta xi x_f / (gamma D_th G)
  // At the boundary the delay budget can only be met by caching every file.
  bool requires_full_catalog = false;

  bool feasible() const { return status != Feasibility::kInfeasible; }
  std::string Describe() const;
};

// Fronthaul feasibility at the deployment's own density. Equality (relative
// 1e-12) is reported as kBoundary.
FeasibilityReport CheckFeasibility(const geometry::NetworkParams& net,
                                   double throughput, double file_bits,
                                   const DelayBudget& budget);

}  // namespace cachemarket::delay

#endif  // CACHEMARKET_DELAY_H_
