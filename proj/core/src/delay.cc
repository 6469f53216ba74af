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

#include "cachemarket/delay.h"

#include <cmath>
#include <sstream>

#include "cachemarket/error.h"

namespace cachemarket::delay {
namespace {

constexpr double kBoundaryTol = 1e-12;

}  // namespace

void QueueParams::Validate() const {
  Require(servers >= 1, "m must be at least 1");
  Require(std::isfinite(service) && service > 0.0, "tau must be positive");
  Require(std::isfinite(arrivals) && arrivals >= 0.0, "phi must be >= 0");
  Require(std::isfinite(cv_arrival) && cv_arrival >= 0.0, "c_a must be >= 0");
  Require(std::isfinite(cv_service) && cv_service >= 0.0, "c_s must be >= 0");
  if (!(utilization() < 1.0)) {
    std::ostringstream os;
    os << "unstable queue: utilization phi*tau/m = " << utilization()
       << " must be below 1";
    throw InvalidArgument(os.str());
  }
}

void DelayBudget::Validate() const {
  Require(std::isfinite(threshold) && threshold > 0.0, "D_th must be positive");
  Require(violation > 0.0 && violation < 1.0, "gamma must lie in (0, 1)");
}

double FronthaulDelay(const geometry::NetworkParams& net, double throughput,
                      double file_bits) {
  net.Validate();
  Require(std::isfinite(throughput) && throughput >= 0.0,
          "throughput must be >= 0");
  Require(std::isfinite(file_bits) && file_bits > 0.0, "x_f must be positive");
  if (throughput == 0.0) {
    throw InfeasibleError("zero throughput: fronthaul delay is unbounded");
  }
  return net.activity * net.ue_density * file_bits /
         (net.bs_density * throughput);
}

double BackhaulDelay(const QueueParams& queue) {
  queue.Validate();
  const double rho = queue.utilization();
  const double m = queue.servers;
  const double wait_mmm =
      rho == 0.0 ? 0.0
                 : queue.service * std::pow(rho, std::sqrt(2.0 * (m + 1.0)) - 1.0) /
                       (m * (1.0 - rho));
  const double scv = 0.5 * (queue.cv_arrival * queue.cv_arrival +
                            queue.cv_service * queue.cv_service);
  return scv * wait_mmm + queue.service;
}

double TotalDelay(double fronthaul, double backhaul, double p_hit) {
  Require(p_hit >= 0.0 && p_hit <= 1.0, "hit probability must lie in [0, 1]");
  Require(fronthaul >= 0.0 && backhaul >= 0.0, "delays must be >= 0");
  return fronthaul + backhaul * (1.0 - p_hit);
}

const char* FeasibilityName(Feasibility f) {
  switch (f) {
    case Feasibility::kFeasible:
      return "feasible";
    case Feasibility::kBoundary:
      return "boundary";
    case Feasibility::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

std::string FeasibilityReport::Describe() const {
  std::ostringstream os;
  os.precision(6);
  os << FeasibilityName(status) << ": E[D_fh] = " << fronthaul
     << " s against gamma*D_th = " << budget << " s; UE per BS " << ue_per_bs
     << " (max " << max_ue_per_bs << "); lambda lower bound "
     << min_bs_density << " BS/m^2";
  if (requires_full_catalog) os << "; meeting the budget requires S = F";
  return os.str();
}

FeasibilityReport CheckFeasibility(const geometry::NetworkParams& net,
                                   double throughput, double file_bits,
                                   const DelayBudget& budget) {
  budget.Validate();
  FeasibilityReport r;
  r.fronthaul = FronthaulDelay(net, throughput, file_bits);
  r.budget = budget.target();
  r.max_ue_per_bs = r.budget * throughput / (net.activity * file_bits);
  r.ue_per_bs = net.ue_density / net.bs_density;
  r.min_bs_density = net.activity * net.ue_density * file_bits /
                     (r.budget * throughput);
  const double gap = r.fronthaul - r.budget;
  if (std::abs(gap) <= kBoundaryTol * r.budget) {
    r.status = Feasibility::kBoundary;
    r.requires_full_catalog = true;
  } else if (gap < 0.0) {
    r.status = Feasibility::kFeasible;
  } else {
    r.status = Feasibility::kInfeasible;
  }
  return r;
}

}  // namespace cachemarket::delay
