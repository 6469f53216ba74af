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

// Backward induction over a scenario: follower best responses, the leader's
// price, then the rent split.

#ifndef CACHEMARKET_TOOLS_PIPELINE_H_
#define CACHEMARKET_TOOLS_PIPELINE_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cachemarket/delay.h"
#include "cachemarket/geometry.h"
#include "cachemarket/market.h"
#include "cachemarket/mno_solver.h"
#include "cachemarket/sharing.h"
#include "scenario.h"

namespace cachemarket::cli {

inline constexpr const char* kToolVersion = "1.0.0";

struct MnoResult {
  std::string name;
  geometry::NetworkParams network;
  geometry::CoverageResult coverage;  // closed form, feeds the throughput
  double throughput = 0.0;
  mno::GpConstants constants;
  mno::GpSolution solution;
  // Fronthaul condition at the chosen density lambda*.
  delay::FeasibilityReport feasibility;
};

struct FollowerStage {
  double backhaul = 0.0;
  std::vector<MnoResult> mnos;
};

// Best responses of every MNO at `omega`. nu < 1 takes the fixed-intensity
// route. Errors are rethrown with a stage label.
FollowerStage RunFollowers(const Scenario& s, double omega);

// Why a follower's answer cannot be delivered, or nullopt when it can.
std::optional<std::string> Infeasibility(const MnoResult& r);

struct LeaderStage {
  market::DemandSummary demand;
  market::MarketOutcome market;
};

// Demand summary and price iteration. Needs nu > 1. Does not look at the
// followers' fronthaul feasibility.
LeaderStage RunLeader(const Scenario& s, const FollowerStage& followers);

struct RunReport {
  Scenario scenario;
  std::string config_hash;
  FollowerStage followers;
  market::DemandSummary demand;
  market::MarketOutcome market;
  sharing::RentProblem rent;
  sharing::CostAllocation shares;
};

enum class Gate {
  kEnforce,  // InfeasibleError when Infeasibility() reports any follower
  kReport,   // carry on; callers read Infeasibility() themselves
};

// Followers at solver.price, then the leader, then the airport split.
RunReport RunPipeline(const Scenario& s, Gate gate = Gate::kEnforce);

// True when every follower passes Infeasibility().
bool AllFollowersFeasible(const FollowerStage& stage);

nlohmann::ordered_json FollowerJson(const MnoResult& r);
nlohmann::ordered_json ToJson(const RunReport& r);

}  // namespace cachemarket::cli

#endif  // CACHEMARKET_TOOLS_PIPELINE_H_
