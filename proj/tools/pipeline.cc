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

#include "pipeline.h"

#include <string>
#include <utility>

#include "cachemarket/caching.h"
#include "cachemarket/error.h"

namespace cachemarket::cli {
namespace {

[[noreturn]] void Relabel(const Error& e, const std::string& stage) {
  const std::string msg = stage + ": " + e.what();
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
      throw InvalidArgument(msg);
    case ErrorCode::kInfeasible:
      throw InfeasibleError(msg);
    case ErrorCode::kNumerical:
      if (const auto* c = dynamic_cast<const ConvergenceError*>(&e)) {
        throw ConvergenceError(msg, c->residual(), c->history());
      }
      if (const auto* n = dynamic_cast<const NumericalError*>(&e)) {
        throw NumericalError(msg, n->residual());
      }
      throw NumericalError(msg, 0.0);
    case ErrorCode::kValidation:
      throw ValidationError(msg);
  }
  throw Error(e.code(), msg);
}

template <typename F>
auto Staged(const std::string& stage, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    Relabel(e, stage);
  }
}

MnoResult SolveFollower(const Scenario& s, std::size_t k, double backhaul,
                        double omega) {
  MnoResult r;
  r.name = s.mnos[k].name;
  r.network = s.MnoNetwork(k);
  r.coverage = geometry::CoverageClosedForm(r.network);
  r.throughput = geometry::Throughput(r.network, r.coverage.p_c);
  if (s.catalog.zipf > 1.0) {
    r.constants = mno::BuildConstants(r.network, r.throughput, s.catalog,
                                      backhaul, s.budget);
    r.solution = mno::BestResponse(r.constants, s.catalog.zipf, omega);
  } else {
    r.solution = mno::FixedIntensityResponse(r.network, r.throughput,
                                             s.catalog, backhaul, s.budget,
                                             omega, s.solver.slack);
    r.constants.files = s.catalog.files;
  }
  geometry::NetworkParams at = r.network;
  at.bs_density = r.solution.lambda_star;
  r.feasibility = delay::CheckFeasibility(at, r.throughput,
                                          s.catalog.file_bits, s.budget);
  return r;
}

}  // namespace

FollowerStage RunFollowers(const Scenario& s, double omega) {
  FollowerStage stage;
  stage.backhaul = Staged("follower stage",
                          [&] { return delay::BackhaulDelay(s.queue); });
  for (std::size_t k = 0; k < s.mnos.size(); ++k) {
    stage.mnos.push_back(Staged("follower stage (" + s.mnos[k].name + ")", [&] {
      return SolveFollower(s, k, stage.backhaul, omega);
    }));
  }
  return stage;
}

std::optional<std::string> Infeasibility(const MnoResult& r) {
  if (r.feasibility.status != delay::Feasibility::kFeasible) {
    return r.name + ": fronthaul condition at lambda* is " +
           r.feasibility.Describe();
  }
  if (r.solution.diagnostics.exceeds_catalog) {
    return r.name + ": the delay budget needs S* = " +
           FormatDouble(r.solution.s_star) + " files, more than F = " +
           std::to_string(r.constants.files);
  }
  return std::nullopt;
}

LeaderStage RunLeader(const Scenario& s, const FollowerStage& followers) {
  const double nu = s.catalog.zipf;
  LeaderStage out;
  out.demand = Staged("leader stage", [&] {
    Require(nu > 1.0, "the leader's price response needs nu > 1");
    std::vector<mno::GpConstants> consts;
    std::vector<mno::GpSolution> sols;
    for (const MnoResult& r : followers.mnos) {
      consts.push_back(r.constants);
      sols.push_back(r.solution);
    }
    return market::SummarizeDemands(consts, sols, nu);
  });
  out.market = Staged("leader stage", [&] {
    return market::SolveEquilibrium(out.demand, s.Inp(), nu, s.solver.tol,
                                    s.solver.max_iter, s.solver.omega0);
  });
  return out;
}

bool AllFollowersFeasible(const FollowerStage& stage) {
  for (const MnoResult& r : stage.mnos) {
    if (Infeasibility(r)) return false;
  }
  return true;
}

RunReport RunPipeline(const Scenario& s, Gate gate) {
  Staged("scenario", [&] { s.Validate(); return 0; });
  RunReport rep;
  rep.scenario = s;
  rep.config_hash = ConfigHash(s);
  rep.followers = RunFollowers(s, s.solver.price);
  for (const MnoResult& r : rep.followers.mnos) {
    if (gate == Gate::kReport) break;
    if (auto why = Infeasibility(r)) {
      throw InfeasibleError("follower stage: " + *why);
    }
  }
  LeaderStage leader = RunLeader(s, rep.followers);
  rep.demand = std::move(leader.demand);
  rep.market = std::move(leader.market);
  rep.rent.price = rep.market.omega_star;
  rep.rent.demands = rep.market.demands;
  for (const MnoResult& r : rep.followers.mnos) rep.rent.labels.push_back(r.name);
  rep.shares = Staged("sharing stage",
                      [&] { return sharing::AirportShare(rep.rent); });
  return rep;
}

nlohmann::ordered_json FollowerJson(const MnoResult& r) {
  using nlohmann::ordered_json;
  const mno::GpSolution& s = r.solution;
  ordered_json j;
  j["name"] = r.name;
  j["W"] = r.network.bandwidth;
  j["L"] = r.network.subchannels;
  j["coverage"] = {{"method", geometry::CoverageMethodName(r.coverage.method)},
                   {"beta", r.coverage.beta},
                   {"p_c", r.coverage.p_c}};
  j["throughput"] = r.throughput;
  j["constants"] = {{"c1", r.constants.c1}, {"c2", r.constants.c2},
                    {"c3", r.constants.c3}, {"A", r.constants.a},
                    {"V", r.constants.v},   {"R", r.constants.r}};
  j["solution"] = {
      {"method", mno::ResponseMethodName(s.method)},
      {"omega", s.omega},
      {"r_star", s.r_star},
      {"q_star", s.q_star},
      {"lambda_star", s.lambda_star},
      {"s_star", s.s_star},
      {"s_ceil", s.diagnostics.cache_ceil},
      {"cache_intensity", s.cache_intensity()},
      {"dual", {s.dual.d1, s.dual.d2, s.dual.d3, s.dual.d4}},
      {"diagnostics",
       {{"objective_constraint", s.diagnostics.objective_constraint},
        {"intensity_constraint", s.diagnostics.intensity_constraint},
        {"duality_gap", s.diagnostics.duality_gap},
        {"exceeds_catalog", s.diagnostics.exceeds_catalog},
        {"rounded_constraint", s.diagnostics.rounded_constraint},
        {"rounded_feasible", s.diagnostics.rounded_feasible}}}};
  j["feasibility"] = {
      {"status", delay::FeasibilityName(r.feasibility.status)},
      {"fronthaul", r.feasibility.fronthaul},
      {"budget", r.feasibility.budget},
      {"ue_per_bs", r.feasibility.ue_per_bs},
      {"max_ue_per_bs", r.feasibility.max_ue_per_bs},
      {"lambda_min", r.feasibility.min_bs_density},
      {"requires_full_catalog", r.feasibility.requires_full_catalog}};
  return j;
}

nlohmann::ordered_json ToJson(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["provenance"] = {{"tool", "cachemarket"},
                     {"version", kToolVersion},
                     {"config_hash", r.config_hash},
                     {"seed", r.scenario.sim.seed}};
  ordered_json scenario;
  for (const std::string& name : FieldNames()) {
    scenario[name] = GetField(r.scenario, name);
  }
  j["scenario"] = scenario;
  j["backhaul_delay"] = r.followers.backhaul;
  ordered_json followers = ordered_json::array();
  for (const MnoResult& m : r.followers.mnos) followers.push_back(FollowerJson(m));
  j["followers"] = followers;
  ordered_json per = ordered_json::array();
  for (std::size_t k = 0; k < r.demand.mnos.size(); ++k) {
    per.push_back({{"name", r.followers.mnos[k].name},
                   {"T", r.demand.mnos[k].t},
                   {"U", r.demand.mnos[k].u},
                   {"UT", r.demand.mnos[k].ut()}});
  }
  j["demand"] = {{"per_mno", per},
                 {"ut_max", r.demand.ut_max},
                 {"argmax", r.followers.mnos[r.demand.argmax].name}};
  ordered_json history = ordered_json::array();
  for (const market::SgaState& h : r.market.history) {
    history.push_back({{"iteration", h.iteration},
                       {"z", h.z},
                       {"omega", h.omega},
                       {"alpha_bar", h.alpha_bar},
                       {"beta_bar", h.beta_bar},
                       {"e_coef", h.e_coef}});
  }
  j["market"] = {{"omega_star", r.market.omega_star},
                 {"z_star", r.market.z_star},
                 {"revenue", r.market.revenue},
                 {"cost", r.market.cost},
                 {"profit", r.market.profit},
                 {"iterations", r.market.iterations},
                 {"z_floor_active", r.market.z_floor_active},
                 {"price_at_bound", r.market.price_at_bound},
                 {"history", history}};
  ordered_json shares = ordered_json::array();
  for (std::size_t k = 0; k < r.shares.shares.size(); ++k) {
    shares.push_back({{"name", r.rent.labels[k]},
                      {"lambda", r.market.bs_density[k]},
                      {"S", r.market.cache_size[k]},
                      {"demand", r.rent.demands[k]},
                      {"psi", r.shares.shares[k]}});
  }
  j["sharing"] = {{"total_rent", r.shares.total},
                  {"share_updates", r.shares.share_updates},
                  {"shares", shares}};
  return j;
}

}  // namespace cachemarket::cli
