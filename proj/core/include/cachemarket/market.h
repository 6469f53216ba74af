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

// Leader (infrastructure provider) pricing. With the followers' price
// response lambda = T/omega and S = U omega^(-k), k = 1/(nu-1), the leader
// solves
//
//   minimize z  subject to  T pbar / omega <= z + U T omega^(-k)
//
// by successive geometric programming: the right-hand posynomial is condensed
// to a monomial at the current iterate and the condensed program is solved
// exactly inside a price box and a multiplicative trust region.

#ifndef CACHEMARKET_MARKET_H_
#define CACHEMARKET_MARKET_H_

#include <cstddef>
#include <span>
#include <vector>

#include "cachemarket/mno_solver.h"

namespace cachemarket::market {

struct InpParams {
  double power_price = 10.0;   // theta
  double circuit_power = 1.0;  // p_c, W
  int mnos = 1;                // K
  double bs_power = 1.0;       // p, W
  double price_min = 1e-6;
  double price_max = 1e6;
  double trust_region = 10.0;  // kappa > 1
  double z_floor = 1e-12;      // epsilon

  // pbar = theta (K p + p_c), the power cost per unit BS density.
  double areal_cost() const {
    return power_price * (mnos * bs_power + circuit_power);
  }

  void Validate() const;
};

struct MnoDemand {
  double t = 0.0;  // (A + R) / (q*/omega)
  double u = 0.0;  // [V (nu-1) / (q*/omega)]^(1/(nu-1))

  double ut() const { return t * u; }
};

struct DemandSummary {
  std::vector<MnoDemand> mnos;
  double ut_max = 0.0;
  std::size_t argmax = 0;  // lowest index among ties

  double t_const() const { return mnos[argmax].t; }
  double u_const() const { return mnos[argmax].u; }
};

// T and U do not depend on the price the followers were solved at.
MnoDemand DemandOf(const mno::GpConstants& c, const mno::GpSolution& s,
                   double nu);

DemandSummary SummarizeDemands(std::span<const mno::GpConstants> constants,
                               std::span<const mno::GpSolution> solutions,
                               double nu);

// Q1 objective T pbar / omega - U T omega^(-k) of the largest follower.
double LeaderObjective(const DemandSummary& d, const InpParams& inp, double nu,
                       double omega);

// T pbar omega^-1 / (z + U T omega^(-k)); at most 1 for a feasible point.
double ConstraintResidual(const DemandSummary& d, const InpParams& inp,
                          double nu, double z, double omega);

struct SgaState {
  double z = 0.0;
  double omega = 0.0;
  // Condensation at the previous iterate that produced this one.
  double alpha_bar = 1.0;
  double beta_bar = 0.0;
  double e_coef = 1.0;
  int iteration = 0;
  bool converged = false;
  bool z_floor_active = false;
  bool price_at_bound = false;
};

// z(0) = max(Q1(omega0), epsilon).
SgaState InitialState(const DemandSummary& d, const InpParams& inp, double nu,
                      double omega0);

// Monomial approximation E z^alpha_bar omega^beta_bar of z + U T omega^(-k)
// at (z_bar, omega_bar), exact there and below it elsewhere.
struct Condensation {
  double alpha_bar = 0.0;
  double beta_bar = 0.0;
  double log_e = 0.0;

  double Eval(double z, double omega) const;
};

Condensation Condense(const DemandSummary& d, double nu, double z_bar,
                      double omega_bar);

SgaState SgaStep(const SgaState& state, const DemandSummary& d,
                 const InpParams& inp, double nu);

struct MarketOutcome {
  double omega_star = 0.0;
  double z_star = 0.0;
  double revenue = 0.0;  // omega lambda S = U T omega^(-k)
  double cost = 0.0;     // theta Y(lambda) = T pbar / omega
  double profit = 0.0;   // revenue - cost
  int iterations = 0;
  bool z_floor_active = false;
  bool price_at_bound = false;
  std::vector<SgaState> history;
  // Per-MNO response at omega*: lambda_k, S_k and lambda_k S_k.
  std::vector<double> bs_density;
  std::vector<double> cache_size;
  std::vector<double> demands;
};

// Iterates SgaStep until the relative change of both z and omega is below
// `tol`. Throws ConvergenceError carrying the history after `max_iter` steps.
MarketOutcome SolveEquilibrium(const DemandSummary& d, const InpParams& inp,
                               double nu, double tol = 1e-9,
                               int max_iter = 200, double omega0 = 1.0);

}  // namespace cachemarket::market

#endif  // CACHEMARKET_MARKET_H_
