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

// Best response of one MNO: the cheapest cache intensity lambda * S that keeps
// the expected delay within gamma * D_th, solved as a geometric program
//
//   minimize    omega lambda S
//   subject to  A / lambda + V S^(1-nu) <= 1,   R / lambda <= 1
//
// through its one-dimensional dual.

#ifndef CACHEMARKET_MNO_SOLVER_H_
#define CACHEMARKET_MNO_SOLVER_H_

#include <cstdint>

#include "cachemarket/caching.h"
#include "cachemarket/delay.h"
#include "cachemarket/geometry.h"

namespace cachemarket::mno {

struct GpConstants {
  double c1 = 0.0;  // E[D_bh] (1 - zeta(nu)/H_F), s
  double c2 = 0.0;  // eta xi x_f / G, s BS/m^2
  double c3 = 0.0;  // E[D_bh] / ((nu-1) H_F), s
  double a = 0.0;   // C2 / (gamma D_th - C1)
  double v = 0.0;   // C3 / (gamma D_th - C1)
  double r = 0.0;   // C2 / (gamma D_th)
  std::int64_t files = 0;  // F, for the S <= F check; 0 disables it
};

// Throws InvalidArgument for nu <= 1 (use FixedIntensityResponse) or a
// vanishing backhaul delay, InfeasibleError when gamma D_th <= C1 or G = 0.
GpConstants BuildConstants(const geometry::NetworkParams& net,
                           double throughput,
                           const caching::CatalogParams& cat,
                           double backhaul_delay,
                           const delay::DelayBudget& budget);

// Uses the closed-form coverage for G and the G/G/m backhaul delay.
GpConstants BuildConstants(const geometry::NetworkParams& net,
                           const caching::CatalogParams& cat,
                           const delay::QueueParams& queue,
                           const delay::DelayBudget& budget);

// 1 / ((nu-1)(R/A - 1)) without clamping; +inf at R = A.
double DualRUnclamped(const GpConstants& c, double nu);

// Maximizer of the dual on [0, 1]. When R <= A the dual is increasing on the
// whole interval and the maximizer is 1.
double SolveDualR(const GpConstants& c, double nu);

// log q(r) and q(r), with the closed-form limits at r = 0 and r = 1.
double LogDualQ(double r, const GpConstants& c, double nu, double omega);
double EvalDualQ(double r, const GpConstants& c, double nu, double omega);

struct DualVariables {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
};

struct GpDiagnostics {
  double objective_constraint = 0.0;  // A/lambda + V S^(1-nu)
  double intensity_constraint = 0.0;  // R/lambda
  double duality_gap = 0.0;           // |omega lambda S - q| / q
  bool exceeds_catalog = false;       // S > F
  double cache_ceil = 0.0;            // ceil(S)
  double rounded_constraint = 0.0;    // constraint at ceil(S)
  bool rounded_feasible = false;
};

enum class ResponseMethod { kGeometricProgram, kFixedIntensity };

const char* ResponseMethodName(ResponseMethod m);

struct GpSolution {
  double omega = 0.0;
  double r_star = 0.0;
  double q_star = 0.0;
  double lambda_star = 0.0;
  double s_star = 0.0;
  DualVariables dual;
  GpDiagnostics diagnostics;
  ResponseMethod method = ResponseMethod::kGeometricProgram;

  double cache_intensity() const { return lambda_star * s_star; }
};

// Primal recovered from the dual optimum r*:
//   lambda* = A (1 + 1/((nu-1) r*)),  S* = (V (1 + (nu-1) r*))^(1/(nu-1)).
// Throws InvalidArgument for nu <= 1, non-positive constants or price.
GpSolution BestResponse(const GpConstants& c, double nu, double omega);

// Route for 0 < nu < 1. lambda is fixed at `slack` times the fronthaul lower
// bound, and S is the smallest cache meeting the remaining budget under
// P_hit ~ ((S+1)/(F+1))^(1-nu). Throws InfeasibleError when that needs S > F.
GpSolution FixedIntensityResponse(const geometry::NetworkParams& net,
                                  double throughput,
                                  const caching::CatalogParams& cat,
                                  double backhaul_delay,
                                  const delay::DelayBudget& budget,
                                  double omega, double slack = 1.05);

}  // namespace cachemarket::mno

#endif  // CACHEMARKET_MNO_SOLVER_H_
