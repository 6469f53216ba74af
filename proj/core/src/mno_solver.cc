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

#include "cachemarket/mno_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cachemarket/error.h"

namespace cachemarket::mno {
namespace {

constexpr double kFeasTol = 1e-9;

void RequireGp(const GpConstants& c, double nu) {
  Require(std::isfinite(nu) && nu > 1.0,
          "the geometric program needs nu > 1; use the fixed-intensity route");
  Require(std::isfinite(c.a) && c.a > 0.0, "constant A must be positive");
  Require(std::isfinite(c.v) && c.v > 0.0, "constant V must be positive");
  Require(std::isfinite(c.r) && c.r > 0.0, "constant R must be positive");
}

void FillDiagnostics(const GpConstants& c, double nu, GpSolution& s) {
  GpDiagnostics& d = s.diagnostics;
  d.objective_constraint =
      c.a / s.lambda_star + c.v * std::pow(s.s_star, 1.0 - nu);
  d.intensity_constraint = c.r / s.lambda_star;
  d.duality_gap =
      std::abs(s.omega * s.lambda_star * s.s_star - s.q_star) / s.q_star;
  d.exceeds_catalog =
      c.files > 0 && s.s_star > static_cast<double>(c.files);
  d.cache_ceil = std::ceil(s.s_star);
  d.rounded_constraint =
      c.a / s.lambda_star + c.v * std::pow(d.cache_ceil, 1.0 - nu);
  d.rounded_feasible = d.rounded_constraint <= 1.0 + kFeasTol &&
                       d.intensity_constraint <= 1.0 + kFeasTol;
}

}  // namespace

GpConstants BuildConstants(const geometry::NetworkParams& net,
                           double throughput,
                           const caching::CatalogParams& cat,
                           double backhaul_delay,
                           const delay::DelayBudget& budget) {
  net.Validate();
  cat.Validate();
  budget.Validate();
  if (cat.zipf < 1.0) {
    throw InvalidArgument(
        "nu < 1 is outside the geometric program; use the fixed-intensity "
        "route built on the cached-fraction limit");
  }
  Require(cat.zipf > 1.0, "nu = 1 is excluded");
  Require(std::isfinite(backhaul_delay) && backhaul_delay > 0.0,
          "backhaul delay must be positive (V would vanish)");
  if (!(throughput > 0.0)) {
    throw InfeasibleError("zero throughput: fronthaul delay is unbounded");
  }
  const double nu = cat.zipf;
  const double h_f = caching::HarmonicExact(cat.files, nu);
  const double zeta = caching::ZetaRiemann(nu);
  GpConstants c;
  c.c1 = backhaul_delay * (1.0 - zeta / h_f);
  c.c2 = net.activity * net.ue_density * cat.file_bits / throughput;
  c.c3 = backhaul_delay / ((nu - 1.0) * h_f);
  const double target = budget.target();
  const double slack = target - c.c1;
  if (!(slack > 0.0)) {
    std::ostringstream os;
    os << "delay budget gamma*D_th = " << target
       << " s does not exceed C1 = " << c.c1 << " s";
    throw InfeasibleError(os.str());
  }
  c.a = c.c2 / slack;
  c.v = c.c3 / slack;
  c.r = c.c2 / target;
  c.files = cat.files;
  return c;
}

GpConstants BuildConstants(const geometry::NetworkParams& net,
                           const caching::CatalogParams& cat,
                           const delay::QueueParams& queue,
                           const delay::DelayBudget& budget) {
  const double p_c = geometry::CoverageClosedForm(net).p_c;
  return BuildConstants(net, geometry::Throughput(net, p_c), cat,
                        delay::BackhaulDelay(queue), budget);
}

double DualRUnclamped(const GpConstants& c, double nu) {
  RequireGp(c, nu);
  const double denom = (nu - 1.0) * (c.r / c.a - 1.0);
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / denom;
}

double SolveDualR(const GpConstants& c, double nu) {
  RequireGp(c, nu);
  if (c.r <= c.a) return 1.0;
  return std::min(1.0, DualRUnclamped(c, nu));
}

double LogDualQ(double r, const GpConstants& c, double nu, double omega) {
  RequireGp(c, nu);
  Require(r >= 0.0 && r <= 1.0, "r must lie in [0, 1]");
  Require(std::isfinite(omega) && omega > 0.0, "price must be positive");
  const double k = 1.0 / (nu - 1.0);
  const double base = std::log(omega) + k * std::log((nu - 1.0) * c.v);
  if (r == 0.0) return base + std::log(c.r) + k * std::log(k);
  if (r == 1.0) return base + std::log(c.a) + (1.0 + k) * std::log(1.0 + k);
  const double s = 1.0 - r;
  return base + r * std::log(c.a / r) + s * std::log(c.r / s) +
         (r + k) * std::log(r + k) + s * std::log(s);
}

double EvalDualQ(double r, const GpConstants& c, double nu, double omega) {
  return std::exp(LogDualQ(r, c, nu, omega));
}

const char* ResponseMethodName(ResponseMethod m) {
  switch (m) {
    case ResponseMethod::kGeometricProgram:
      return "geometric_program";
    case ResponseMethod::kFixedIntensity:
      return "fixed_intensity";
  }
  return "unknown";
}

GpSolution BestResponse(const GpConstants& c, double nu, double omega) {
  RequireGp(c, nu);
  Require(std::isfinite(omega) && omega > 0.0, "price must be positive");
  const double k = 1.0 / (nu - 1.0);
  GpSolution s;
  s.omega = omega;
  s.r_star = SolveDualR(c, nu);
  s.q_star = EvalDualQ(s.r_star, c, nu, omega);
  // Each constraint term equals its dual weight over the constraint's weight
  // sum; r* > 0 always, so lambda* is finite.
  s.lambda_star = c.a * (1.0 + k / s.r_star);
  s.s_star = std::pow(c.v * (1.0 + (nu - 1.0) * s.r_star), k);
  s.dual = {1.0, s.r_star, k, 1.0 - s.r_star};
  s.method = ResponseMethod::kGeometricProgram;
  FillDiagnostics(c, nu, s);
  return s;
}

GpSolution FixedIntensityResponse(const geometry::NetworkParams& net,
                                  double throughput,
                                  const caching::CatalogParams& cat,
                                  double backhaul_delay,
                                  const delay::DelayBudget& budget,
                                  double omega, double slack) {
  net.Validate();
  cat.Validate();
  budget.Validate();
  Require(cat.zipf < 1.0, "the fixed-intensity route needs 0 < nu < 1");
  Require(slack > 1.0, "slack must exceed 1 to stay off the S = F boundary");
  Require(std::isfinite(omega) && omega > 0.0, "price must be positive");
  Require(std::isfinite(backhaul_delay) && backhaul_delay > 0.0,
          "backhaul delay must be positive");
  if (!(throughput > 0.0)) {
    throw InfeasibleError("zero throughput: fronthaul delay is unbounded");
  }
  const double target = budget.target();
  const double lambda_min =
      net.activity * net.ue_density * cat.file_bits / (target * throughput);
  GpSolution s;
  s.omega = omega;
  s.method = ResponseMethod::kFixedIntensity;
  s.lambda_star = slack * lambda_min;
  const double fronthaul = target / slack;
  const double p_needed =
      std::max(0.0, 1.0 - (target - fronthaul) / backhaul_delay);
  const double f1 = static_cast<double>(cat.files) + 1.0;
  if (p_needed == 0.0) {
    s.s_star = 0.0;
  } else {
    const double fraction = caching::CacheFractionForHit(p_needed, cat.zipf);
    s.s_star = std::max(0.0, fraction * f1 - 1.0);
  }
  if (s.s_star > static_cast<double>(cat.files)) {
    throw InfeasibleError("fixed-intensity route needs more than F files");
  }
  s.q_star = omega * s.lambda_star * s.s_star;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  s.r_star = nan;
  s.dual = {nan, nan, nan, nan};
  GpDiagnostics& d = s.diagnostics;
  d.intensity_constraint = lambda_min / s.lambda_star;
  d.cache_ceil = std::ceil(s.s_star);
  d.objective_constraint =
      (fronthaul + backhaul_delay *
                       (1.0 - std::pow((s.s_star + 1.0) / f1, 1.0 - cat.zipf))) /
      target;
  d.rounded_constraint =
      (fronthaul + backhaul_delay * (1.0 - std::pow((d.cache_ceil + 1.0) / f1,
                                                    1.0 - cat.zipf))) /
      target;
  d.rounded_feasible = d.rounded_constraint <= 1.0 + kFeasTol;
  return s;
}

}  // namespace cachemarket::mno
