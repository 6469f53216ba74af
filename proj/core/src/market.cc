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

#include "cachemarket/market.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "cachemarket/error.h"

namespace cachemarket::market {
namespace {

double Exponent(double nu) {
  Require(std::isfinite(nu) && nu > 1.0, "the market needs nu > 1");
  return 1.0 / (nu - 1.0);
}

void RequireDemands(const DemandSummary& d) {
  Require(!d.mnos.empty(), "demand summary has no MNOs");
  Require(d.argmax < d.mnos.size(), "demand summary argmax out of range");
  Require(d.t_const() > 0.0 && d.u_const() > 0.0,
          "demand constants must be positive");
}

void RequireFinite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw NumericalError(std::string("non-finite ") + what + " in SGA step", x);
  }
}

}  // namespace

void InpParams::Validate() const {
  Require(std::isfinite(power_price) && power_price > 0.0,
          "theta must be positive");
  Require(std::isfinite(circuit_power) && circuit_power >= 0.0,
          "p_c must be >= 0");
  Require(mnos >= 1, "K must be at least 1");
  Require(std::isfinite(bs_power) && bs_power > 0.0, "p must be positive");
  Require(price_min > 0.0 && price_max > price_min,
          "price box must satisfy 0 < omega_min < omega_max");
  Require(trust_region > 1.0, "trust region factor must exceed 1");
  Require(z_floor > 0.0, "z floor must be positive");
}

MnoDemand DemandOf(const mno::GpConstants& c, const mno::GpSolution& s,
                   double nu) {
  const double k = Exponent(nu);
  Require(s.q_star > 0.0 && s.omega > 0.0, "follower solution is empty");
  const double q_unit = s.q_star / s.omega;
  MnoDemand m;
  m.t = (c.a + c.r) / q_unit;
  m.u = std::pow(c.v * (nu - 1.0) / q_unit, k);
  return m;
}

DemandSummary SummarizeDemands(std::span<const mno::GpConstants> constants,
                               std::span<const mno::GpSolution> solutions,
                               double nu) {
  Require(!constants.empty(), "at least one MNO response is required");
  Require(constants.size() == solutions.size(),
          "constants and solutions must pair up");
  DemandSummary d;
  for (std::size_t i = 0; i < constants.size(); ++i) {
    d.mnos.push_back(DemandOf(constants[i], solutions[i], nu));
    if (i == 0 || d.mnos[i].ut() > d.ut_max) {
      d.ut_max = d.mnos[i].ut();
      d.argmax = i;
    }
  }
  return d;
}

double LeaderObjective(const DemandSummary& d, const InpParams& inp, double nu,
                       double omega) {
  RequireDemands(d);
  const double k = Exponent(nu);
  return d.t_const() * inp.areal_cost() / omega -
         d.ut_max * std::pow(omega, -k);
}

double ConstraintResidual(const DemandSummary& d, const InpParams& inp,
                          double nu, double z, double omega) {
  RequireDemands(d);
  const double k = Exponent(nu);
  return d.t_const() * inp.areal_cost() / omega /
         (z + d.ut_max * std::pow(omega, -k));
}

SgaState InitialState(const DemandSummary& d, const InpParams& inp, double nu,
                      double omega0) {
  inp.Validate();
  Require(omega0 >= inp.price_min && omega0 <= inp.price_max,
          "initial price must lie in the price box");
  SgaState s;
  s.omega = omega0;
  const double f = LeaderObjective(d, inp, nu, omega0);
  s.z = std::max(f, inp.z_floor);
  s.z_floor_active = f < inp.z_floor;
  return s;
}

double Condensation::Eval(double z, double omega) const {
  return std::exp(log_e + alpha_bar * std::log(z) +
                  beta_bar * std::log(omega));
}

Condensation Condense(const DemandSummary& d, double nu, double z_bar,
                      double omega_bar) {
  RequireDemands(d);
  const double k = Exponent(nu);
  Require(z_bar > 0.0 && omega_bar > 0.0, "expansion point must be positive");
  const double revenue = d.ut_max * std::pow(omega_bar, -k);
  const double q_bar = z_bar + revenue;
  Condensation c;
  c.alpha_bar = z_bar / q_bar;
  c.beta_bar = -k * revenue / q_bar;
  c.log_e = std::log(q_bar) - c.alpha_bar * std::log(z_bar) -
            c.beta_bar * std::log(omega_bar);
  return c;
}

SgaState SgaStep(const SgaState& state, const DemandSummary& d,
                 const InpParams& inp, double nu) {
  inp.Validate();
  Require(state.z > 0.0 && state.omega > 0.0, "SGA state must be positive");
  const double k = Exponent(nu);
  const Condensation c = Condense(d, nu, state.z, state.omega);
  const double e = 1.0 + c.beta_bar;
  const double lo = std::max(inp.price_min, state.omega / inp.trust_region);
  const double hi = std::min(inp.price_max, state.omega * inp.trust_region);

  // The condensed program min z s.t. T pbar / omega <= E z^a omega^b is
  // log-linear: the binding z falls with omega^(-e/a), so the price moves to
  // the edge of the box that e points at.
  double omega = state.omega;
  if (e > 0.0) {
    omega = hi;
  } else if (e < 0.0) {
    omega = lo;
  }
  // Slack of the true constraint at the expansion point, never positive for
  // an accepted iterate; rounding is clipped so that z cannot grow.
  const double q_bar = state.z + d.ut_max * std::pow(state.omega, -k);
  const double g0 = std::min(
      0.0, std::log(d.t_const() * inp.areal_cost() / state.omega) -
               std::log(q_bar));
  const double shift = std::log(omega / state.omega);
  const double log_z = std::log(state.z) + (g0 - e * shift) / c.alpha_bar;
  RequireFinite(log_z, "log z");
  RequireFinite(omega, "price");

  SgaState next;
  next.alpha_bar = c.alpha_bar;
  next.beta_bar = c.beta_bar;
  next.e_coef = std::exp(c.log_e);
  next.iteration = state.iteration + 1;
  next.omega = omega;
  if (log_z <= std::log(inp.z_floor)) {
    next.z = inp.z_floor;
    next.z_floor_active = true;
  } else {
    next.z = std::exp(log_z);
  }
  next.price_at_bound = omega <= inp.price_min || omega >= inp.price_max;
  return next;
}

MarketOutcome SolveEquilibrium(const DemandSummary& d, const InpParams& inp,
                               double nu, double tol, int max_iter,
                               double omega0) {
  RequireDemands(d);
  Require(tol > 0.0, "tolerance must be positive");
  Require(max_iter >= 1, "max_iter must be at least 1");
  const double k = Exponent(nu);
  MarketOutcome out;
  SgaState s = InitialState(d, inp, nu, omega0);
  out.history.push_back(s);
  double change = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    SgaState next = SgaStep(s, d, inp, nu);
    change = std::max(std::abs(next.z - s.z) / s.z,
                      std::abs(next.omega - s.omega) / s.omega);
    next.converged = change < tol;
    out.history.push_back(next);
    s = next;
    if (s.converged) break;
  }
  if (!s.converged) {
    std::vector<std::pair<double, double>> trace;
    for (const SgaState& h : out.history) trace.emplace_back(h.z, h.omega);
    std::ostringstream os;
    os << "SGA did not converge in " << max_iter << " iterations";
    throw ConvergenceError(os.str(), change, std::move(trace));
  }
  out.omega_star = s.omega;
  out.z_star = s.z;
  out.iterations = s.iteration;
  out.z_floor_active = s.z_floor_active;
  out.price_at_bound = s.price_at_bound;
  out.revenue = d.ut_max * std::pow(s.omega, -k);
  out.cost = d.t_const() * inp.areal_cost() / s.omega;
  out.profit = out.revenue - out.cost;
  for (const MnoDemand& m : d.mnos) {
    const double lambda = m.t / s.omega;
    const double cache = m.u * std::pow(s.omega, -k);
    out.bs_density.push_back(lambda);
    out.cache_size.push_back(cache);
    out.demands.push_back(lambda * cache);
  }
  return out;
}

}  // namespace cachemarket::market
