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

#include "cachemarket/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cachemarket/error.h"
#include "cachemarket/special.h"
#include "quadrature.h"

namespace cachemarket::geometry {
namespace {

constexpr double kAbsTol = 1e-9;
// Exponential density mass beyond 60 means is below 1e-25.
constexpr double kFadingCutoff = 60.0;
// The coverage integrand starts at 1 and is truncated once it drops below
// 1e-14 of that peak.
const double kCoverageLogCutoff = std::log(1e14);

double CoverageIntegral(const NetworkParams& net, double beta) {
  const double a_bar =
      std::numbers::pi *
      (net.interferer_density() * (beta - 1.0) + net.active_density());
  const double b_bar = net.sinr_threshold * net.noise / net.power;
  const double half_alpha = net.path_loss / 2.0;
  auto exponent = [&](double z) {
    return a_bar * z + b_bar * std::pow(z, half_alpha);
  };
  double hi = kCoverageLogCutoff / a_bar;
  if (b_bar > 0.0) {
    hi = std::min(hi, std::pow(kCoverageLogCutoff / b_bar, 1.0 / half_alpha));
  }
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (exponent(mid) < kCoverageLogCutoff ? lo : hi) = mid;
  }
  const double z_max = hi;
  auto integrand = [&](double z) { return std::exp(-exponent(z)); };
  const double scale = std::numbers::pi * net.active_density();
  internal::Quadrature q = internal::Integrate(integrand, 0.0, z_max);
  q.value *= scale;
  q.error *= scale;
  internal::CheckQuadrature(q, kAbsTol, "coverage integral");
  return q.value;
}

void CheckBeta(double beta) {
  Require(std::isfinite(beta) && beta >= 0.0, "beta must be finite and >= 0");
}

}  // namespace

void NetworkParams::Validate() const {
  Require(std::isfinite(power) && power > 0.0, "p must be positive");
  Require(std::isfinite(noise) && noise >= 0.0, "sigma2 must be >= 0");
  Require(std::isfinite(path_loss) && path_loss > 2.0, "alpha must exceed 2");
  Require(std::isfinite(sinr_threshold) && sinr_threshold > 0.0,
          "T_bar must be positive");
  Require(std::isfinite(bs_density) && bs_density > 0.0,
          "lambda must be positive");
  Require(subchannels >= 1, "L must be at least 1");
  Require(std::isfinite(bandwidth) && bandwidth > 0.0, "W must be positive");
  Require(std::isfinite(ue_density) && ue_density > 0.0,
          "xi must be positive");
  Require(activity > 0.0 && activity < 1.0, "eta must lie in (0, 1)");
}

const char* CoverageMethodName(CoverageMethod method) {
  switch (method) {
    case CoverageMethod::kExactIntegral:
      return "exact_integral";
    case CoverageMethod::kClosedForm:
      return "closed_form";
    case CoverageMethod::kInterferenceLimited:
      return "interference_limited";
  }
  return "unknown";
}

double ComputeBeta(const NetworkParams& net) {
  net.Validate();
  const double delta = 2.0 / net.path_loss;
  const double p = net.power;
  const double t = net.sinr_threshold;
  const double gamma_neg = std::tgamma(-delta);
  auto integrand = [&](double g) {
    if (g <= 0.0) return 0.0;
    const double inc = special::UpperIncompleteGamma(-delta, t * g / p);
    return std::exp(-g / p) / p * std::pow(g, delta) * (inc - gamma_neg);
  };
  // Split at the fading mean so the g^delta endpoint behaviour stays local.
  internal::Quadrature head = internal::Integrate(integrand, 0.0, p);
  internal::Quadrature tail = internal::Integrate(integrand, p, kFadingCutoff * p);
  const double prefactor = delta * std::pow(t / p, delta);
  internal::Quadrature beta{prefactor * (head.value + tail.value),
                            prefactor * (head.error + tail.error)};
  internal::CheckQuadrature(beta, kAbsTol, "beta");
  return beta.value;
}

CoverageResult CoverageExact(const NetworkParams& net) {
  return CoverageExact(net, ComputeBeta(net));
}

CoverageResult CoverageExact(const NetworkParams& net, double beta) {
  net.Validate();
  CheckBeta(beta);
  const double p_c = std::clamp(CoverageIntegral(net, beta), 0.0, 1.0);
  return {p_c, beta, CoverageMethod::kExactIntegral};
}

CoverageResult CoverageClosedForm(const NetworkParams& net) {
  return CoverageClosedForm(net, ComputeBeta(net));
}

CoverageResult CoverageClosedForm(const NetworkParams& net, double beta) {
  net.Validate();
  CheckBeta(beta);
  const double delta = 2.0 / net.path_loss;
  const double noise_term =
      net.path_loss /
      (2.0 * std::numbers::pi * net.bs_density * std::tgamma(delta)) *
      std::pow(net.sinr_threshold * net.noise / net.power, delta);
  const double denom = 1.0 + (beta - 1.0) / net.subchannels + noise_term;
  return {1.0 / denom, beta, CoverageMethod::kClosedForm};
}

CoverageResult CoverageInterferenceLimited(const NetworkParams& net) {
  return CoverageInterferenceLimited(net, ComputeBeta(net));
}

CoverageResult CoverageInterferenceLimited(const NetworkParams& net,
                                           double beta) {
  net.Validate();
  CheckBeta(beta);
  const double l = net.subchannels;
  return {l / (beta + l - 1.0), beta, CoverageMethod::kInterferenceLimited};
}

double Throughput(const NetworkParams& net, double p_c) {
  net.Validate();
  Require(p_c >= 0.0 && p_c <= 1.0, "coverage probability must lie in [0, 1]");
  return p_c * (net.bandwidth / net.subchannels) *
         std::log2(1.0 + net.sinr_threshold);
}

}  // namespace cachemarket::geometry
