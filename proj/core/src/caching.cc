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

#include "cachemarket/caching.h"

#include <algorithm>
#include <cmath>

#include "cachemarket/error.h"
#include "cachemarket/special.h"

namespace cachemarket::caching {
namespace {

void RequireExponent(double nu) {
  Require(std::isfinite(nu) && nu > 0.0, "nu must be positive");
  Require(nu != 1.0, "nu = 1 is a pole of the zeta function and is excluded");
}

}  // namespace

void CatalogParams::Validate() const {
  Require(files >= 1, "F must be at least 1");
  Require(cache >= 0 && cache <= files, "S must lie in [0, F]");
  RequireExponent(zipf);
  Require(std::isfinite(file_bits) && file_bits > 0.0, "x_f must be positive");
}

double HarmonicExact(std::int64_t n, double nu) {
  Require(n >= 0, "harmonic number index must be non-negative");
  Require(std::isfinite(nu), "harmonic exponent must be finite");
  double sum = 0.0;
  double carry = 0.0;
  for (std::int64_t k = n; k >= 1; --k) {
    const double term = std::pow(static_cast<double>(k), -nu);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

double HarmonicAsymptotic(double n, double nu) {
  RequireExponent(nu);
  return special::RiemannZeta(nu) - std::pow(n + 1.0, 1.0 - nu) / (nu - 1.0);
}

double ZipfPmf(std::int64_t rank, const CatalogParams& cat) {
  cat.Validate();
  Require(rank >= 1 && rank <= cat.files, "rank must lie in [1, F]");
  return std::pow(static_cast<double>(rank), -cat.zipf) /
         HarmonicExact(cat.files, cat.zipf);
}

double HitProbExact(const CatalogParams& cat) {
  cat.Validate();
  if (cat.cache == cat.files) return 1.0;
  return HarmonicExact(cat.cache, cat.zipf) /
         HarmonicExact(cat.files, cat.zipf);
}

double ZetaRiemann(double nu) {
  RequireExponent(nu);
  return special::RiemannZeta(nu);
}

double HitProbAsymptotic(const CatalogParams& cat) {
  cat.Validate();
  Require(cat.cache >= 1, "asymptotic hit probability needs S >= 1");
  return HarmonicAsymptotic(static_cast<double>(cat.cache), cat.zipf) /
         HarmonicExact(cat.files, cat.zipf);
}

double HitProbAsymptoticClamped(const CatalogParams& cat) {
  return std::clamp(HitProbAsymptotic(cat), 0.0, 1.0);
}

double HitProbAsymptoticRatio(const CatalogParams& cat) {
  cat.Validate();
  Require(cat.cache >= 1, "asymptotic hit probability needs S >= 1");
  return HarmonicAsymptotic(static_cast<double>(cat.cache), cat.zipf) /
         HarmonicAsymptotic(static_cast<double>(cat.files), cat.zipf);
}

double HitProbFractionLimit(double s, double nu) {
  Require(nu > 0.0 && nu < 1.0,
          "fraction limit needs 0 < nu < 1; for nu > 1 the hit probability "
          "tends to 1");
  Require(s > 0.0 && s <= 1.0, "cached fraction must lie in (0, 1]");
  return std::pow(s, 1.0 - nu);
}

double CacheFractionForHit(double p_hit, double nu) {
  Require(nu > 0.0 && nu < 1.0, "fraction limit needs 0 < nu < 1");
  Require(p_hit > 0.0 && p_hit <= 1.0, "hit probability must lie in (0, 1]");
  return std::pow(p_hit, 1.0 / (1.0 - nu));
}

}  // namespace cachemarket::caching
