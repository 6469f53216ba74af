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

// Zipf content popularity and the hit probability of a cache holding the S
// most popular files, exactly and through its zeta asymptotic.

#ifndef CACHEMARKET_CACHING_H_
#define CACHEMARKET_CACHING_H_

#include <cstdint>

namespace cachemarket::caching {

struct CatalogParams {
  std::int64_t files = 1;     // F
  double zipf = 0.8;          // nu > 0, nu != 1
  std::int64_t cache = 0;     // S, 0 <= S <= F
  double file_bits = 1e9;     // x_f

  void Validate() const;
};

// H_{n,nu} = sum_{k=1..n} k^-nu, summed from the smallest term upward with
// Neumaier compensation.
double HarmonicExact(std::int64_t n, double nu);

// First-order zeta form zeta(nu) - (n+1)^(1-nu)/(nu-1).
double HarmonicAsymptotic(double n, double nu);

// d^-nu / H_{F,nu}. Throws InvalidArgument for a rank outside [1, F].
double ZipfPmf(std::int64_t rank, const CatalogParams& cat);

// H_{S,nu} / H_{F,nu}.
double HitProbExact(const CatalogParams& cat);

double ZetaRiemann(double nu);

// [zeta(nu) - (S+1)^(1-nu)/(nu-1)] / H_{F,nu}. May leave [0, 1] for small S.
double HitProbAsymptotic(const CatalogParams& cat);
double HitProbAsymptoticClamped(const CatalogParams& cat);

// Numerator and denominator both asymptotic.
double HitProbAsymptoticRatio(const CatalogParams& cat);

// s^(1-nu) for a cached fraction s of a large catalog, 0 < nu < 1.
double HitProbFractionLimit(double s, double nu);

// Inverse of the above: s = P^(1/(1-nu)).
double CacheFractionForHit(double p_hit, double nu);

}  // namespace cachemarket::caching

#endif  // CACHEMARKET_CACHING_H_
