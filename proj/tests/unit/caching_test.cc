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

#include <cmath>
#include <cstdint>

#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include "cachemarket/error.h"

namespace cachemarket::caching {
namespace {

// Independent reference: long double with Kahan summation, small terms
// first.
long double KahanHarmonic(std::int64_t n, double nu) {
  long double sum = 0.0L, comp = 0.0L;
  for (std::int64_t k = n; k >= 1; --k) {
    const long double y = std::pow(static_cast<long double>(k), -nu) - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

CatalogParams Catalog(std::int64_t f, double nu, std::int64_t s) {
  CatalogParams c;
  c.files = f;
  c.zipf = nu;
  c.cache = s;
  return c;
}

TEST(HarmonicExact, ReferenceValues) {
  EXPECT_NEAR(HarmonicExact(1000, 0.5), 61.801008765243232338, 1e-12);
  EXPECT_NEAR(HarmonicExact(1000, 1.5), 2.5491456029175750999, 1e-14);
  EXPECT_NEAR(HarmonicExact(100000, 2.0), 1.6449240668982262698, 1e-14);
  EXPECT_NEAR(HarmonicExact(10, 2.5), 1.3219208357165510186, 1e-15);
}

TEST(HarmonicExact, MatchesKahanOracle) {
  for (double nu : {0.3, 0.8, 1.2, 2.0, 4.0}) {
    for (std::int64_t n : {1, 7, 100, 5000, 200000}) {
      const double oracle = static_cast<double>(KahanHarmonic(n, nu));
      EXPECT_NEAR(HarmonicExact(n, nu), oracle, 1e-14 * oracle)
          << n << " " << nu;
    }
  }
}

TEST(HarmonicExact, EdgeCases) {
  EXPECT_EQ(HarmonicExact(0, 2.0), 0.0);
  EXPECT_EQ(HarmonicExact(1, 0.7), 1.0);
}

TEST(HarmonicAsymptotic, ApproachesExactForLargeN) {
  for (double nu : {0.5, 1.5, 2.5}) {
    double prev = INFINITY;
    for (std::int64_t n : {10, 100, 1000, 10000}) {
      const double err =
          std::abs(HarmonicAsymptotic(n, nu) - HarmonicExact(n, nu)) /
          HarmonicExact(n, nu);
      EXPECT_LT(err, prev);
      prev = err;
    }
  }
}

TEST(ZetaRiemann, MatchesBoost) {
  for (double nu : {0.3, 0.5, 0.9, 1.1, 1.5, 2.0, 3.7, 8.0}) {
    const double oracle = boost::math::zeta(nu);
    EXPECT_NEAR(ZetaRiemann(nu), oracle, 1e-13 * std::abs(oracle)) << nu;
  }
}

TEST(ZipfPmf, SumsToOne) {
  const CatalogParams c = Catalog(500, 0.9, 0);
  double sum = 0.0;
  for (std::int64_t d = 1; d <= c.files; ++d) sum += ZipfPmf(d, c);
  EXPECT_NEAR(sum, 1.0, 1e-13);
  EXPECT_THROW(ZipfPmf(0, c), InvalidArgument);
  EXPECT_THROW(ZipfPmf(501, c), InvalidArgument);
}

TEST(HitProbExact, Bounds) {
  EXPECT_EQ(HitProbExact(Catalog(1000, 0.8, 0)), 0.0);
  EXPECT_EQ(HitProbExact(Catalog(1000, 0.8, 1000)), 1.0);
  double prev = 0.0;
  for (std::int64_t s = 1; s <= 1000; s += 37) {
    const double p = HitProbExact(Catalog(1000, 1.5, s));
    EXPECT_GT(p, prev);
    EXPECT_LE(p, 1.0);
    prev = p;
  }
}

TEST(HitProbExact, MoreSkewMeansMoreHits) {
  double prev = 0.0;
  for (double nu : {0.2, 0.5, 0.9, 1.1, 1.6, 2.5}) {
    const double p = HitProbExact(Catalog(10000, nu, 50));
    EXPECT_GT(p, prev);
    prev = p;
  }
}

TEST(HitProbAsymptotic, WithinOnePercentOverStatedRanges) {
  for (std::int64_t s = 30; s <= 1000; ++s) {
    const CatalogParams c = Catalog(1000, 0.5, s);
    EXPECT_LT(std::abs(HitProbAsymptotic(c) - HitProbExact(c)) / HitProbExact(c),
              0.01)
        << s;
  }
  for (std::int64_t s = 10; s <= 1000; ++s) {
    const CatalogParams c = Catalog(1000, 1.5, s);
    EXPECT_LT(std::abs(HitProbAsymptotic(c) - HitProbExact(c)) / HitProbExact(c),
              0.01)
        << s;
  }
}

TEST(HitProbAsymptotic, ClampedStaysInUnitInterval) {
  for (std::int64_t s = 1; s <= 20; ++s) {
    const double p = HitProbAsymptoticClamped(Catalog(1000, 0.5, s));
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
  EXPECT_THROW(HitProbAsymptoticClamped(Catalog(1000, 0.5, 0)), InvalidArgument);
}

TEST(HitProbAsymptoticRatio, CloseForLargeCatalog) {
  const CatalogParams c = Catalog(100000, 2.0, 100);
  EXPECT_NEAR(HitProbAsymptoticRatio(c), HitProbExact(c), 1e-4);
}

TEST(HitProbFractionLimit, LargeCatalogLimitAndInverse) {
  // Finite-F correction is about |zeta(0.6)| (1 - 0.1^0.4) / (F^0.4 / 0.4):
  // 1.9e-3 at F = 1e6, and it shrinks like F^-0.4.
  double prev_gap = 1.0;
  for (std::int64_t f : {10000, 100000, 1000000}) {
    const double gap =
        std::abs(HitProbFractionLimit(0.1, 0.6) - HitProbExact(Catalog(f, 0.6, f / 10)));
    const double bound = std::abs(ZetaRiemann(0.6)) * (1.0 - std::pow(0.1, 0.4)) /
                         (std::pow(static_cast<double>(f), 0.4) / 0.4);
    EXPECT_LT(gap, 1.05 * bound) << f;
    EXPECT_LT(gap, prev_gap);
    prev_gap = gap;
  }
  for (double p : {0.05, 0.3, 0.9}) {
    EXPECT_NEAR(HitProbFractionLimit(CacheFractionForHit(p, 0.6), 0.6), p,
                1e-14);
  }
}

TEST(CatalogParams, RejectsInvalid) {
  EXPECT_THROW(HitProbExact(Catalog(100, 1.0, 10)), InvalidArgument);
  EXPECT_THROW(HitProbExact(Catalog(100, 0.8, 101)), InvalidArgument);
  EXPECT_THROW(HitProbExact(Catalog(0, 0.8, 0)), InvalidArgument);
  EXPECT_THROW(HitProbExact(Catalog(100, -0.5, 10)), InvalidArgument);
  EXPECT_THROW(ZetaRiemann(1.0), InvalidArgument);
}

}  // namespace
}  // namespace cachemarket::caching
