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

#include "cachemarket/sharing.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "cachemarket/error.h"

namespace cachemarket::sharing {

void RentProblem::Validate() const {
  Require(!demands.empty(), "a rent problem needs at least one MNO");
  Require(std::isfinite(price) && price >= 0.0, "price must be >= 0");
  for (double d : demands) {
    Require(std::isfinite(d) && d >= 0.0, "demands must be >= 0");
  }
  Require(labels.empty() || labels.size() == demands.size(),
          "labels must match demands");
}

double CharFn(Coalition coalition, const RentProblem& prob) {
  double best = 0.0;
  for (std::size_t k = 0; k < prob.demands.size(); ++k) {
    if (coalition & (Coalition{1} << k)) best = std::max(best, prob.demands[k]);
  }
  return prob.price * best;
}

CostAllocation ShapleyExact(std::size_t players,
                            const std::function<double(Coalition)>& value) {
  Require(players >= 1, "a game needs at least one player");
  Require(players <= kMaxExactPlayers,
          "too many players for enumeration; use the airport allocation");
  const Coalition full = (Coalition{1} << players) - 1;
  std::vector<double> v(std::size_t{full} + 1);
  for (Coalition c = 1; c <= full; ++c) v[c] = value(c);
  // w[s] = (s-1)! (K-s)! / K! = 1 / (K * binom(K-1, s-1)).
  std::vector<double> weight(players + 1, 0.0);
  double binom = 1.0;
  for (std::size_t s = 1; s <= players; ++s) {
    weight[s] = 1.0 / (static_cast<double>(players) * binom);
    binom = binom * static_cast<double>(players - s) / static_cast<double>(s);
  }
  CostAllocation out;
  out.shares.assign(players, 0.0);
  for (Coalition c = 1; c <= full; ++c) {
    const double w = weight[std::popcount(c)];
    for (std::size_t k = 0; k < players; ++k) {
      const Coalition bit = Coalition{1} << k;
      if (!(c & bit)) continue;
      out.shares[k] += w * (v[c] - v[c & ~bit]);
      ++out.share_updates;
    }
  }
  out.total = v[full];
  return out;
}

CostAllocation ShapleyExact(const RentProblem& prob) {
  prob.Validate();
  return ShapleyExact(prob.players(),
                      [&prob](Coalition c) { return CharFn(c, prob); });
}

CostAllocation AirportShare(const RentProblem& prob) {
  prob.Validate();
  const std::size_t n = prob.players();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return prob.demands[a] < prob.demands[b];
  });
  CostAllocation out;
  out.shares.assign(n, 0.0);
  double previous = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double current = prob.demands[order[i]];
    const double piece =
        prob.price * (current - previous) / static_cast<double>(n - i);
    for (std::size_t j = i; j < n; ++j) {
      out.shares[order[j]] += piece;
      ++out.share_updates;
    }
    previous = current;
  }
  out.total = prob.price * prob.demands[order.back()];
  return out;
}

}  // namespace cachemarket::sharing
