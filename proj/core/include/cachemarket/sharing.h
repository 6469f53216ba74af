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

// Division of the cache rent among MNOs. A coalition pays for the largest
// cache intensity among its members, v(C) = omega* max_{k in C} d_k.

#ifndef CACHEMARKET_SHARING_H_
#define CACHEMARKET_SHARING_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cachemarket::sharing {

struct RentProblem {
  double price = 0.0;           // omega*
  std::vector<double> demands;  // lambda_k S_k
  std::vector<std::string> labels;

  std::size_t players() const { return demands.size(); }
  void Validate() const;
};

struct CostAllocation {
  std::vector<double> shares;
  double total = 0.0;            // v(K)
  std::size_t share_updates = 0;  // additions into `shares`
};

// Bit k of the mask selects player k.
using Coalition = std::uint32_t;

double CharFn(Coalition coalition, const RentProblem& prob);

constexpr std::size_t kMaxExactPlayers = 20;

// Shapley value by enumeration of all coalitions with the weights
// (|C|-1)! (K-|C|)! / K!. Throws InvalidArgument above kMaxExactPlayers.
CostAllocation ShapleyExact(const RentProblem& prob);

// Same, for an arbitrary game on `players` players with v(empty) = 0.
CostAllocation ShapleyExact(std::size_t players,
                            const std::function<double(Coalition)>& value);

// Airport-runway allocation: each increment of the sorted demands is split
// equally among the players whose demand reaches it. Ties are ordered by
// index. O(K^2) share updates.
CostAllocation AirportShare(const RentProblem& prob);

}  // namespace cachemarket::sharing

#endif  // CACHEMARKET_SHARING_H_
