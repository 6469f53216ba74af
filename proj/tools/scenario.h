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

// Scenario files. A scenario is YAML with one table per parameter group; see
// README.md for the schema. Decibel inputs use a `_db` (dBW) or `_dbm` key
// suffix and are converted to linear units here, once.

#ifndef CACHEMARKET_TOOLS_SCENARIO_H_
#define CACHEMARKET_TOOLS_SCENARIO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cachemarket/caching.h"
#include "cachemarket/delay.h"
#include "cachemarket/error.h"
#include "cachemarket/geometry.h"
#include "cachemarket/market.h"
#include "cachemarket/montecarlo.h"

namespace cachemarket::cli {

// Parse or schema error; the message carries the line and column.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct MnoSpec {
  std::string name;
  std::optional<double> bandwidth;
  std::optional<int> subchannels;
  std::optional<double> ue_density;
  std::optional<double> activity;
};

struct SweepSpec {
  std::string variable;  // a name from FieldNames()
  std::vector<double> grid;
};

struct SolverSettings {
  double price = 10.0;  // omega offered to followers by mno-solve
  double tol = 1e-9;
  int max_iter = 200;
  double omega0 = 1.0;
  double slack = 1.05;  // fixed-intensity route, nu < 1
};

struct Scenario {
  geometry::NetworkParams network;
  caching::CatalogParams catalog;
  delay::QueueParams queue;
  delay::DelayBudget budget;
  std::vector<MnoSpec> mnos;
  market::InpParams inp;
  SolverSettings solver;
  montecarlo::SimConfig sim;
  std::optional<SweepSpec> sweep;

  // Network of MNO k: the shared network with the MNO's overrides.
  geometry::NetworkParams MnoNetwork(std::size_t k) const;
  // Leader parameters with K and p taken from the MNO list and network.
  market::InpParams Inp() const;

  void Validate() const;
};

// p = 1 W, sigma^2 = -150 dBm, alpha = 5, T = 10 dB, L = 6, lambda = 1e-4,
// W = 1e9, xi = 60/(pi 500^2), eta = 0.014, F = 1e5, nu = 2, S = 100,
// x_f = 1e9, m = 1, tau = 5e-3, phi = 0.8, c_a = 2, c_s = 1, D_th = 1e-3,
// gamma = 0.1, theta = 10, p_c = 1, and three MNOs with W = 3e8, 5e8, 1e9.
Scenario BaselineScenario();

Scenario ParseScenario(std::string_view text);
Scenario LoadScenario(const std::string& path);

// Canonical YAML in linear units; ParseScenario(SerializeScenario(s))
// reproduces s.
std::string SerializeScenario(const Scenario& s);

// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string ConfigHash(const Scenario& s);

// Scalar fields addressable by sweeps, e.g. "network.lambda".
std::vector<std::string> FieldNames();
bool HasField(std::string_view name);
double GetField(const Scenario& s, std::string_view name);
void SetField(Scenario& s, std::string_view name, double value);

// Shortest decimal string that parses back to the same double.
std::string FormatDouble(double x);

}  // namespace cachemarket::cli

#endif  // CACHEMARKET_TOOLS_SCENARIO_H_
