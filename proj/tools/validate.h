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

// Analytic models against their simulation and brute-force references.

#ifndef CACHEMARKET_TOOLS_VALIDATE_H_
#define CACHEMARKET_TOOLS_VALIDATE_H_

#include <string>
#include <vector>

#include "scenario.h"
#include "table.h"

namespace cachemarket::cli {

struct ValidateOptions {
  // Multiplies beta before the analytic coverage; 1 leaves it alone. Used
  // to check that the coverage comparison can fail.
  double beta_scale = 1.0;
};

struct CheckResult {
  std::string name;
  double analytic = 0.0;
  double reference = 0.0;
  double statistic = 0.0;
  double tolerance = 0.0;
  bool skipped = false;
  bool pass = false;
};

// coverage and hit_rate pass when |analytic - simulated| is inside the 99%
// interval; queue within 5% relative; gp_grid within 1% and gp_gap below
// 1e-9 per MNO; sga_grid within 0.5%. The optimizer checks are skipped for
// nu < 1.
std::vector<CheckResult> RunValidation(const Scenario& s,
                                       const ValidateOptions& opts);

Table ValidationTable(const std::vector<CheckResult>& checks);

}  // namespace cachemarket::cli

#endif  // CACHEMARKET_TOOLS_VALIDATE_H_
