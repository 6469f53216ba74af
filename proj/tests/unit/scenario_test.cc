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

#include "scenario.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <gtest/gtest.h>

namespace cachemarket::cli {
namespace {

TEST(BaselineScenario, Values) {
  const Scenario s = BaselineScenario();
  EXPECT_EQ(s.network.power, 1.0);
  EXPECT_NEAR(s.network.noise, 1e-18, 1e-30);
  EXPECT_EQ(s.network.path_loss, 5.0);
  EXPECT_EQ(s.network.sinr_threshold, 10.0);
  EXPECT_EQ(s.network.subchannels, 6);
  EXPECT_DOUBLE_EQ(s.network.ue_density, 60.0 / (std::numbers::pi * 250000.0));
  EXPECT_EQ(s.network.activity, 0.014);
  EXPECT_EQ(s.catalog.files, 100000);
  EXPECT_EQ(s.catalog.file_bits, 1e9);
  EXPECT_EQ(s.queue.servers, 1);
  EXPECT_EQ(s.queue.service, 5e-3);
  EXPECT_EQ(s.queue.arrivals, 0.8);
  EXPECT_EQ(s.queue.cv_arrival, 2.0);
  EXPECT_EQ(s.queue.cv_service, 1.0);
  EXPECT_EQ(s.budget.threshold, 1e-3);
  EXPECT_EQ(s.budget.violation, 0.1);
  ASSERT_EQ(s.mnos.size(), 3u);
  EXPECT_EQ(s.MnoNetwork(0).bandwidth, 3e8);
  EXPECT_EQ(s.MnoNetwork(1).bandwidth, 5e8);
  EXPECT_EQ(s.MnoNetwork(2).bandwidth, 1e9);
  EXPECT_EQ(s.Inp().mnos, 3);
  EXPECT_EQ(s.Inp().power_price, 10.0);
  EXPECT_EQ(s.Inp().circuit_power, 1.0);
}

TEST(ParseScenario, EmptyTextIsTheBaseline) {
  EXPECT_EQ(SerializeScenario(ParseScenario("")),
            SerializeScenario(BaselineScenario()));
}

TEST(ParseScenario, DecibelKeys) {
  const Scenario s = ParseScenario(
      "network:\n  sigma2_dbm: -120\n  t_bar_db: 13\n  p_dbm: 33\n");
  EXPECT_NEAR(s.network.noise, 1e-15, 1e-27);
  EXPECT_NEAR(s.network.sinr_threshold, std::pow(10.0, 1.3), 1e-12);
  EXPECT_NEAR(s.network.power, std::pow(10.0, 0.3), 1e-12);
  const Scenario w = ParseScenario("network:\n  p_db: 0\n");
  EXPECT_DOUBLE_EQ(w.network.power, 1.0);
}

TEST(ParseScenario, OverridesAndMnos) {
  const Scenario s = ParseScenario(R"(
catalog:
  nu: 2.5
  S: 50
inp:
  theta: 20
mnos:
  - name: red
    W: 2e8
    L: 4
  - name: blue
)");
  EXPECT_EQ(s.catalog.zipf, 2.5);
  EXPECT_EQ(s.catalog.cache, 50);
  EXPECT_EQ(s.inp.power_price, 20.0);
  ASSERT_EQ(s.mnos.size(), 2u);
  EXPECT_EQ(s.mnos[0].name, "red");
  EXPECT_EQ(s.MnoNetwork(0).subchannels, 4);
  EXPECT_EQ(s.MnoNetwork(1).bandwidth, s.network.bandwidth);
  EXPECT_EQ(s.Inp().mnos, 2);
}

TEST(ParseScenario, SweepForms) {
  const Scenario a = ParseScenario(
      "sweep:\n  variable: network.lambda\n  grid: [1e-5, 1e-4]\n");
  ASSERT_TRUE(a.sweep);
  EXPECT_EQ(a.sweep->variable, "network.lambda");
  EXPECT_EQ(a.sweep->grid, (std::vector<double>{1e-5, 1e-4}));
  const Scenario b = ParseScenario(
      "sweep:\n  variable: catalog.nu\n"
      "  grid: {start: 1.5, stop: 3.5, count: 5, scale: linear}\n");
  EXPECT_EQ(b.sweep->grid, (std::vector<double>{1.5, 2.0, 2.5, 3.0, 3.5}));
  const Scenario c = ParseScenario(
      "sweep:\n  variable: catalog.S\n"
      "  grid: {start: 1, stop: 100, count: 3, scale: log}\n");
  EXPECT_NEAR(c.sweep->grid[1], 10.0, 1e-12);
  const Scenario d =
      ParseScenario("sweep:\n  variable: catalog.S\n  grid: []\n");
  EXPECT_TRUE(d.sweep->grid.empty());
}

void ExpectConfigError(const std::string& text, const std::string& fragment) {
  try {
    ParseScenario(text);
    FAIL() << "accepted: " << text;
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("line"), std::string::npos) << what;
    EXPECT_NE(what.find("column"), std::string::npos) << what;
    EXPECT_NE(what.find(fragment), std::string::npos) << what;
  }
}

TEST(ParseScenario, ErrorsCarryLocation) {
  ExpectConfigError("network:\n  alpha: [1\n", "");
  ExpectConfigError("netwrk:\n  alpha: 4\n", "unknown section");
  ExpectConfigError("network:\n  alpah: 4\n", "unknown key");
  ExpectConfigError("network:\n  alpha: four\n", "must be a number");
  ExpectConfigError("catalog:\n  nu: 1\n", "pole");
  ExpectConfigError("network:\n  alpha: 1.5\n", "alpha");
  ExpectConfigError("catalog:\n  t_bar_db: 3\n", "dB");
  ExpectConfigError("network:\n  p: 2\n  p_dbm: 30\n", "another unit");
  ExpectConfigError("sweep:\n  variable: network.nope\n  grid: [1]\n",
                    "not a scalar field");
  ExpectConfigError("mnos: 3\n", "list");
  ExpectConfigError("mnos:\n  - W: 1e9\n    colour: red\n", "unknown MNO key");
  ExpectConfigError("queue:\n  phi: 500\n", "queue");
  ExpectConfigError("mnos: []\n", "");
}

TEST(SerializeScenario, RoundTrips) {
  Scenario s = BaselineScenario();
  s.network.path_loss = 3.7;
  s.network.noise = 1.2345678901234567e-17;
  s.catalog.zipf = 0.65;
  s.queue.servers = 3;
  s.inp.trust_region = 4.0;
  s.sim.seed = 18446744073709551615ull;
  s.mnos[1].subchannels = 2;
  s.mnos[1].activity = 0.5;
  s.sweep = SweepSpec{"inp.theta", {1.0, 2.5}};
  const std::string text = SerializeScenario(s);
  const Scenario back = ParseScenario(text);
  EXPECT_EQ(SerializeScenario(back), text);
  EXPECT_EQ(back.network.noise, s.network.noise);
  EXPECT_EQ(back.sim.seed, s.sim.seed);
  EXPECT_EQ(back.mnos[1].subchannels, 2);
  EXPECT_EQ(back.sweep->grid, s.sweep->grid);
  EXPECT_EQ(ConfigHash(back), ConfigHash(s));
}

TEST(ConfigHash, StableAndSensitive) {
  const Scenario a = BaselineScenario();
  Scenario b = a;
  EXPECT_EQ(ConfigHash(a), ConfigHash(b));
  EXPECT_EQ(ConfigHash(a).size(), 16u);
  b.budget.threshold = 2e-3;
  EXPECT_NE(ConfigHash(a), ConfigHash(b));
}

TEST(Fields, GetSetRoundTrip) {
  for (const std::string& name : FieldNames()) {
    EXPECT_TRUE(HasField(name));
    Scenario s = BaselineScenario();
    const double v = GetField(s, name);
    SetField(s, name, v);
    EXPECT_EQ(GetField(s, name), v) << name;
  }
  EXPECT_FALSE(HasField("network.bogus"));
  Scenario s = BaselineScenario();
  SetField(s, "network.lambda", 3e-4);
  EXPECT_EQ(s.network.bs_density, 3e-4);
  EXPECT_THROW(SetField(s, "network.L", 2.5), ConfigError);
  EXPECT_THROW(GetField(s, "bogus"), ConfigError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(2.0), "2");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> e(-300.0, 300.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::pow(10.0, e(rng)) * (i % 2 ? -1.0 : 1.0);
    const std::string s = FormatDouble(x);
    double y = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), y);
    EXPECT_EQ(x, y);
    EXPECT_EQ(s.find(','), std::string::npos);
  }
}

}  // namespace
}  // namespace cachemarket::cli
