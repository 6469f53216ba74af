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
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace cachemarket::cli {
namespace {

struct Field {
  const char* name;
  double (*get)(const Scenario&);
  void (*set)(Scenario&, double);
  bool integral;
};

template <typename T>
T ToIntegral(double v, const char* name) {
  if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 9.0e15) {
    throw ConfigError(std::string(name) + " must be an integer");
  }
  return static_cast<T>(v);
}

#define CM_FIELD(NAME, EXPR)                                        \
  Field {                                                           \
    NAME, [](const Scenario& s) { return static_cast<double>(s.EXPR); }, \
        [](Scenario& s, double v) { s.EXPR = v; }, false           \
  }
#define CM_INT_FIELD(NAME, EXPR, TYPE)                               \
  Field {                                                            \
    NAME, [](const Scenario& s) { return static_cast<double>(s.EXPR); }, \
        [](Scenario& s, double v) { s.EXPR = ToIntegral<TYPE>(v, NAME); }, \
        true                                                         \
  }

const std::vector<Field>& Registry() {
  static const std::vector<Field> fields = {
      CM_FIELD("network.p", network.power),
      CM_FIELD("network.sigma2", network.noise),
      CM_FIELD("network.alpha", network.path_loss),
      CM_FIELD("network.t_bar", network.sinr_threshold),
      CM_FIELD("network.lambda", network.bs_density),
      CM_INT_FIELD("network.L", network.subchannels, int),
      CM_FIELD("network.W", network.bandwidth),
      CM_FIELD("network.xi", network.ue_density),
      CM_FIELD("network.eta", network.activity),
      CM_INT_FIELD("catalog.F", catalog.files, std::int64_t),
      CM_FIELD("catalog.nu", catalog.zipf),
      CM_INT_FIELD("catalog.S", catalog.cache, std::int64_t),
      CM_FIELD("catalog.x_f", catalog.file_bits),
      CM_INT_FIELD("queue.m", queue.servers, int),
      CM_FIELD("queue.tau", queue.service),
      CM_FIELD("queue.phi", queue.arrivals),
      CM_FIELD("queue.c_a", queue.cv_arrival),
      CM_FIELD("queue.c_s", queue.cv_service),
      CM_FIELD("budget.d_th", budget.threshold),
      CM_FIELD("budget.gamma", budget.violation),
      CM_FIELD("inp.theta", inp.power_price),
      CM_FIELD("inp.p_c", inp.circuit_power),
      CM_FIELD("inp.omega_min", inp.price_min),
      CM_FIELD("inp.omega_max", inp.price_max),
      CM_FIELD("inp.trust_region", inp.trust_region),
      CM_FIELD("inp.z_floor", inp.z_floor),
      CM_FIELD("solver.omega", solver.price),
      CM_FIELD("solver.tol", solver.tol),
      CM_INT_FIELD("solver.max_iter", solver.max_iter, int),
      CM_FIELD("solver.omega0", solver.omega0),
      CM_FIELD("solver.slack", solver.slack),
      CM_INT_FIELD("montecarlo.trials", sim.trials, std::int64_t),
      CM_FIELD("montecarlo.region_radius", sim.region_radius),
      CM_INT_FIELD("montecarlo.warmup", sim.warmup, std::int64_t),
      CM_INT_FIELD("montecarlo.batches", sim.batch_count, int),
  };
  return fields;
}

#undef CM_FIELD
#undef CM_INT_FIELD

const Field* FindField(std::string_view name) {
  for (const Field& f : Registry()) {
    if (name == f.name) return &f;
  }
  return nullptr;
}

std::string Located(const YAML::Mark& mark, const std::string& msg) {
  std::ostringstream os;
  os << "config line " << mark.line + 1 << ", column " << mark.column + 1
     << ": " << msg;
  return os.str();
}

double AsDouble(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) {
    throw ConfigError(Located(node.Mark(), key + " must be a number"));
  }
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    throw ConfigError(Located(node.Mark(), key + " must be a number, got '" +
                                               node.Scalar() + "'"));
  }
}

std::string AsString(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) {
    throw ConfigError(Located(node.Mark(), key + " must be a string"));
  }
  return node.Scalar();
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Applies one `section.key: value` entry, converting decibel keys. Returns
// the linear field name.
std::string ApplyScalar(Scenario& s, const std::string& section,
                 const std::string& key, const YAML::Node& value) {
  double v = AsDouble(value, section + "." + key);
  std::string base = key;
  if (EndsWith(key, "_dbm")) {
    base = key.substr(0, key.size() - 4);
    if (section != "network" || (base != "p" && base != "sigma2")) {
      throw ConfigError(Located(value.Mark(), "dBm is only accepted for "
                                              "network.p and network.sigma2"));
    }
    v = std::pow(10.0, (v - 30.0) / 10.0);
  } else if (EndsWith(key, "_db")) {
    base = key.substr(0, key.size() - 3);
    if (section != "network" ||
        (base != "p" && base != "sigma2" && base != "t_bar")) {
      throw ConfigError(Located(value.Mark(),
                                "dB is only accepted for network.p, "
                                "network.sigma2 and network.t_bar"));
    }
    v = std::pow(10.0, v / 10.0);
  }
  const std::string full = section + "." + base;
  const Field* f = FindField(full);
  if (f == nullptr) {
    throw ConfigError(Located(value.Mark(), "unknown key '" + full + "'"));
  }
  if (full == "catalog.nu" && v == 1.0) {
    throw ConfigError(Located(value.Mark(),
                              "catalog.nu = 1 is a pole of the zeta function "
                              "and is not supported"));
  }
  try {
    f->set(s, v);
  } catch (const ConfigError& e) {
    throw ConfigError(Located(value.Mark(), e.what()));
  }
  return full;
}

void ParseMnos(Scenario& s, const YAML::Node& node) {
  if (!node.IsSequence()) {
    throw ConfigError(Located(node.Mark(), "mnos must be a list"));
  }
  s.mnos.clear();
  for (const YAML::Node& entry : node) {
    if (!entry.IsMap()) {
      throw ConfigError(Located(entry.Mark(), "each MNO must be a table"));
    }
    MnoSpec m;
    m.name = "MNO-" + std::to_string(s.mnos.size() + 1);
    for (const auto& kv : entry) {
      const std::string key = kv.first.as<std::string>();
      const YAML::Node& v = kv.second;
      if (key == "name") {
        m.name = AsString(v, "mnos.name");
      } else if (key == "W") {
        m.bandwidth = AsDouble(v, "mnos.W");
      } else if (key == "L") {
        const double l = AsDouble(v, "mnos.L");
        try {
          m.subchannels = ToIntegral<int>(l, "mnos.L");
        } catch (const ConfigError& e) {
          throw ConfigError(Located(v.Mark(), e.what()));
        }
      } else if (key == "xi") {
        m.ue_density = AsDouble(v, "mnos.xi");
      } else if (key == "eta") {
        m.activity = AsDouble(v, "mnos.eta");
      } else {
        throw ConfigError(
            Located(kv.first.Mark(), "unknown MNO key '" + key + "'"));
      }
    }
    s.mnos.push_back(std::move(m));
  }
}

std::vector<double> ParseGrid(const YAML::Node& node) {
  std::vector<double> grid;
  if (node.IsSequence()) {
    for (const YAML::Node& v : node) grid.push_back(AsDouble(v, "sweep.grid"));
    return grid;
  }
  if (!node.IsMap()) {
    throw ConfigError(Located(node.Mark(),
                              "sweep.grid must be a list or a range table"));
  }
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  bool log = false;
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (key == "start") {
      start = AsDouble(kv.second, "sweep.grid.start");
    } else if (key == "stop") {
      stop = AsDouble(kv.second, "sweep.grid.stop");
    } else if (key == "count") {
      count = static_cast<int>(AsDouble(kv.second, "sweep.grid.count"));
    } else if (key == "scale") {
      const std::string scale = AsString(kv.second, "sweep.grid.scale");
      if (scale != "log" && scale != "linear") {
        throw ConfigError(Located(kv.second.Mark(),
                                  "sweep.grid.scale must be log or linear"));
      }
      log = scale == "log";
    } else {
      throw ConfigError(
          Located(kv.first.Mark(), "unknown sweep.grid key '" + key + "'"));
    }
  }
  if (count < 0 || (log && (start <= 0.0 || stop <= 0.0))) {
    throw ConfigError(Located(node.Mark(), "invalid sweep.grid range"));
  }
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    grid.push_back(log ? start * std::pow(stop / start, t)
                       : start + (stop - start) * t);
  }
  return grid;
}

void ParseSweep(Scenario& s, const YAML::Node& node) {
  if (!node.IsMap()) {
    throw ConfigError(Located(node.Mark(), "sweep must be a table"));
  }
  SweepSpec sweep;
  bool has_variable = false;
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (key == "variable") {
      sweep.variable = AsString(kv.second, "sweep.variable");
      if (!HasField(sweep.variable)) {
        throw ConfigError(Located(kv.second.Mark(),
                                  "sweep.variable '" + sweep.variable +
                                      "' is not a scalar field"));
      }
      has_variable = true;
    } else if (key == "grid") {
      sweep.grid = ParseGrid(kv.second);
    } else {
      throw ConfigError(
          Located(kv.first.Mark(), "unknown sweep key '" + key + "'"));
    }
  }
  if (!has_variable) {
    throw ConfigError(Located(node.Mark(), "sweep.variable is required"));
  }
  s.sweep = std::move(sweep);
}

}  // namespace

geometry::NetworkParams Scenario::MnoNetwork(std::size_t k) const {
  geometry::NetworkParams net = network;
  const MnoSpec& m = mnos.at(k);
  if (m.bandwidth) net.bandwidth = *m.bandwidth;
  if (m.subchannels) net.subchannels = *m.subchannels;
  if (m.ue_density) net.ue_density = *m.ue_density;
  if (m.activity) net.activity = *m.activity;
  return net;
}

market::InpParams Scenario::Inp() const {
  market::InpParams p = inp;
  p.mnos = static_cast<int>(mnos.size());
  p.bs_power = network.power;
  return p;
}

void Scenario::Validate() const {
  Require(!mnos.empty(), "a scenario needs at least one MNO");
  network.Validate();
  catalog.Validate();
  queue.Validate();
  budget.Validate();
  Inp().Validate();
  sim.Validate();
  for (std::size_t k = 0; k < mnos.size(); ++k) MnoNetwork(k).Validate();
  Require(solver.price > 0.0, "solver.omega must be positive");
  Require(solver.tol > 0.0 && solver.max_iter >= 1, "invalid solver limits");
  if (sweep) Require(HasField(sweep->variable), "unknown sweep variable");
}

Scenario BaselineScenario() {
  Scenario s;
  s.network.power = 1.0;
  s.network.noise = std::pow(10.0, (-150.0 - 30.0) / 10.0);
  s.network.path_loss = 5.0;
  s.network.sinr_threshold = 10.0;
  s.network.bs_density = 1e-4;
  s.network.subchannels = 6;
  s.network.bandwidth = 1e9;
  s.network.ue_density = 60.0 / (std::numbers::pi * 500.0 * 500.0);
  s.network.activity = 0.014;
  s.catalog.files = 100000;
  s.catalog.zipf = 2.0;
  s.catalog.cache = 100;
  s.catalog.file_bits = 1e9;
  s.queue.servers = 1;
  s.queue.service = 5e-3;
  s.queue.arrivals = 0.8;
  s.queue.cv_arrival = 2.0;
  s.queue.cv_service = 1.0;
  s.budget.threshold = 1e-3;
  s.budget.violation = 0.1;
  s.inp.power_price = 10.0;
  s.inp.circuit_power = 1.0;
  s.mnos = {{"MNO-1", 3e8, {}, {}, {}},
            {"MNO-2", 5e8, {}, {}, {}},
            {"MNO-3", 1e9, {}, {}, {}}};
  return s;
}

namespace {

void ValidateSection(const Scenario& s, const std::string& section) {
  if (section == "network") s.network.Validate();
  if (section == "catalog") s.catalog.Validate();
  if (section == "queue") s.queue.Validate();
  if (section == "budget") s.budget.Validate();
  if (section == "inp") s.Inp().Validate();
  if (section == "montecarlo") s.sim.Validate();
}

}  // namespace

Scenario ParseScenario(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(Located(e.mark, e.msg));
  }
  Scenario s = BaselineScenario();
  if (root.IsNull()) return s;
  if (!root.IsMap()) {
    throw ConfigError(Located(root.Mark(), "top level must be a table"));
  }
  static const char* kSections[] = {"network", "catalog", "queue", "budget",
                                    "inp",     "solver",  "montecarlo"};
  for (const auto& kv : root) {
    const std::string section = kv.first.as<std::string>();
    const YAML::Node& body = kv.second;
    if (section == "mnos") {
      ParseMnos(s, body);
      continue;
    }
    if (section == "sweep") {
      ParseSweep(s, body);
      continue;
    }
    bool known = false;
    for (const char* name : kSections) known = known || section == name;
    if (!known) {
      throw ConfigError(
          Located(kv.first.Mark(), "unknown section '" + section + "'"));
    }
    if (!body.IsMap()) {
      throw ConfigError(Located(body.Mark(), section + " must be a table"));
    }
    std::set<std::string> seen;
    for (const auto& entry : body) {
      const std::string key = entry.first.as<std::string>();
      if (section == "montecarlo" && key == "seed") {
        try {
          s.sim.seed = entry.second.as<std::uint64_t>();
        } catch (const YAML::Exception&) {
          throw ConfigError(Located(entry.second.Mark(),
                                    "montecarlo.seed must be an unsigned "
                                    "64-bit integer"));
        }
        continue;
      }
      if (!seen.insert(ApplyScalar(s, section, key, entry.second)).second) {
        throw ConfigError(Located(entry.first.Mark(),
                                  section + "." + key +
                                      " sets a value already given in another "
                                      "unit"));
      }
    }
    try {
      ValidateSection(s, section);
    } catch (const InvalidArgument& e) {
      throw ConfigError(Located(body.Mark(), section + ": " + e.what()));
    }
  }
  try {
    s.Validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(Located(root.Mark(), e.what()));
  }
  return s;
}

Scenario LoadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseScenario(buf.str());
}

std::string FormatDouble(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

std::string SerializeScenario(const Scenario& s) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  std::string open;
  for (const Field& f : Registry()) {
    const std::string name = f.name;
    const std::string section = name.substr(0, name.find('.'));
    if (section != open) {
      if (!open.empty()) out << YAML::EndMap;
      out << YAML::Key << section << YAML::Value << YAML::BeginMap;
      if (section == "montecarlo") {
        out << YAML::Key << "seed" << YAML::Value << std::to_string(s.sim.seed);
      }
      open = section;
    }
    out << YAML::Key << name.substr(name.find('.') + 1) << YAML::Value
        << FormatDouble(f.get(s));
  }
  out << YAML::EndMap;
  out << YAML::Key << "mnos" << YAML::Value << YAML::BeginSeq;
  for (const MnoSpec& m : s.mnos) {
    out << YAML::BeginMap << YAML::Key << "name" << YAML::Value
        << YAML::DoubleQuoted << m.name;
    if (m.bandwidth) {
      out << YAML::Key << "W" << YAML::Value << FormatDouble(*m.bandwidth);
    }
    if (m.subchannels) {
      out << YAML::Key << "L" << YAML::Value << std::to_string(*m.subchannels);
    }
    if (m.ue_density) {
      out << YAML::Key << "xi" << YAML::Value << FormatDouble(*m.ue_density);
    }
    if (m.activity) {
      out << YAML::Key << "eta" << YAML::Value << FormatDouble(*m.activity);
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  if (s.sweep) {
    out << YAML::Key << "sweep" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "variable" << YAML::Value << s.sweep->variable;
    out << YAML::Key << "grid" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (double g : s.sweep->grid) out << FormatDouble(g);
    out << YAML::EndSeq << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::string ConfigHash(const Scenario& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : SerializeScenario(s)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> FieldNames() {
  std::vector<std::string> names;
  for (const Field& f : Registry()) names.emplace_back(f.name);
  return names;
}

bool HasField(std::string_view name) { return FindField(name) != nullptr; }

double GetField(const Scenario& s, std::string_view name) {
  const Field* f = FindField(name);
  if (f == nullptr) throw ConfigError("unknown field '" + std::string(name) + "'");
  return f->get(s);
}

void SetField(Scenario& s, std::string_view name, double value) {
  const Field* f = FindField(name);
  if (f == nullptr) throw ConfigError("unknown field '" + std::string(name) + "'");
  f->set(s, value);
}

}  // namespace cachemarket::cli
