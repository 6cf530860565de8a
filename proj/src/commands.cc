// Copyright 2026 The Signbal Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "signbal/commands.h"

#include <fstream>
#include <iterator>
#include <sstream>

#include "signbal/balance.h"
#include "signbal/errors.h"
#include "signbal/null_model.h"
#include "signbal/prediction.h"
#include "signbal/report_json.h"
#include "signbal/signed_graph.h"
#include "signbal/verify.h"

namespace signbal {

using nlohmann::json;

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

template <typename T>
T Param(const RunManifest& m, const char* key) {
  if (!m.parameters.contains(key)) {
    throw InputError("manifest for '" + m.command + "' lacks parameter '" + key + "'");
  }
  try {
    return m.parameters.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("parameter '") + key + "': " + e.what());
  }
}

ConflictPolicy PolicyParam(const RunManifest& m) {
  const auto name = Param<std::string>(m, "conflict_policy");
  if (name == "error") return ConflictPolicy::kError;
  if (name == "negative_wins") return ConflictPolicy::kNegativeWins;
  throw InputError("unknown conflict policy '" + name + "'");
}

std::vector<Layer> LoadLayers(const RunManifest& m) {
  if (m.inputs.size() != 1) throw InputError("'" + m.command + "' takes exactly one input");
  const std::string& path = m.inputs.front();
  std::vector<Layer> layers;
  try {
    layers = ParseLayeredEdgeList(ReadFile(path), PolicyParam(m));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  std::size_t edges = 0;
  for (const auto& l : layers) edges += l.network.num_edges();
  if (edges == 0) throw InputError(path + ": no edges");
  return layers;
}

json LayerHeader(const Layer& layer) {
  const SignedNetwork& net = layer.network;
  return {{"layer", layer.name},
          {"n", net.num_nodes()},
          {"m", net.num_edges()},
          {"neg_fraction", net.num_edges() ? NegativeFraction(net) : 0.0}};
}

// Runs body per layer; failures are recorded in the layer record.
template <typename Body>
json ForEachLayer(const std::vector<Layer>& layers, int* exit_code, Body&& body) {
  json records = json::array();
  for (std::size_t i = 0; i < layers.size(); ++i) {
    json record = LayerHeader(layers[i]);
    try {
      body(i, layers[i], record);
    } catch (const DomainError& e) {
      record["error"] = std::string("numeric domain: ") + e.what();
      *exit_code = kExitDomainError;
    } catch (const InputError& e) {
      record["error"] = std::string("input: ") + e.what();
      if (*exit_code == kExitOk) *exit_code = kExitInputError;
    }
    records.push_back(std::move(record));
  }
  return records;
}

BalanceConfig ConfigFor(Metric metric, double alpha) {
  BalanceConfig cfg{metric, alpha, std::nullopt};
  cfg.Validate();
  return cfg;
}

CommandResult Measure(const RunManifest& m) {
  const auto metrics = ParseMetricList(Param<std::string>(m, "metrics"));
  const auto alpha = Param<double>(m, "alpha");
  ConfigFor(Metric::kWeak, alpha);
  const auto layers = LoadLayers(m);
  CommandResult result;
  json records = ForEachLayer(layers, &result.exit_code, [&](std::size_t, const Layer& layer,
                                                             json& record) {
    json values = json::object();
    for (Metric metric : metrics) {
      const BalanceConfig cfg = ConfigFor(metric, alpha);
      values[MetricName(metric)] =
          metric == Metric::kSa ? SaBalance(layer.network, cfg) : Imbalance(layer.network, cfg);
    }
    record["metrics"] = values;
  });
  result.output = {{"layers", records}};
  return result;
}

CommandResult NullTest(const RunManifest& m) {
  const auto metrics = ParseMetricList(Param<std::string>(m, "metrics"));
  const auto alpha = Param<double>(m, "alpha");
  const auto samples = Param<std::size_t>(m, "samples");
  const auto seed = Param<std::uint64_t>(m, "seed");
  const auto dump = Param<bool>(m, "dump_samples");
  ConfigFor(Metric::kWeak, alpha);
  if (samples < 2) throw InputError("--samples must be at least 2");
  const auto layers = LoadLayers(m);
  CommandResult result;
  json records = ForEachLayer(layers, &result.exit_code, [&](std::size_t, const Layer& layer,
                                                             json& record) {
    json reports = json::array();
    for (Metric metric : metrics) {
      reports.push_back(
          ToJson(ComputeEtaReport(layer.network, ConfigFor(metric, alpha), samples, seed, dump)));
    }
    record["reports"] = reports;
  });
  result.output = {{"layers", records}};
  return result;
}

CommandResult PredictLoo(const RunManifest& m) {
  const auto metrics = ParseMetricList(Param<std::string>(m, "metrics"));
  const auto alpha = Param<double>(m, "alpha");
  ConfigFor(Metric::kWeak, alpha);
  const auto layers = LoadLayers(m);
  CommandResult result;
  json records = ForEachLayer(layers, &result.exit_code, [&](std::size_t, const Layer& layer,
                                                             json& record) {
    json predictions = json::array();
    for (Metric metric : metrics) {
      predictions.push_back(
          ToJson(LeaveOneOut(layer.network, ConfigFor(metric, alpha)), layer.network));
    }
    record["predictions"] = predictions;
  });
  result.output = {{"layers", records}};
  return result;
}

CommandResult PredictMulti(const RunManifest& m) {
  const auto metrics = ParseMetricList(Param<std::string>(m, "metrics"));
  const auto alpha = Param<double>(m, "alpha");
  const auto fractions = Param<std::vector<double>>(m, "remove_fracs");
  const auto reps = Param<std::size_t>(m, "reps");
  const auto csv_path = Param<std::string>(m, "csv");
  AnnealSchedule schedule;
  schedule.t0 = Param<double>(m, "t0");
  schedule.tau = Param<double>(m, "tau");
  schedule.steps = Param<std::size_t>(m, "steps");
  schedule.refresh_every = Param<std::size_t>(m, "refresh_every");
  schedule.seed = Param<std::uint64_t>(m, "seed");
  schedule.Validate();
  ConfigFor(Metric::kWeak, alpha);
  if (fractions.empty()) throw InputError("--remove-frac needs at least one value");
  for (double f : fractions) {
    if (!(f > 0.0 && f < 1.0)) throw InputError("remove fractions must lie in (0,1)");
  }
  if (reps < 1) throw InputError("--reps must be at least 1");
  const auto layers = LoadLayers(m);

  std::ostringstream csv;
  csv << "# manifest: " << m.ToJson().dump() << '\n'
      << "layer,metric,fraction,hidden,reps,accuracy_mean,accuracy_std,nmi_mean,nmi_std,"
         "baseline_accuracy_mean,baseline_accuracy_std\n";
  csv.precision(17);

  CommandResult result;
  json records = ForEachLayer(layers, &result.exit_code, [&](std::size_t layer_index,
                                                             const Layer& layer, json& record) {
    json curves = json::array();
    for (Metric metric : metrics) {
      const BalanceConfig cfg = ConfigFor(metric, alpha);
      json points = json::array();
      for (std::size_t f = 0; f < fractions.size(); ++f) {
        const std::uint64_t stream = (static_cast<std::uint64_t>(layer_index) << 32) | f;
        const FractionResult fr =
            MultiSignCrossValidation(layer.network, fractions[f], reps, cfg, schedule, stream);
        points.push_back(ToJson(fr));
        const MeanStd acc = fr.accuracy(), mi = fr.nmi(), base = fr.baseline_accuracy();
        csv << layer.name << ',' << MetricName(metric) << ',' << fr.fraction << ',' << fr.hidden
            << ',' << fr.reps.size() << ',' << acc.mean << ',' << acc.std << ',' << mi.mean << ','
            << mi.std << ',' << base.mean << ',' << base.std << '\n';
      }
      curves.push_back({{"metric", MetricName(metric)}, {"alpha", alpha}, {"points", points}});
    }
    record["curves"] = curves;
  });
  result.output = {{"layers", records}, {"schedule", ToJson(schedule)}};
  if (!csv_path.empty()) result.files.emplace_back(csv_path, csv.str());
  return result;
}

CommandResult Generate(const RunManifest& m) {
  PlantedFactionParams p;
  p.nodes = Param<std::size_t>(m, "nodes");
  p.factions = Param<std::size_t>(m, "factions");
  p.density = Param<double>(m, "density");
  p.noise = Param<double>(m, "noise");
  p.seed = Param<std::uint64_t>(m, "seed");
  const auto path = Param<std::string>(m, "output");
  if (path.empty()) throw InputError("generate needs an output path");
  const SignedNetwork net = PlantedFactionNetwork(p);
  CommandResult result;
  result.files.emplace_back(path, "# manifest: " + m.ToJson().dump() + "\n" + WriteEdgeList(net));
  result.output = {{"output", path},
                   {"n", net.num_nodes()},
                   {"m", net.num_edges()},
                   {"neg_fraction", net.num_edges() ? NegativeFraction(net) : 0.0}};
  return result;
}

CommandResult Verify(const RunManifest& m) {
  const auto level_name = Param<std::string>(m, "level");
  VerifyLevel level;
  if (level_name == "quick") {
    level = VerifyLevel::kQuick;
  } else if (level_name == "full") {
    level = VerifyLevel::kFull;
  } else {
    throw InputError("unknown verify level '" + level_name + "'");
  }
  CommandResult result;
  json checks = json::array();
  bool all = true;
  for (const auto& c : RunVerification(level)) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all &= c.passed;
  }
  result.output = {{"checks", checks}, {"passed", all}};
  result.exit_code = all ? kExitOk : kExitVerifyFailed;
  return result;
}

}  // namespace

json RunManifest::ToJson() const {
  return {{"command", command},
          {"inputs", inputs},
          {"parameters", parameters},
          {"tool_version", tool_version},
          {"schema_version", kSchemaVersion}};
}

RunManifest RunManifest::FromJson(const json& j) {
  RunManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    m.inputs = j.at("inputs").get<std::vector<std::string>>();
    m.parameters = j.at("parameters");
    m.tool_version = j.value("tool_version", std::string(kToolVersion));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed manifest: ") + e.what());
  }
  if (!m.parameters.is_object()) throw InputError("manifest parameters must be an object");
  return m;
}

RunManifest DefaultManifest(const std::string& command) {
  RunManifest m;
  m.command = command;
  if (command == "measure") {
    m.parameters = {{"metrics", "all"}, {"alpha", kDefaultAlpha}, {"conflict_policy", "error"}};
  } else if (command == "null-test") {
    m.parameters = {{"metrics", "all"},      {"alpha", kDefaultAlpha},
                    {"samples", kDefaultNullSamples}, {"seed", 0},
                    {"dump_samples", false}, {"conflict_policy", "error"}};
  } else if (command == "predict-loo") {
    m.parameters = {{"metrics", "all"}, {"alpha", kDefaultAlpha}, {"conflict_policy", "error"}};
  } else if (command == "predict-multi") {
    const AnnealSchedule s;
    m.parameters = {{"metrics", "weak,strong"},
                    {"alpha", kDefaultAlpha},
                    {"remove_fracs", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}},
                    {"reps", 100},
                    {"t0", s.t0},
                    {"tau", s.tau},
                    {"steps", s.steps},
                    {"refresh_every", s.refresh_every},
                    {"seed", 0},
                    {"csv", ""},
                    {"conflict_policy", "error"}};
  } else if (command == "generate") {
    m.parameters = {{"nodes", 60}, {"factions", 2}, {"density", 1.0},
                    {"noise", 0.0}, {"seed", 0},     {"output", ""}};
  } else if (command == "verify") {
    m.parameters = {{"level", "quick"}};
  } else {
    throw InputError("unknown command '" + command + "'");
  }
  return m;
}

CommandResult RunCommand(const RunManifest& manifest) {
  CommandResult result;
  if (manifest.command == "measure") {
    result = Measure(manifest);
  } else if (manifest.command == "null-test") {
    result = NullTest(manifest);
  } else if (manifest.command == "predict-loo") {
    result = PredictLoo(manifest);
  } else if (manifest.command == "predict-multi") {
    result = PredictMulti(manifest);
  } else if (manifest.command == "generate") {
    result = Generate(manifest);
  } else if (manifest.command == "verify") {
    result = Verify(manifest);
  } else {
    throw InputError("unknown command '" + manifest.command + "'");
  }
  json output = {{"manifest", manifest.ToJson()}};
  output.update(result.output);
  result.output = std::move(output);
  return result;
}

}  // namespace signbal
