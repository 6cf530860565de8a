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

// signbal: structural balance metrics, sign-shuffle null tests and sign
// prediction for signed networks.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "signbal/commands.h"
#include "signbal/errors.h"

namespace {

using nlohmann::json;
using signbal::RunManifest;

std::vector<double> ParseFractions(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw signbal::InputError("bad fraction '" + item + "' in --remove-frac");
    }
  }
  return out;
}

// Pulls a manifest out of a prior JSON output, a bare manifest, or the
// "# manifest:" header of a generated edge list.
RunManifest LoadManifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw signbal::InputError("cannot read '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::string header = "# manifest: ";
  json j;
  try {
    if (text.rfind(header, 0) == 0) {
      j = json::parse(text.substr(header.size(), text.find('\n') - header.size()));
    } else {
      j = json::parse(text);
    }
  } catch (const json::exception& e) {
    throw signbal::InputError(path + ": " + e.what());
  }
  return RunManifest::FromJson(j.contains("manifest") ? j.at("manifest") : j);
}

void WriteText(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw signbal::InputError("cannot write '" + path + "'");
  out << content;
}

int Execute(const RunManifest& manifest, const std::string& output_path) {
  const signbal::CommandResult result = signbal::RunCommand(manifest);
  for (const auto& [path, content] : result.files) WriteText(path, content);
  WriteText(output_path, result.output.dump(2) + "\n");
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural balance in signed networks"};
  app.require_subcommand(1);
  std::string output_path = "-";
  app.add_option("-o,--output", output_path, "JSON report destination ('-' for stdout)");

  RunManifest measure = signbal::DefaultManifest("measure");
  RunManifest null_test = signbal::DefaultManifest("null-test");
  RunManifest loo = signbal::DefaultManifest("predict-loo");
  RunManifest multi = signbal::DefaultManifest("predict-multi");
  RunManifest generate = signbal::DefaultManifest("generate");
  RunManifest verify = signbal::DefaultManifest("verify");

  struct Common {
    std::string input;
    std::string metrics;
    double alpha = 2.0;
    bool negative_wins = false;
  };
  Common c_measure{"", "all"}, c_null{"", "all"}, c_loo{"", "all"}, c_multi{"", "weak,strong"};

  auto add_common = [](CLI::App* sub, Common& c) {
    sub->add_option("input", c.input, "Edge list ('u v s' or 'layer u v s' per line)")
        ->required();
    sub->add_option("--metric", c.metrics, "weak|strong|eb|sa, a comma list, or all")
        ->capture_default_str();
    sub->add_option("--alpha", c.alpha, "Shift as a multiple of the leading eigenvalue")
        ->capture_default_str();
    sub->add_flag("--negative-wins", c.negative_wins,
                  "Resolve a pair listed with both signs as negative instead of failing");
  };

  auto* s_measure = app.add_subcommand("measure", "Balance metrics per layer");
  add_common(s_measure, c_measure);

  auto* s_null = app.add_subcommand("null-test", "Eta ratio against the sign-shuffle null model");
  add_common(s_null, c_null);
  std::size_t samples = 100;
  std::uint64_t null_seed = 0;
  bool dump_samples = false;
  s_null->add_option("--samples", samples)->capture_default_str();
  s_null->add_option("--seed", null_seed)->capture_default_str();
  s_null->add_flag("--dump-samples", dump_samples, "Include every null-model value");

  auto* s_loo = app.add_subcommand("predict-loo", "Leave-one-out single sign prediction");
  add_common(s_loo, c_loo);

  auto* s_multi = app.add_subcommand("predict-multi", "Multiple sign prediction by annealing");
  add_common(s_multi, c_multi);
  std::string fractions = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::size_t reps = 100, steps = 1000000, refresh_every = 1000;
  double t0 = 0.1, tau = 1e4;
  std::uint64_t multi_seed = 0;
  std::string csv_path;
  s_multi->add_option("--remove-frac", fractions, "Comma-separated fractions of hidden signs")
      ->capture_default_str();
  s_multi->add_option("--reps", reps)->capture_default_str();
  s_multi->add_option("--t0", t0)->capture_default_str();
  s_multi->add_option("--tau", tau)->capture_default_str();
  s_multi->add_option("--steps", steps)->capture_default_str();
  s_multi->add_option("--refresh-every", refresh_every)->capture_default_str();
  s_multi->add_option("--seed", multi_seed)->capture_default_str();
  s_multi->add_option("--csv", csv_path, "Also write the accuracy/NMI curves as CSV");

  auto* s_generate = app.add_subcommand("generate", "Planted-faction edge list");
  std::size_t nodes = 60, factions = 2;
  double density = 1.0, noise = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_output;
  s_generate->add_option("--nodes", nodes)->capture_default_str();
  s_generate->add_option("--factions", factions)->capture_default_str();
  s_generate->add_option("--density", density)->capture_default_str();
  s_generate->add_option("--noise", noise)->capture_default_str();
  s_generate->add_option("--seed", gen_seed)->capture_default_str();
  s_generate->add_option("output", gen_output, "Edge-list path")->required();

  auto* s_verify = app.add_subcommand("verify", "Cross-check against brute-force oracles");
  std::string level = "quick";
  s_verify->add_option("--level", level, "quick|full")->capture_default_str();

  auto* s_rerun = app.add_subcommand("rerun", "Re-execute the manifest stored in an artifact");
  std::string artifact;
  s_rerun->add_option("artifact", artifact, "JSON report, manifest or generated edge list")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : signbal::kExitInputError;
  }

  auto apply_common = [](RunManifest& m, const Common& c) {
    m.inputs = {c.input};
    m.parameters["metrics"] = c.metrics;
    m.parameters["alpha"] = c.alpha;
    m.parameters["conflict_policy"] = c.negative_wins ? "negative_wins" : "error";
  };

  try {
    if (s_measure->parsed()) {
      apply_common(measure, c_measure);
      return Execute(measure, output_path);
    }
    if (s_null->parsed()) {
      apply_common(null_test, c_null);
      null_test.parameters["samples"] = samples;
      null_test.parameters["seed"] = null_seed;
      null_test.parameters["dump_samples"] = dump_samples;
      return Execute(null_test, output_path);
    }
    if (s_loo->parsed()) {
      apply_common(loo, c_loo);
      return Execute(loo, output_path);
    }
    if (s_multi->parsed()) {
      apply_common(multi, c_multi);
      multi.parameters["remove_fracs"] = ParseFractions(fractions);
      multi.parameters["reps"] = reps;
      multi.parameters["t0"] = t0;
      multi.parameters["tau"] = tau;
      multi.parameters["steps"] = steps;
      multi.parameters["refresh_every"] = refresh_every;
      multi.parameters["seed"] = multi_seed;
      multi.parameters["csv"] = csv_path;
      return Execute(multi, output_path);
    }
    if (s_generate->parsed()) {
      generate.parameters = {{"nodes", nodes}, {"factions", factions}, {"density", density},
                             {"noise", noise}, {"seed", gen_seed},     {"output", gen_output}};
      return Execute(generate, output_path);
    }
    if (s_verify->parsed()) {
      verify.parameters["level"] = level;
      return Execute(verify, output_path);
    }
    if (s_rerun->parsed()) {
      return Execute(LoadManifest(artifact), output_path);
    }
  } catch (const signbal::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return signbal::kExitInputError;
  } catch (const signbal::DomainError& e) {
    std::cerr << "numeric domain error: " << e.what() << '\n';
    return signbal::kExitDomainError;
  }
  return signbal::kExitInputError;
}
