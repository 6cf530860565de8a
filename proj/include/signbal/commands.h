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

#ifndef SIGNBAL_COMMANDS_H_
#define SIGNBAL_COMMANDS_H_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace signbal {

inline constexpr const char* kToolVersion = "signbal 0.1.0";
inline constexpr int kSchemaVersion = 1;

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDomainError = 3;

// Everything needed to reproduce a run: the command, its inputs and every
// parameter after defaults were applied. Embedded in every artifact.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  nlohmann::json parameters = nlohmann::json::object();
  std::string tool_version = kToolVersion;

  nlohmann::json ToJson() const;
  // Throws InputError on a malformed manifest.
  static RunManifest FromJson(const nlohmann::json& j);
};

struct CommandResult {
  nlohmann::json output;
  int exit_code = kExitOk;
  // Side artifacts (path, content) such as generated edge lists and CSV
  // curves. The caller writes them.
  std::vector<std::pair<std::string, std::string>> files;
};

// Manifest with every parameter of `command` at its default value.
RunManifest DefaultManifest(const std::string& command);

// Runs a fully resolved manifest. Input problems throw InputError;
// per-layer numeric-domain failures are reported inside the output and
// reflected in exit_code.
CommandResult RunCommand(const RunManifest& manifest);

}  // namespace signbal

#endif  // SIGNBAL_COMMANDS_H_
