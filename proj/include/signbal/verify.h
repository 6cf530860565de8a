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

#ifndef SIGNBAL_VERIFY_H_
#define SIGNBAL_VERIFY_H_

#include <string>
#include <vector>

namespace signbal {

enum class VerifyLevel { kQuick, kFull };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Cross-checks of the metric and update code against the brute-force
// oracles. kQuick finishes in seconds; kFull adds larger flip batches,
// longer cycle enumeration and an annealing-vs-exhaustive comparison.
std::vector<CheckResult> RunVerification(VerifyLevel level);

}  // namespace signbal

#endif  // SIGNBAL_VERIFY_H_
