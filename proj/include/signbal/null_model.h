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

#ifndef SIGNBAL_NULL_MODEL_H_
#define SIGNBAL_NULL_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "signbal/balance.h"
#include "signbal/random.h"
#include "signbal/signed_graph.h"

namespace signbal {

inline constexpr std::size_t kDefaultNullSamples = 100;

// Same edge positions; the signs are a uniformly random permutation of the
// original signs (Fisher-Yates over the edge list).
SignedNetwork ShuffleSigns(const SignedNetwork& net, Rng& rng);

// Observed imbalance against the sign-shuffle null distribution.
struct EtaReport {
  BalanceConfig metric;
  double b_obs = 0.0;
  double null_mean = 0.0;
  double null_std = 0.0;                 // sample std, n-1 denominator
  std::optional<double> eta;             // unset when null_mean == 0
  std::optional<double> z_score;         // unset when null_std == 0
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> null_values;       // filled only on request
};

// Sample i shuffles with the stream DeriveSeed(seed, i) and, unless the
// config pins a shift, recomputes lambda for its own shuffled network.
// Throws InputError when samples < 2 or the network has no edges.
EtaReport ComputeEtaReport(const SignedNetwork& net, const BalanceConfig& cfg,
                           std::size_t samples, std::uint64_t seed,
                           bool keep_samples = false);

}  // namespace signbal

#endif  // SIGNBAL_NULL_MODEL_H_
