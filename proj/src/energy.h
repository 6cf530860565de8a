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

#ifndef SIGNBAL_SRC_ENERGY_H_
#define SIGNBAL_SRC_ENERGY_H_

#include <cstddef>
#include <memory>
#include <vector>

#include "signbal/balance.h"
#include "signbal/signed_graph.h"

namespace signbal::internal {

// Imbalance of a fixed set of edge positions whose signs change one edge at
// a time, evaluated at a fixed shift. Weak and strong metrics use rank-2
// updates; eb and sa recompute from scratch.
class FlipEnergy {
 public:
  virtual ~FlipEnergy() = default;

  double energy() const { return energy_; }
  const std::vector<Sign>& signs() const { return signs_; }

  // Energy change if `edge` were flipped. Does not modify the state.
  virtual double Delta(std::size_t edge) = 0;
  // Flips `edge`.
  virtual void Commit(std::size_t edge) = 0;
  // Rebuilds the cached state from the current signs.
  virtual void Refresh() = 0;

 protected:
  FlipEnergy(const SignedNetwork& net, std::vector<Sign> signs)
      : net_(net), signs_(std::move(signs)) {}

  const SignedNetwork& net_;
  std::vector<Sign> signs_;
  double energy_ = 0.0;
};

// cfg must carry a fixed shift for every metric other than eb.
std::unique_ptr<FlipEnergy> MakeFlipEnergy(const SignedNetwork& net, std::vector<Sign> signs,
                                           const BalanceConfig& cfg);

}  // namespace signbal::internal

#endif  // SIGNBAL_SRC_ENERGY_H_
