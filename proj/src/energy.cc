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

#include "energy.h"

#include <optional>
#include <utility>

#include "signbal/errors.h"
#include "signbal/spectral.h"

namespace signbal::internal {

namespace {

FlipUpdate UpdateFor(const Edge& e, Sign current) {
  return {e.u, e.v,
          current == Sign::kPositive ? FlipDirection::kPositiveToNegative
                                     : FlipDirection::kNegativeToPositive};
}

class WeakEnergy : public FlipEnergy {
 public:
  WeakEnergy(const SignedNetwork& net, std::vector<Sign> signs, double shift)
      : FlipEnergy(net, std::move(signs)), shift_(shift) {
    Refresh();
  }

  double Delta(std::size_t edge) override {
    return WeakFlipDelta(state_, UpdateFor(net_.edge(edge), signs_[edge]));
  }

  void Commit(std::size_t edge) override {
    ApplyWoodburyFlip(state_, UpdateFor(net_.edge(edge), signs_[edge]));
    signs_[edge] = Flipped(signs_[edge]);
    energy_ = state_.trace_nr;
  }

  void Refresh() override {
    state_ = MakeResolventState(net_.WithSigns(signs_), shift_);
    energy_ = state_.trace_nr;
  }

 private:
  double shift_;
  ResolventState state_;
};

class StrongEnergy : public FlipEnergy {
 public:
  StrongEnergy(const SignedNetwork& net, std::vector<Sign> signs, double shift)
      : FlipEnergy(net, std::move(signs)), shift_(shift) {
    Refresh();
  }

  double Delta(std::size_t edge) override {
    return 0.25 * DetLemmaDelta(state_, UpdateFor(net_.edge(edge), signs_[edge]));
  }

  void Commit(std::size_t edge) override {
    ApplyDetLemmaFlip(state_, UpdateFor(net_.edge(edge), signs_[edge]));
    signs_[edge] = Flipped(signs_[edge]);
    energy_ = 0.25 * (state_.log_det_a - state_.log_det_unsigned);
  }

  void Refresh() override {
    state_ = MakeDetState(net_.WithSigns(signs_), shift_);
    energy_ = 0.25 * (state_.log_det_a - state_.log_det_unsigned);
  }

 private:
  double shift_;
  DetState state_;
};

class RecomputeEnergy : public FlipEnergy {
 public:
  RecomputeEnergy(const SignedNetwork& net, std::vector<Sign> signs, const BalanceConfig& cfg)
      : FlipEnergy(net, std::move(signs)), cfg_(cfg) {
    Refresh();
  }

  double Delta(std::size_t edge) override {
    signs_[edge] = Flipped(signs_[edge]);
    const double flipped = Imbalance(net_.WithSigns(signs_), cfg_);
    signs_[edge] = Flipped(signs_[edge]);
    pending_ = std::make_pair(edge, flipped);
    return flipped - energy_;
  }

  void Commit(std::size_t edge) override {
    signs_[edge] = Flipped(signs_[edge]);
    if (pending_ && pending_->first == edge) {
      energy_ = pending_->second;
    } else {
      energy_ = Imbalance(net_.WithSigns(signs_), cfg_);
    }
    pending_.reset();
  }

  void Refresh() override {
    energy_ = Imbalance(net_.WithSigns(signs_), cfg_);
    pending_.reset();
  }

 private:
  BalanceConfig cfg_;
  std::optional<std::pair<std::size_t, double>> pending_;
};

}  // namespace

std::unique_ptr<FlipEnergy> MakeFlipEnergy(const SignedNetwork& net, std::vector<Sign> signs,
                                           const BalanceConfig& cfg) {
  if (cfg.metric != Metric::kEb && !cfg.fixed_shift) {
    throw InputError("flip energy needs a fixed shift");
  }
  switch (cfg.metric) {
    case Metric::kWeak:
      return std::make_unique<WeakEnergy>(net, std::move(signs), *cfg.fixed_shift);
    case Metric::kStrong:
      return std::make_unique<StrongEnergy>(net, std::move(signs), *cfg.fixed_shift);
    case Metric::kEb:
    case Metric::kSa:
      return std::make_unique<RecomputeEnergy>(net, std::move(signs), cfg);
  }
  return nullptr;
}

}  // namespace signbal::internal
