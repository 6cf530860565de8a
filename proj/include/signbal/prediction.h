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

#ifndef SIGNBAL_PREDICTION_H_
#define SIGNBAL_PREDICTION_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "signbal/balance.h"
#include "signbal/signed_graph.h"

namespace signbal {

// Exponential cooling T = t0 * exp(-t / tau) over a fixed step budget.
struct AnnealSchedule {
  double t0 = 0.1;
  double tau = 1e4;
  std::size_t steps = 1'000'000;
  // Incremental states are rebuilt from scratch after this many accepted
  // flips.
  std::size_t refresh_every = 1000;
  std::uint64_t seed = 0;

  void Validate() const;
  double Temperature(std::size_t step) const;
};

// Two imbalances are a tie when they differ by at most this much relative
// to max(1, |value|). Ties predict +1.
inline constexpr double kTieTolerance = 1e-12;

// True when +1 is the prediction for the given pair of imbalances.
bool PrefersPositive(double imbalance_pos, double imbalance_neg);

struct PredictionOutcome {
  std::size_t edge = 0;
  Sign true_sign = Sign::kPositive;
  Sign predicted_sign = Sign::kPositive;
  double imbalance_pos = 0.0;
  double imbalance_neg = 0.0;
  // Set when a candidate left the convergence domain and both candidates
  // were re-evaluated from scratch at a larger shift.
  bool fallback = false;
  double shift = 0.0;
};

enum class UpdatePath {
  kFast,   // rank-2 updates for weak and strong
  kNaive,  // full recomputation of both candidates
};

// Shift held fixed while one sign is varied: alpha * lambda_P of the
// observed network for weak, alpha * lambda_{P+N} for strong and sa.
double PredictionShift(const SignedNetwork& net, const BalanceConfig& cfg);

// Shift used for annealing: alpha * lambda_{P+N}, which bounds P and P-N
// for every sign assignment on the same positions.
double AnnealingShift(const SignedNetwork& net, const BalanceConfig& cfg);

// Imbalance of `net` under both signs of `edge`, all other signs as
// observed.
PredictionOutcome PredictSingle(const SignedNetwork& net, std::size_t edge,
                                const BalanceConfig& cfg,
                                UpdatePath path = UpdatePath::kFast);

struct PredictionSummary {
  double accuracy = 0.0;
  double nmi = 0.0;
  double baseline_accuracy = 0.0;
  double baseline_nmi = 0.0;
};

struct PredictionReport {
  BalanceConfig config;
  double shift = 0.0;
  std::vector<PredictionOutcome> outcomes;
  PredictionSummary summary;
};

// PredictSingle for every edge, each seeing all other true signs.
PredictionReport LeaveOneOut(const SignedNetwork& net, const BalanceConfig& cfg,
                             UpdatePath path = UpdatePath::kFast);

struct AnnealResult {
  SignMask mask;  // final candidate signs
  double initial_energy = 0.0;
  double final_energy = 0.0;  // recomputed from scratch
  double max_abs_delta = 0.0;
  std::size_t accepted = 0;
  double shift = 0.0;
};

// Metropolis annealing over the hidden signs of `mask`, starting from
// uniformly random signs. Signs outside the mask stay as observed.
AnnealResult AnnealHiddenSigns(const SignedNetwork& net, const SignMask& mask,
                               const BalanceConfig& cfg, const AnnealSchedule& schedule);

// Accuracy, NMI and all-positive baseline for one annealing repetition.
struct RepScore {
  double accuracy = 0.0;
  double nmi = 0.0;
  double baseline_accuracy = 0.0;
  double final_energy = 0.0;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // n-1 denominator; 0 for a single value
};

MeanStd Summarize(const std::vector<double>& values);

struct FractionResult {
  double fraction = 0.0;
  std::size_t hidden = 0;
  std::vector<RepScore> reps;

  MeanStd accuracy() const;
  MeanStd nmi() const;
  MeanStd baseline_accuracy() const;
};

// `reps` repetitions of: hide floor(fraction * m) uniformly chosen signs,
// anneal, score against the truth. Repetition r draws from the stream
// DeriveSeed(DeriveSeed(schedule.seed, stream), r), so the hidden sets do
// not depend on the metric. Throws InputError when nothing would be hidden.
FractionResult MultiSignCrossValidation(const SignedNetwork& net, double fraction,
                                        std::size_t reps, const BalanceConfig& cfg,
                                        const AnnealSchedule& schedule,
                                        std::uint64_t stream = 0);

}  // namespace signbal

#endif  // SIGNBAL_PREDICTION_H_
