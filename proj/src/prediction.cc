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

#include "signbal/prediction.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "energy.h"
#include "signbal/errors.h"
#include "signbal/evaluation.h"
#include "signbal/parallel.h"
#include "signbal/random.h"
#include "signbal/spectral.h"

namespace signbal {

void AnnealSchedule::Validate() const {
  if (!(t0 > 0.0)) throw InputError("initial temperature must be positive");
  if (!(tau > 0.0)) throw InputError("cooling time-scale must be positive");
  if (steps < 1) throw InputError("annealing needs at least one step");
  if (refresh_every < 1) throw InputError("refresh interval must be positive");
}

double AnnealSchedule::Temperature(std::size_t step) const {
  return t0 * std::exp(-static_cast<double>(step) / tau);
}

bool PrefersPositive(double imbalance_pos, double imbalance_neg) {
  const double scale = std::max({1.0, std::abs(imbalance_pos), std::abs(imbalance_neg)});
  return imbalance_pos <= imbalance_neg + kTieTolerance * scale;
}

double PredictionShift(const SignedNetwork& net, const BalanceConfig& cfg) {
  cfg.Validate();
  if (cfg.fixed_shift) return *cfg.fixed_shift;
  return NetworkShift(net, cfg.metric, cfg.alpha);
}

double AnnealingShift(const SignedNetwork& net, const BalanceConfig& cfg) {
  cfg.Validate();
  if (cfg.fixed_shift) return *cfg.fixed_shift;
  if (cfg.metric == Metric::kEb) return 0.0;
  return NetworkShift(net, Metric::kStrong, cfg.alpha);
}

namespace {

BalanceConfig AtShift(const BalanceConfig& cfg, double shift) {
  BalanceConfig out = cfg;
  if (cfg.metric != Metric::kEb) out.fixed_shift = shift;
  return out;
}

FlipUpdate UpdateFor(const Edge& e) {
  return {e.u, e.v,
          e.sign == Sign::kPositive ? FlipDirection::kPositiveToNegative
                                    : FlipDirection::kNegativeToPositive};
}

void Decide(PredictionOutcome& out) {
  out.predicted_sign = PrefersPositive(out.imbalance_pos, out.imbalance_neg) ? Sign::kPositive
                                                                            : Sign::kNegative;
}

void SetCandidates(PredictionOutcome& out, double observed, double flipped) {
  if (out.true_sign == Sign::kPositive) {
    out.imbalance_pos = observed;
    out.imbalance_neg = flipped;
  } else {
    out.imbalance_pos = flipped;
    out.imbalance_neg = observed;
  }
}

PredictionOutcome Recompute(const SignedNetwork& net, std::size_t edge, const BalanceConfig& cfg,
                            double shift) {
  PredictionOutcome out;
  out.edge = edge;
  out.true_sign = net.edge(edge).sign;
  out.shift = shift;
  std::vector<Sign> signs = net.signs();
  const BalanceConfig fixed = AtShift(cfg, shift);
  signs[edge] = Sign::kPositive;
  out.imbalance_pos = Imbalance(net.WithSigns(signs), fixed);
  signs[edge] = Sign::kNegative;
  out.imbalance_neg = Imbalance(net.WithSigns(signs), fixed);
  Decide(out);
  return out;
}

// Both candidates from scratch at alpha * lambda of P with the edge made
// positive, which dominates P under either sign.
PredictionOutcome Fallback(const SignedNetwork& net, std::size_t edge, const BalanceConfig& cfg) {
  std::vector<Sign> signs = net.signs();
  signs[edge] = Sign::kPositive;
  const double shift = NetworkShift(net.WithSigns(signs), cfg.metric, cfg.alpha);
  PredictionOutcome out = Recompute(net, edge, cfg, shift);
  out.fallback = true;
  return out;
}

// Cached per-network state for the fast path.
struct FastContext {
  double shift = 0.0;
  std::optional<ResolventState> weak;
  std::optional<DetState> strong;
};

FastContext MakeFastContext(const SignedNetwork& net, const BalanceConfig& cfg, UpdatePath path) {
  FastContext ctx;
  ctx.shift = PredictionShift(net, cfg);
  if (path != UpdatePath::kFast) return ctx;
  if (cfg.metric == Metric::kWeak && ctx.shift > 0.0) {
    ctx.weak = MakeResolventState(net, ctx.shift);
  } else if (cfg.metric == Metric::kStrong && ctx.shift > 0.0) {
    ctx.strong = MakeDetState(net, ctx.shift);
  }
  return ctx;
}

PredictionOutcome Evaluate(const SignedNetwork& net, std::size_t edge, const BalanceConfig& cfg,
                           const FastContext& ctx) {
  const bool needs_shift = cfg.metric != Metric::kEb;
  if (needs_shift && !(ctx.shift > 0.0)) {
    // No positive edges (weak) or no edges at all: the fixed shift is 0.
    return Fallback(net, edge, cfg);
  }
  PredictionOutcome out;
  out.edge = edge;
  out.true_sign = net.edge(edge).sign;
  out.shift = ctx.shift;
  try {
    if (ctx.weak) {
      const double observed = ctx.weak->trace_nr;
      SetCandidates(out, observed, observed + WeakFlipDelta(*ctx.weak, UpdateFor(net.edge(edge))));
    } else if (ctx.strong) {
      const double observed = 0.25 * (ctx.strong->log_det_a - ctx.strong->log_det_unsigned);
      SetCandidates(out, observed,
                    observed + 0.25 * DetLemmaDelta(*ctx.strong, UpdateFor(net.edge(edge))));
    } else {
      return Recompute(net, edge, cfg, ctx.shift);
    }
  } catch (const DomainError&) {
    return Fallback(net, edge, cfg);
  }
  Decide(out);
  return out;
}

PredictionSummary Score(const std::vector<PredictionOutcome>& outcomes) {
  std::vector<Sign> truth, predicted;
  for (const auto& o : outcomes) {
    truth.push_back(o.true_sign);
    predicted.push_back(o.predicted_sign);
  }
  PredictionSummary s;
  if (truth.empty()) return s;
  s.accuracy = Accuracy(truth, predicted);
  s.nmi = NormalizedMutualInformation(truth, predicted);
  const BaselineScore base = AllPositiveBaseline(truth);
  s.baseline_accuracy = base.accuracy;
  s.baseline_nmi = base.nmi;
  return s;
}

}  // namespace

PredictionOutcome PredictSingle(const SignedNetwork& net, std::size_t edge,
                                const BalanceConfig& cfg, UpdatePath path) {
  if (edge >= net.num_edges()) throw InputError("edge index out of range");
  const FastContext ctx = MakeFastContext(net, cfg, path);
  try {
    return Evaluate(net, edge, cfg, ctx);
  } catch (const DomainError&) {
    return Fallback(net, edge, cfg);
  }
}

PredictionReport LeaveOneOut(const SignedNetwork& net, const BalanceConfig& cfg, UpdatePath path) {
  PredictionReport report;
  report.config = cfg;
  const FastContext ctx = MakeFastContext(net, cfg, path);
  report.shift = ctx.shift;
  report.outcomes.resize(net.num_edges());
  ParallelFor(net.num_edges(), [&](std::size_t k) {
    try {
      report.outcomes[k] = Evaluate(net, k, cfg, ctx);
    } catch (const DomainError&) {
      report.outcomes[k] = Fallback(net, k, cfg);
    }
  });
  report.summary = Score(report.outcomes);
  return report;
}

AnnealResult AnnealHiddenSigns(const SignedNetwork& net, const SignMask& mask,
                               const BalanceConfig& cfg, const AnnealSchedule& schedule) {
  if (mask.empty()) throw InputError("no hidden signs to anneal");
  schedule.Validate();
  AnnealResult result;
  result.shift = AnnealingShift(net, cfg);
  const BalanceConfig fixed = AtShift(cfg, result.shift);

  Rng rng(schedule.seed);
  std::vector<Sign> signs = net.signs();
  const auto& hidden = mask.hidden_edges();
  for (std::size_t h : hidden) signs[h] = rng.Bernoulli(0.5) ? Sign::kPositive : Sign::kNegative;

  auto energy = internal::MakeFlipEnergy(net, std::move(signs), fixed);
  result.initial_energy = energy->energy();
  std::size_t since_refresh = 0;
  for (std::size_t t = 0; t < schedule.steps; ++t) {
    const double temperature = schedule.Temperature(t);
    const std::size_t edge = hidden[rng.Below(hidden.size())];
    const double delta = energy->Delta(edge);
    result.max_abs_delta = std::max(result.max_abs_delta, std::abs(delta));
    if (delta <= 0.0 || rng.Uniform() < std::exp(-delta / temperature)) {
      energy->Commit(edge);
      ++result.accepted;
      if (++since_refresh >= schedule.refresh_every) {
        energy->Refresh();
        since_refresh = 0;
      }
    }
  }
  energy->Refresh();
  result.final_energy = energy->energy();

  result.mask = mask;
  for (std::size_t k = 0; k < hidden.size(); ++k) {
    result.mask.set_candidate(k, energy->signs()[hidden[k]]);
  }
  return result;
}

MeanStd Summarize(const std::vector<double>& values) {
  MeanStd out;
  if (values.empty()) return out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

namespace {

template <typename Field>
MeanStd SummarizeField(const std::vector<RepScore>& reps, Field field) {
  std::vector<double> values;
  values.reserve(reps.size());
  for (const auto& r : reps) values.push_back(r.*field);
  return Summarize(values);
}

}  // namespace

MeanStd FractionResult::accuracy() const { return SummarizeField(reps, &RepScore::accuracy); }
MeanStd FractionResult::nmi() const { return SummarizeField(reps, &RepScore::nmi); }
MeanStd FractionResult::baseline_accuracy() const {
  return SummarizeField(reps, &RepScore::baseline_accuracy);
}

FractionResult MultiSignCrossValidation(const SignedNetwork& net, double fraction,
                                        std::size_t reps, const BalanceConfig& cfg,
                                        const AnnealSchedule& schedule, std::uint64_t stream) {
  if (!(fraction > 0.0 && fraction < 1.0)) throw InputError("remove fraction must be in (0,1)");
  if (reps < 1) throw InputError("need at least one repetition");
  schedule.Validate();
  const std::size_t m = net.num_edges();
  const auto hidden_count =
      static_cast<std::size_t>(std::floor(fraction * static_cast<double>(m) + 1e-9));
  if (hidden_count == 0) throw InputError("remove fraction hides no edges");

  FractionResult result;
  result.fraction = fraction;
  result.hidden = hidden_count;
  result.reps.resize(reps);
  const std::uint64_t base = DeriveSeed(schedule.seed, stream);
  ParallelFor(reps, [&](std::size_t r) {
    Rng rng(DeriveSeed(base, r));
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < hidden_count; ++k) {
      std::swap(order[k], order[k + rng.Below(m - k)]);
    }
    std::vector<std::size_t> hidden(order.begin(), order.begin() + static_cast<long>(hidden_count));
    std::sort(hidden.begin(), hidden.end());

    AnnealSchedule run = schedule;
    run.seed = rng.Next();
    const AnnealResult annealed = AnnealHiddenSigns(net, SignMask(net, hidden), cfg, run);

    std::vector<Sign> truth, predicted;
    for (std::size_t k = 0; k < hidden.size(); ++k) {
      truth.push_back(net.edge(hidden[k]).sign);
      predicted.push_back(annealed.mask.candidate(k));
    }
    RepScore& score = result.reps[r];
    score.accuracy = Accuracy(truth, predicted);
    score.nmi = NormalizedMutualInformation(truth, predicted);
    score.baseline_accuracy = AllPositiveBaseline(truth).accuracy;
    score.final_energy = annealed.final_energy;
  });
  return result;
}

}  // namespace signbal
