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

#include "signbal/verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "signbal/balance.h"
#include "signbal/oracle.h"
#include "signbal/prediction.h"
#include "signbal/random.h"
#include "signbal/spectral.h"

namespace signbal {

namespace {

double RelativeError(double value, double reference) {
  if (reference == 0.0) return std::abs(value);
  return std::abs(value - reference) / std::abs(reference);
}

std::string Describe(const char* what, double value) {
  std::ostringstream out;
  out.precision(3);
  out << what << "=" << value;
  return out.str();
}

CheckResult SeriesAgreement(std::size_t graphs) {
  double worst = 0.0;
  for (std::size_t g = 0; g < graphs; ++g) {
    const SignedNetwork net = RandomSignedNetwork(12, 0.4, 0.3, DeriveSeed(101, g));
    const BalanceConfig weak{Metric::kWeak, 2.0, std::nullopt};
    const BalanceConfig strong{Metric::kStrong, 2.0, std::nullopt};
    worst = std::max(worst, RelativeError(WeakImbalance(net, weak),
                                          oracle::TruncatedWeakImbalance(net, 2.0, 60)));
    worst = std::max(worst, RelativeError(StrongImbalance(net, strong),
                                          oracle::TruncatedStrongImbalance(net, 2.0, 60)));
  }
  return {"series_agreement", worst <= 1e-6, Describe("max_rel_err", worst)};
}

CheckResult TriangleExactness(std::size_t graphs) {
  double worst = 0.0;
  for (std::size_t g = 0; g < graphs; ++g) {
    const SignedNetwork net = RandomSignedNetwork(12, 0.4, 0.3, DeriveSeed(101, g));
    const oracle::TriangleCensus c = oracle::CountTriangles(net);
    const auto weak = oracle::WeakWalkCounts(net, 3);
    const auto strong = oracle::StrongWalkCounts(net, 3);
    const auto cycles = oracle::EnumerateImbalancedCycles(net, 3);
    worst = std::max(worst, std::abs(weak[3] - static_cast<double>(c.t1)));
    worst = std::max(worst, std::abs(strong[3] - static_cast<double>(c.t1 + c.t3)));
    worst = std::max(worst, std::abs(static_cast<double>(cycles.weak_imbalanced[3]) -
                                     static_cast<double>(c.t1)));
    worst = std::max(worst, std::abs(static_cast<double>(cycles.strong_imbalanced[3]) -
                                     static_cast<double>(c.t1 + c.t3)));
  }
  return {"triangle_exactness", worst <= 1e-9, Describe("max_abs_err", worst)};
}

CheckResult LowRankFidelity(std::size_t n, std::size_t flips) {
  const SignedNetwork net = RandomSignedNetwork(n, 0.2, 0.3, 977);
  const double weak_z = NetworkShift(net, Metric::kStrong, 2.0);
  const ResolventState rs = MakeResolventState(net, weak_z);
  const DetState ds = MakeDetState(net, weak_z);
  Rng rng(5);
  double worst = 0.0;
  for (std::size_t f = 0; f < flips; ++f) {
    const std::size_t k = rng.Below(net.num_edges());
    const Edge& e = net.edge(k);
    const FlipUpdate flip{e.u, e.v,
                          e.sign == Sign::kPositive ? FlipDirection::kPositiveToNegative
                                                    : FlipDirection::kNegativeToPositive};
    std::vector<Sign> signs = net.signs();
    signs[k] = Flipped(signs[k]);
    const SignedNetwork flipped = net.WithSigns(signs);

    const ResolventState updated = WoodburyFlip(rs, flip);
    const Matrix reference = Resolvent(SplitAdjacency(flipped).positive, weak_z);
    const double floor = 1e-12 * reference.cwiseAbs().maxCoeff();
    worst = std::max(worst, ((updated.resolvent - reference).cwiseAbs().array() /
                             (reference.cwiseAbs().array() + floor))
                                .maxCoeff());
    const ResolventState scratch = MakeResolventState(flipped, weak_z);
    worst = std::max(worst, RelativeError(updated.trace_nr, scratch.trace_nr));

    const DetFlipResult det = DetLemmaFlip(ds, flip);
    const DetState det_scratch = MakeDetState(flipped, weak_z);
    worst = std::max(worst, std::abs(det.delta_log_det - (det_scratch.log_det_a - ds.log_det_a)) /
                                std::max(1.0, std::abs(det_scratch.log_det_a)));
  }
  return {"low_rank_fidelity", worst <= 1e-8, Describe("max_rel_err", worst)};
}

CheckResult BalanceFixtures() {
  bool ok = true;
  const BalanceConfig cfg{Metric::kStrong, 2.0, std::nullopt};
  const SignedNetwork two = PlantedFactionNetwork({20, 2, 1.0, 0.0, 1});
  ok &= StrongImbalance(two, cfg) <= 1e-10;
  ok &= EbImbalance(two) <= 1e-10;
  ok &= SaBalance(two, cfg) >= 1.0 - 1e-10;
  ok &= WeakImbalance(two, cfg) == 0.0;
  const SignedNetwork three = PlantedFactionNetwork({21, 3, 1.0, 0.0, 1});
  ok &= WeakImbalance(three, cfg) == 0.0;
  ok &= StrongImbalance(three, cfg) > 0.0;
  return {"balance_fixtures", ok, ok ? "ok" : "fixture mismatch"};
}

CheckResult TrianglePointValues() {
  const SignedNetwork tri = ParseEdgeList("a b +\nb c +\nc a -\n");
  const BalanceConfig cfg{Metric::kStrong, 2.0, std::nullopt};
  const double e = std::exp(1.0);
  const double k = (1.0 / (e * e) + 2.0 * e) / (e * e + 2.0 / e);
  double worst = 0.0;
  worst = std::max(worst, std::abs(WeakImbalance(tri, cfg) - 1.0 / (12.0 * std::sqrt(2.0))));
  worst = std::max(worst, std::abs(StrongImbalance(tri, cfg) - 0.25 * std::log(54.0 / 50.0)));
  worst = std::max(worst, std::abs(EbImbalance(tri) - (1.0 - k) / (1.0 + k)));
  worst = std::max(worst, std::abs(SaBalance(tri, cfg) - (10.0 / 3.0) / 3.6));
  return {"triangle_point_values", worst <= 1e-4, Describe("max_abs_err", worst)};
}

CheckResult CycleTheorems(std::size_t n, std::size_t max_len) {
  bool ok = true;
  const auto three = oracle::EnumerateImbalancedCycles(PlantedFactionNetwork({n, 3, 1.0, 0.0, 1}),
                                                       max_len);
  const auto two = oracle::EnumerateImbalancedCycles(PlantedFactionNetwork({n, 2, 1.0, 0.0, 1}),
                                                     max_len);
  for (std::size_t k = 0; k <= max_len; ++k) {
    ok &= three.weak_imbalanced[k] == 0;
    ok &= two.strong_imbalanced[k] == 0;
  }
  return {"cycle_theorems", ok, ok ? "ok" : "imbalanced cycle in a planted network"};
}

CheckResult FastMatchesNaive() {
  const SignedNetwork net = PlantedFactionNetwork({24, 3, 0.5, 0.1, 3});
  bool ok = true;
  double worst = 0.0;
  for (Metric metric : {Metric::kWeak, Metric::kStrong}) {
    const BalanceConfig cfg{metric, 2.0, std::nullopt};
    const PredictionReport fast = LeaveOneOut(net, cfg, UpdatePath::kFast);
    const PredictionReport naive = LeaveOneOut(net, cfg, UpdatePath::kNaive);
    for (std::size_t k = 0; k < fast.outcomes.size(); ++k) {
      ok &= fast.outcomes[k].predicted_sign == naive.outcomes[k].predicted_sign;
      worst = std::max(worst, std::abs(fast.outcomes[k].imbalance_pos -
                                       naive.outcomes[k].imbalance_pos));
      worst = std::max(worst, std::abs(fast.outcomes[k].imbalance_neg -
                                       naive.outcomes[k].imbalance_neg));
    }
  }
  ok &= worst <= 1e-8;
  return {"fast_matches_naive", ok, Describe("max_abs_err", worst)};
}

CheckResult AnnealingReachesOptimum(std::size_t runs) {
  const SignedNetwork net = PlantedFactionNetwork({16, 2, 0.6, 0.1, 8});
  std::vector<std::size_t> hidden;
  for (std::size_t k = 0; k < net.num_edges() && hidden.size() < 8; k += 3) hidden.push_back(k);
  const SignMask mask(net, hidden);
  BalanceConfig cfg{Metric::kStrong, 2.0, std::nullopt};
  cfg.fixed_shift = AnnealingShift(net, cfg);
  const double optimum = oracle::ExhaustiveSignSearch(net, mask, cfg).energy;
  std::size_t hits = 0;
  for (std::size_t r = 0; r < runs; ++r) {
    AnnealSchedule schedule;
    schedule.steps = 100000;
    schedule.seed = DeriveSeed(42, r);
    const AnnealResult res = AnnealHiddenSigns(net, mask, cfg, schedule);
    if (res.final_energy <= optimum + 1e-9 * std::max(1.0, std::abs(optimum))) ++hits;
  }
  const bool ok = hits * 100 >= runs * 95;
  return {"annealing_reaches_optimum", ok,
          std::to_string(hits) + "/" + std::to_string(runs) + " runs at the optimum"};
}

}  // namespace

std::vector<CheckResult> RunVerification(VerifyLevel level) {
  const bool full = level == VerifyLevel::kFull;
  std::vector<CheckResult> checks;
  checks.push_back(SeriesAgreement(full ? 20 : 5));
  checks.push_back(TriangleExactness(full ? 20 : 5));
  checks.push_back(full ? LowRankFidelity(50, 200) : LowRankFidelity(30, 20));
  checks.push_back(BalanceFixtures());
  checks.push_back(TrianglePointValues());
  checks.push_back(full ? CycleTheorems(12, 8) : CycleTheorems(9, 6));
  checks.push_back(FastMatchesNaive());
  if (full) checks.push_back(AnnealingReachesOptimum(20));
  return checks;
}

}  // namespace signbal
