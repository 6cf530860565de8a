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

#include <cmath>
#include <cstdlib>
#include <vector>

#include "gtest/gtest.h"
#include "signbal/balance.h"
#include "signbal/errors.h"
#include "signbal/oracle.h"
#include "signbal/random.h"
#include "signbal/signed_graph.h"

namespace signbal {
namespace {

bool SameFaction(const Edge& e, std::size_t n, std::size_t g) {
  return PlantedFaction(e.u, n, g) == PlantedFaction(e.v, n, g);
}

TEST(AnnealScheduleTest, DefaultsAndTemperature) {
  const AnnealSchedule s;
  EXPECT_EQ(s.t0, 0.1);
  EXPECT_EQ(s.tau, 1e4);
  EXPECT_EQ(s.steps, 1'000'000u);
  EXPECT_EQ(s.refresh_every, 1000u);
  EXPECT_DOUBLE_EQ(s.Temperature(0), 0.1);
  EXPECT_NEAR(s.Temperature(10000), 0.1 / std::exp(1.0), 1e-15);
  EXPECT_THROW((AnnealSchedule{0.0}).Validate(), InputError);
  EXPECT_THROW((AnnealSchedule{0.1, -1.0}).Validate(), InputError);
  EXPECT_THROW((AnnealSchedule{0.1, 1.0, 0}).Validate(), InputError);
}

TEST(TieRuleTest, EqualPrefersPositive) {
  EXPECT_TRUE(PrefersPositive(0.5, 0.5));
  EXPECT_TRUE(PrefersPositive(0.5, 0.5 - 1e-15));
  EXPECT_TRUE(PrefersPositive(0.1, 0.2));
  EXPECT_FALSE(PrefersPositive(0.2, 0.1));
}

TEST(PredictSingleTest, IsolatedEdgeTies) {
  const SignedNetwork net = ParseEdgeList("a b -\nc d +\nd e +\nc e -");
  for (Metric m : {Metric::kWeak, Metric::kStrong, Metric::kEb, Metric::kSa}) {
    const PredictionOutcome o = PredictSingle(net, 0, {m});
    EXPECT_NEAR(o.imbalance_pos, o.imbalance_neg, 1e-12) << MetricName(m);
    EXPECT_EQ(o.predicted_sign, Sign::kPositive) << MetricName(m);
  }
}

TEST(PredictSingleTest, TwoFactionsUnderStrong) {
  const SignedNetwork net = PlantedFactionNetwork({12, 2, 1.0, 0.0, 1});
  for (std::size_t k = 0; k < net.num_edges(); ++k) {
    const PredictionOutcome o = PredictSingle(net, k, {Metric::kStrong});
    EXPECT_EQ(o.predicted_sign,
              SameFaction(net.edge(k), 12, 2) ? Sign::kPositive : Sign::kNegative);
    EXPECT_FALSE(o.fallback);
  }
}

TEST(PredictSingleTest, ThreeFactionsUnderWeak) {
  const SignedNetwork net = PlantedFactionNetwork({9, 3, 1.0, 0.0, 1});
  for (std::size_t k = 0; k < net.num_edges(); ++k) {
    if (SameFaction(net.edge(k), 9, 3)) continue;
    const PredictionOutcome o = PredictSingle(net, k, {Metric::kWeak});
    EXPECT_EQ(o.predicted_sign, Sign::kNegative);
    // The exhaustive search over one hidden edge picks the same sign.
    const SignMask mask(net, {k});
    const BalanceConfig at{Metric::kWeak, 2.0, o.shift};
    EXPECT_EQ(oracle::ExhaustiveSignSearch(net, mask, at).assignment.candidate(0),
              o.predicted_sign);
  }
}

TEST(PredictSingleTest, FallbackWhenOnlyNegativeEdges) {
  // lambda_P = 0, so the fixed weak shift is degenerate.
  const SignedNetwork net = ParseEdgeList("1 2 -\n2 3 -\n1 3 -");
  const PredictionOutcome o = PredictSingle(net, 0, {Metric::kWeak});
  EXPECT_TRUE(o.fallback);
  EXPECT_GT(o.shift, 0.0);
  // Making 1-2 positive leaves the triangle with two negatives.
  EXPECT_EQ(o.imbalance_pos, 0.0);
  EXPECT_EQ(o.predicted_sign, Sign::kPositive);
}

TEST(PredictSingleTest, FastMatchesNaive) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const SignedNetwork net = RandomSignedNetwork(40 + 4 * seed, 0.15, 0.3, seed);
    for (Metric m : {Metric::kWeak, Metric::kStrong}) {
      const PredictionReport fast = LeaveOneOut(net, {m}, UpdatePath::kFast);
      const PredictionReport naive = LeaveOneOut(net, {m}, UpdatePath::kNaive);
      for (std::size_t k = 0; k < net.num_edges(); ++k) {
        const auto& a = fast.outcomes[k];
        const auto& b = naive.outcomes[k];
        EXPECT_EQ(a.predicted_sign, b.predicted_sign);
        EXPECT_EQ(a.fallback, b.fallback);
        EXPECT_NEAR(a.imbalance_pos, b.imbalance_pos, 1e-8);
        EXPECT_NEAR(a.imbalance_neg, b.imbalance_neg, 1e-8);
      }
    }
  }
}

TEST(LeaveOneOutTest, MatchingPredictsAllPositive) {
  const SignedNetwork net = ParseEdgeList("a b -\nc d +\ne f -\ng h +\ni j +");
  for (Metric m : {Metric::kWeak, Metric::kStrong, Metric::kEb, Metric::kSa}) {
    const PredictionReport r = LeaveOneOut(net, {m});
    for (const auto& o : r.outcomes) EXPECT_EQ(o.predicted_sign, Sign::kPositive);
    EXPECT_NEAR(r.summary.accuracy, 0.6, 1e-15);
    EXPECT_NEAR(r.summary.baseline_accuracy, 0.6, 1e-15);
    EXPECT_EQ(r.summary.nmi, 0.0);
  }
}

TEST(LeaveOneOutTest, BeatsBaselineOnPlantedNetwork) {
  const SignedNetwork net = PlantedFactionNetwork({30, 2, 0.5, 0.1, 4});
  const PredictionReport r = LeaveOneOut(net, {Metric::kStrong});
  EXPECT_GT(r.summary.accuracy, r.summary.baseline_accuracy);
  EXPECT_EQ(r.summary.baseline_nmi, 0.0);
}

TEST(LeaveOneOutTest, DeterministicAcrossThreadCounts) {
  const SignedNetwork net = RandomSignedNetwork(30, 0.2, 0.3, 2);
  setenv("SIGNBAL_THREADS", "1", 1);
  const PredictionReport a = LeaveOneOut(net, {Metric::kWeak});
  setenv("SIGNBAL_THREADS", "3", 1);
  const PredictionReport b = LeaveOneOut(net, {Metric::kWeak});
  unsetenv("SIGNBAL_THREADS");
  for (std::size_t k = 0; k < net.num_edges(); ++k) {
    EXPECT_EQ(a.outcomes[k].imbalance_pos, b.outcomes[k].imbalance_pos);
    EXPECT_EQ(a.outcomes[k].imbalance_neg, b.outcomes[k].imbalance_neg);
  }
}

TEST(AnnealTest, SameSeedSameTrajectory) {
  const SignedNetwork net = PlantedFactionNetwork({16, 2, 1.0, 0.1, 2});
  const SignMask mask(net, {0, 5, 9, 17, 30, 44});
  const AnnealSchedule s{0.1, 500, 5000, 1000, 99};
  for (Metric m : {Metric::kWeak, Metric::kStrong, Metric::kEb, Metric::kSa}) {
    const AnnealResult a = AnnealHiddenSigns(net, mask, {m}, s);
    const AnnealResult b = AnnealHiddenSigns(net, mask, {m}, s);
    EXPECT_EQ(a.mask.candidates(), b.mask.candidates());
    EXPECT_EQ(a.final_energy, b.final_energy);
    EXPECT_EQ(a.accepted, b.accepted);
  }
}

TEST(AnnealTest, FinalEnergyBoundAndConsistency) {
  Rng rng(4);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SignedNetwork net = RandomSignedNetwork(18, 0.35, 0.3, seed);
    std::vector<std::size_t> hidden;
    for (std::size_t k = 0; k < net.num_edges(); ++k) {
      if (rng.Bernoulli(0.3)) hidden.push_back(k);
    }
    if (hidden.empty()) continue;
    const SignMask mask(net, hidden);
    for (Metric m : {Metric::kWeak, Metric::kStrong}) {
      const AnnealResult r =
          AnnealHiddenSigns(net, mask, {m}, AnnealSchedule{0.1, 1000, 20000, 50, seed});
      EXPECT_LE(r.final_energy, r.initial_energy + r.max_abs_delta + 1e-12);
      // Final energy equals a from-scratch evaluation of the returned signs.
      const SignedNetwork out = net.WithSigns(r.mask.Apply(net));
      EXPECT_NEAR(r.final_energy, Imbalance(out, {m, 2.0, r.shift}), 1e-10);
    }
  }
}

TEST(AnnealTest, OneHiddenEdgeAgreesWithSinglePrediction) {
  const SignedNetwork net = PlantedFactionNetwork({12, 2, 0.8, 0.1, 6});
  for (std::size_t k = 0; k < net.num_edges(); k += 5) {
    const SignMask mask(net, {k});
    const AnnealResult r = AnnealHiddenSigns(net, mask, {Metric::kStrong},
                                             AnnealSchedule{0.1, 200, 5000, 1000, k});
    const BalanceConfig at{Metric::kStrong, 2.0, r.shift};
    std::vector<Sign> s = net.signs();
    s[k] = Sign::kPositive;
    const double pos = Imbalance(net.WithSigns(s), at);
    s[k] = Sign::kNegative;
    const double neg = Imbalance(net.WithSigns(s), at);
    if (std::abs(pos - neg) < 1e-9) continue;
    EXPECT_EQ(r.mask.candidate(0), pos < neg ? Sign::kPositive : Sign::kNegative);
  }
}

TEST(AnnealTest, StrongRecoversHiddenTwoFactionSigns) {
  const SignedNetwork net = PlantedFactionNetwork({40, 2, 1.0, 0.0, 1});
  int exact = 0;
  for (std::uint64_t rep = 0; rep < 10; ++rep) {
    Rng rng(rep);
    std::vector<std::size_t> hidden;
    for (std::size_t k = 0; k < net.num_edges(); ++k) {
      if (rng.Bernoulli(0.2)) hidden.push_back(k);
    }
    const SignMask mask(net, hidden);
    const AnnealResult r = AnnealHiddenSigns(net, mask, {Metric::kStrong},
                                             AnnealSchedule{0.1, 1e4, 100000, 1000, rep});
    bool ok = true;
    for (std::size_t h = 0; h < hidden.size(); ++h) {
      ok = ok && r.mask.candidate(h) == net.edge(hidden[h]).sign;
    }
    EXPECT_LE(r.final_energy, 1e-9);
    exact += ok;
  }
  EXPECT_GE(exact, 9);
}

TEST(AnnealTest, ShiftIsValidForEverySignAssignment) {
  const SignedNetwork net = RandomSignedNetwork(20, 0.3, 0.2, 3);
  EXPECT_NEAR(AnnealingShift(net, {Metric::kWeak}), NetworkShift(net, Metric::kStrong, 2.0),
              1e-12);
  EXPECT_EQ(AnnealingShift(net, {Metric::kEb}), 0.0);
}

TEST(MultiSignTest, ErrorsAndDeterminism) {
  const SignedNetwork net = PlantedFactionNetwork({14, 2, 1.0, 0.05, 3});
  const AnnealSchedule s{0.1, 1000, 5000, 1000, 12};
  EXPECT_THROW(MultiSignCrossValidation(net, 0.001, 3, {Metric::kWeak}, s), InputError);
  EXPECT_THROW(MultiSignCrossValidation(net, 1.0, 3, {Metric::kWeak}, s), InputError);
  EXPECT_THROW(MultiSignCrossValidation(net, 0.3, 0, {Metric::kWeak}, s), InputError);
  setenv("SIGNBAL_THREADS", "1", 1);
  const FractionResult a = MultiSignCrossValidation(net, 0.3, 6, {Metric::kStrong}, s);
  setenv("SIGNBAL_THREADS", "4", 1);
  const FractionResult b = MultiSignCrossValidation(net, 0.3, 6, {Metric::kStrong}, s);
  unsetenv("SIGNBAL_THREADS");
  ASSERT_EQ(a.reps.size(), 6u);
  EXPECT_EQ(a.hidden, 27u);
  for (std::size_t r = 0; r < 6; ++r) {
    EXPECT_EQ(a.reps[r].accuracy, b.reps[r].accuracy);
    EXPECT_EQ(a.reps[r].final_energy, b.reps[r].final_energy);
  }
  const FractionResult c = MultiSignCrossValidation(net, 0.3, 6, {Metric::kStrong}, s, 1);
  bool any_diff = false;
  for (std::size_t r = 0; r < 6; ++r) any_diff |= a.reps[r].final_energy != c.reps[r].final_energy;
  EXPECT_TRUE(any_diff);
}

TEST(MultiSignTest, SingleHiddenEdgeMatchesLeaveOneOut) {
  const SignedNetwork net = PlantedFactionNetwork({16, 2, 0.7, 0.1, 5});
  const double frac = 1.5 / static_cast<double>(net.num_edges());
  const FractionResult r =
      MultiSignCrossValidation(net, frac, 200, {Metric::kStrong},
                               AnnealSchedule{0.1, 100, 3000, 1000, 1});
  ASSERT_EQ(r.hidden, 1u);
  const PredictionReport loo = LeaveOneOut(net, {Metric::kStrong});
  // Binomial noise with 200 draws: 4 standard deviations is under 0.15.
  EXPECT_NEAR(r.accuracy().mean, loo.summary.accuracy, 0.15);
}

TEST(SummarizeTest, MeanAndSampleStd) {
  const MeanStd m = Summarize({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.std, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_EQ(Summarize({7.0}).std, 0.0);
}

}  // namespace
}  // namespace signbal
