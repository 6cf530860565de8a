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

#include "signbal/evaluation.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "signbal/random.h"

namespace signbal {
namespace {

constexpr Sign P = Sign::kPositive;
constexpr Sign N = Sign::kNegative;

std::vector<Sign> Negate(const std::vector<Sign>& v) {
  std::vector<Sign> out;
  for (Sign s : v) out.push_back(Flipped(s));
  return out;
}

std::vector<Sign> RandomSigns(Rng& rng, std::size_t n, double p_neg) {
  std::vector<Sign> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.Bernoulli(p_neg) ? N : P);
  return out;
}

// Independent evaluation from the joint distribution with log2 entropies.
double ReferenceNmi(const std::vector<Sign>& a, const std::vector<Sign>& b) {
  double joint[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[a[i] == P][b[i] == P] += 1.0 / a.size();
  }
  const double pa[2] = {joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]};
  const double pb[2] = {joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]};
  double mi = 0, ha = 0, hb = 0;
  for (int x = 0; x < 2; ++x) {
    if (pa[x] > 0) ha -= pa[x] * std::log2(pa[x]);
    if (pb[x] > 0) hb -= pb[x] * std::log2(pb[x]);
    for (int y = 0; y < 2; ++y) {
      if (joint[x][y] > 0) mi += joint[x][y] * std::log2(joint[x][y] / (pa[x] * pb[y]));
    }
  }
  return mi / (0.5 * (ha + hb));
}

TEST(AccuracyTest, Examples) {
  const std::vector<Sign> t = {P, P, N, N};
  EXPECT_EQ(Accuracy(t, t), 1.0);
  EXPECT_EQ(Accuracy(t, Negate(t)), 0.0);
  EXPECT_EQ(Accuracy(t, std::vector<Sign>{P, N, N, P}), 0.5);
  EXPECT_ANY_THROW(Accuracy(t, std::vector<Sign>{P}));
  EXPECT_ANY_THROW(Accuracy(std::vector<Sign>{}, std::vector<Sign>{}));
}

TEST(TallyTest, CountsSumToTotal) {
  const ConfusionCounts c = Tally(std::vector<Sign>{P, P, N, N, P}, std::vector<Sign>{P, N, N, P, P});
  EXPECT_EQ(c.pos_pos, 2u);
  EXPECT_EQ(c.pos_neg, 1u);
  EXPECT_EQ(c.neg_pos, 1u);
  EXPECT_EQ(c.neg_neg, 1u);
  EXPECT_EQ(c.total(), 5u);
}

TEST(NmiTest, Examples) {
  const std::vector<Sign> t = {P, P, N, P, N};
  EXPECT_NEAR(NormalizedMutualInformation(t, t), 1.0, 1e-15);
  EXPECT_NEAR(NormalizedMutualInformation(t, Negate(t)), 1.0, 1e-15);
  EXPECT_EQ(NormalizedMutualInformation(t, std::vector<Sign>(5, P)), 0.0);
}

TEST(NmiTest, DegenerateConvention) {
  const std::vector<Sign> pos(4, P), neg(4, N);
  EXPECT_EQ(NormalizedMutualInformation(pos, pos), 1.0);
  EXPECT_EQ(NormalizedMutualInformation(pos, neg), 1.0);
}

TEST(NmiTest, PropertiesOnRandomVectors) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.Below(40);
    const std::vector<Sign> a = RandomSigns(rng, n, 0.3);
    const std::vector<Sign> b = RandomSigns(rng, n, 0.5);
    const double v = NormalizedMutualInformation(a, b);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0 + 1e-12);
    EXPECT_NEAR(v, NormalizedMutualInformation(b, a), 1e-14);
    EXPECT_NEAR(v, NormalizedMutualInformation(Negate(a), b), 1e-14);
    EXPECT_NEAR(v, NormalizedMutualInformation(a, Negate(b)), 1e-14);
    const bool a_const = std::all_of(a.begin(), a.end(), [&](Sign s) { return s == a[0]; });
    const bool b_const = std::all_of(b.begin(), b.end(), [&](Sign s) { return s == b[0]; });
    if (!(a_const && b_const)) EXPECT_NEAR(v, ReferenceNmi(a, b), 1e-12);
    const ConfusionCounts c = Tally(a, b);
    const double wrong = static_cast<double>(c.pos_neg + c.neg_pos) / n;
    EXPECT_NEAR(Accuracy(a, b) + wrong, 1.0, 1e-15);
  }
}

TEST(BaselineTest, Examples) {
  std::vector<Sign> t(10, P);
  t[3] = N;
  EXPECT_NEAR(AllPositiveBaseline(t).accuracy, 0.9, 1e-15);
  EXPECT_EQ(AllPositiveBaseline(t).nmi, 0.0);
  EXPECT_EQ(AllPositiveBaseline(std::vector<Sign>(6, N)).accuracy, 0.0);
  EXPECT_EQ(AllPositiveBaseline(std::vector<Sign>(6, N)).nmi, 0.0);
  EXPECT_EQ(AllPositiveBaseline(std::vector<Sign>(6, P)).nmi, 0.0);
}

}  // namespace
}  // namespace signbal
