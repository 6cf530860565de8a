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
#include <array>
#include <cmath>

#include "signbal/errors.h"

namespace signbal {

namespace {

double PlogP(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

}  // namespace

ConfusionCounts Tally(std::span<const Sign> truth, std::span<const Sign> predicted) {
  if (truth.size() != predicted.size()) throw InputError("sign vectors differ in length");
  if (truth.empty()) throw InputError("empty sign vectors");
  ConfusionCounts c;
  for (std::size_t k = 0; k < truth.size(); ++k) {
    const bool t = truth[k] == Sign::kPositive;
    const bool p = predicted[k] == Sign::kPositive;
    if (t && p) ++c.pos_pos;
    else if (t) ++c.pos_neg;
    else if (p) ++c.neg_pos;
    else ++c.neg_neg;
  }
  return c;
}

double Accuracy(std::span<const Sign> truth, std::span<const Sign> predicted) {
  const ConfusionCounts c = Tally(truth, predicted);
  return static_cast<double>(c.pos_pos + c.neg_neg) / static_cast<double>(c.total());
}

double NormalizedMutualInformation(const ConfusionCounts& c) {
  const double total = static_cast<double>(c.total());
  if (total == 0.0) throw InputError("empty sign vectors");
  const std::array<std::array<double, 2>, 2> joint = {{
      {static_cast<double>(c.pos_pos) / total, static_cast<double>(c.pos_neg) / total},
      {static_cast<double>(c.neg_pos) / total, static_cast<double>(c.neg_neg) / total},
  }};
  const std::array<double, 2> pt = {joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]};
  const std::array<double, 2> pp = {joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]};

  const double ht = -PlogP(pt[0]) - PlogP(pt[1]);
  const double hp = -PlogP(pp[0]) - PlogP(pp[1]);
  if (ht + hp == 0.0) {
    // Both constant: they either agree everywhere or disagree everywhere.
    const bool identical = c.pos_neg == 0 && c.neg_pos == 0;
    const bool opposite = c.pos_pos == 0 && c.neg_neg == 0;
    return identical || opposite ? 1.0 : 0.0;
  }
  double mi = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (joint[a][b] > 0.0) mi += joint[a][b] * std::log(joint[a][b] / (pt[a] * pp[b]));
    }
  }
  return std::clamp(mi / (0.5 * (ht + hp)), 0.0, 1.0);
}

double NormalizedMutualInformation(std::span<const Sign> truth,
                                   std::span<const Sign> predicted) {
  return NormalizedMutualInformation(Tally(truth, predicted));
}

BaselineScore AllPositiveBaseline(std::span<const Sign> truth) {
  if (truth.empty()) throw InputError("empty sign vector");
  const auto positives = std::count(truth.begin(), truth.end(), Sign::kPositive);
  return {static_cast<double>(positives) / static_cast<double>(truth.size()), 0.0};
}

}  // namespace signbal
