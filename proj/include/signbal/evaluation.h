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

#ifndef SIGNBAL_EVALUATION_H_
#define SIGNBAL_EVALUATION_H_

#include <cstddef>
#include <span>

#include "signbal/signed_graph.h"

namespace signbal {

// Joint counts of (true sign, predicted sign).
struct ConfusionCounts {
  std::size_t pos_pos = 0;  // true +, predicted +
  std::size_t pos_neg = 0;  // true +, predicted -
  std::size_t neg_pos = 0;
  std::size_t neg_neg = 0;

  std::size_t total() const { return pos_pos + pos_neg + neg_pos + neg_neg; }
};

// Throws InputError on a length mismatch or empty input.
ConfusionCounts Tally(std::span<const Sign> truth, std::span<const Sign> predicted);

double Accuracy(std::span<const Sign> truth, std::span<const Sign> predicted);

// Mutual information of the empirical joint distribution divided by the mean
// of the two marginal entropies (natural log, 0 log 0 = 0). When both
// entropies vanish the result is 1 if the vectors are identical or exactly
// opposite and 0 otherwise.
double NormalizedMutualInformation(std::span<const Sign> truth,
                                   std::span<const Sign> predicted);
double NormalizedMutualInformation(const ConfusionCounts& counts);

struct BaselineScore {
  double accuracy = 0.0;
  double nmi = 0.0;
};

// Score of predicting +1 everywhere. Its NMI is 0 by convention.
BaselineScore AllPositiveBaseline(std::span<const Sign> truth);

}  // namespace signbal

#endif  // SIGNBAL_EVALUATION_H_
