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

#ifndef SIGNBAL_BALANCE_H_
#define SIGNBAL_BALANCE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signbal/signed_graph.h"

namespace signbal {

enum class Metric { kWeak, kStrong, kEb, kSa };

inline constexpr double kDefaultAlpha = 2.0;

std::string MetricName(Metric metric);
// Throws InputError on unknown names.
Metric ParseMetric(std::string_view name);
// "all" or a comma-separated list.
std::vector<Metric> ParseMetricList(std::string_view text);

// Metric selection and walk-length discount. Unless fixed_shift is set, the
// shift is alpha times the leading eigenvalue of P (weak) or P+N (strong,
// sa), recomputed for every network evaluated.
struct BalanceConfig {
  Metric metric = Metric::kStrong;
  double alpha = kDefaultAlpha;
  std::optional<double> fixed_shift;

  // Length scale 1/ln(alpha) over which walk contributions decay.
  double decay_length() const;
  // Throws InputError when alpha <= 1 or a fixed shift is not positive.
  void Validate() const;
};

// Per-network shift alpha * lambda for `metric`; 0 when the relevant
// matrix has no edges. Unused by eb.
double NetworkShift(const SignedNetwork& net, Metric metric, double alpha);

// The shift a config resolves to on `net`.
double ResolveShift(const SignedNetwork& net, const BalanceConfig& cfg);

// 1/2 Tr[N (zI - P)^-1]: weighted count of closed walks with exactly one
// negative edge. 0 when there are no negative or no positive edges.
double WeakImbalance(const SignedNetwork& net, const BalanceConfig& cfg);

// 1/4 log(det[zI - (P-N)] / det[zI - (P+N)]): weighted count of closed
// walks with an odd number of negative edges.
double StrongImbalance(const SignedNetwork& net, const BalanceConfig& cfg);

// Exponential walk balance (1 - K) / (1 + K) with K = Tr e^(P-N) / Tr e^(P+N).
double EbImbalance(const SignedNetwork& net);

// 1 - EbImbalance(net) without cancellation. Dense graphs push the tanh to
// exactly 1 in double precision while this stays resolvable.
double EbComplement(const SignedNetwork& net);

// Resolvent trace ratio Tr[(I - (P-N)/z)^-1] / Tr[(I - (P+N)/z)^-1]; the
// geometric sums start at k = 0. 1 means perfectly balanced.
double SaBalance(const SignedNetwork& net, const BalanceConfig& cfg);

// Uniform "lower is more balanced" value: weak, strong and eb as above,
// (1 - sa) / 2 for sa.
double Imbalance(const SignedNetwork& net, const BalanceConfig& cfg);

}  // namespace signbal

#endif  // SIGNBAL_BALANCE_H_
