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

#include "signbal/null_model.h"

#include <cmath>
#include <utility>

#include "signbal/errors.h"
#include "signbal/parallel.h"

namespace signbal {

SignedNetwork ShuffleSigns(const SignedNetwork& net, Rng& rng) {
  if (net.num_edges() == 0) throw InputError("cannot shuffle an edgeless network");
  std::vector<Sign> signs = net.signs();
  for (std::size_t k = signs.size() - 1; k > 0; --k) {
    std::swap(signs[k], signs[rng.Below(k + 1)]);
  }
  return net.WithSigns(signs);
}

EtaReport ComputeEtaReport(const SignedNetwork& net, const BalanceConfig& cfg,
                           std::size_t samples, std::uint64_t seed, bool keep_samples) {
  if (samples < 2) throw InputError("the null model needs at least 2 samples");
  if (net.num_edges() == 0) throw InputError("null model of an edgeless network");
  cfg.Validate();

  EtaReport report;
  report.metric = cfg;
  report.samples = samples;
  report.seed = seed;
  report.b_obs = Imbalance(net, cfg);

  std::vector<double> values(samples);
  // For eb the spread is taken from 1 - B, which keeps its resolution when
  // B itself rounds to 1.
  const bool complement = cfg.metric == Metric::kEb;
  std::vector<double> spread(complement ? samples : 0);
  ParallelFor(samples, [&](std::size_t i) {
    Rng rng(DeriveSeed(seed, i));
    const SignedNetwork shuffled = ShuffleSigns(net, rng);
    values[i] = Imbalance(shuffled, cfg);
    if (complement) spread[i] = EbComplement(shuffled);
  });

  auto mean_of = [](const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
  };
  auto std_of = [](const std::vector<double>& v, double mean) {
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
  };
  report.null_mean = mean_of(values);
  double deviation = report.b_obs - report.null_mean;
  if (complement) {
    const double spread_mean = mean_of(spread);
    report.null_std = std_of(spread, spread_mean);
    deviation = spread_mean - EbComplement(net);
  } else {
    report.null_std = std_of(values, report.null_mean);
  }

  if (report.null_mean != 0.0) report.eta = report.b_obs / report.null_mean;
  if (report.null_std != 0.0) report.z_score = deviation / report.null_std;
  if (keep_samples) report.null_values = std::move(values);
  return report;
}

}  // namespace signbal
