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

#include "signbal/balance.h"

#include <cmath>

#include "signbal/errors.h"
#include "signbal/spectral.h"

namespace signbal {

std::string MetricName(Metric metric) {
  switch (metric) {
    case Metric::kWeak:
      return "weak";
    case Metric::kStrong:
      return "strong";
    case Metric::kEb:
      return "eb";
    case Metric::kSa:
      return "sa";
  }
  return "unknown";
}

Metric ParseMetric(std::string_view name) {
  if (name == "weak") return Metric::kWeak;
  if (name == "strong") return Metric::kStrong;
  if (name == "eb") return Metric::kEb;
  if (name == "sa") return Metric::kSa;
  throw InputError("unknown metric '" + std::string(name) + "'");
}

std::vector<Metric> ParseMetricList(std::string_view text) {
  if (text == "all") return {Metric::kWeak, Metric::kStrong, Metric::kEb, Metric::kSa};
  std::vector<Metric> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(ParseMetric(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return out;
}

double BalanceConfig::decay_length() const { return 1.0 / std::log(alpha); }

void BalanceConfig::Validate() const {
  if (!(alpha > 1.0)) throw InputError("alpha must exceed 1");
  if (fixed_shift && !(*fixed_shift > 0.0)) throw InputError("fixed shift must be positive");
}

double NetworkShift(const SignedNetwork& net, Metric metric, double alpha) {
  switch (metric) {
    case Metric::kWeak:
      return alpha * LeadingEigenvalue(SplitAdjacency(net).positive);
    case Metric::kStrong:
    case Metric::kSa:
      // lambda(P+N) bounds every eigenvalue of P-N in modulus, so it is the
      // larger of the two leading eigenvalues.
      return alpha * LeadingEigenvalue(UnsignedAdjacency(net));
    case Metric::kEb:
      return 0.0;
  }
  return 0.0;
}

double ResolveShift(const SignedNetwork& net, const BalanceConfig& cfg) {
  cfg.Validate();
  if (cfg.fixed_shift) return *cfg.fixed_shift;
  return NetworkShift(net, cfg.metric, cfg.alpha);
}

double WeakImbalance(const SignedNetwork& net, const BalanceConfig& cfg) {
  const Adjacency adj = SplitAdjacency(net);
  if (net.num_negative() == 0) return 0.0;
  // With P empty the resolvent is I/z and N has a zero diagonal.
  if (net.num_negative() == net.num_edges()) return 0.0;
  const double z = ResolveShift(net, BalanceConfig{Metric::kWeak, cfg.alpha, cfg.fixed_shift});
  const Matrix r = Resolvent(adj.positive, z);
  return 0.5 * adj.negative.cwiseProduct(r).sum();
}

double StrongImbalance(const SignedNetwork& net, const BalanceConfig& cfg) {
  if (net.num_negative() == 0) return 0.0;
  const double z = ResolveShift(net, BalanceConfig{Metric::kStrong, cfg.alpha, cfg.fixed_shift});
  const Adjacency adj = SplitAdjacency(net);
  return 0.25 * LogDetRatio(adj.positive, adj.negative, z);
}

double EbImbalance(const SignedNetwork& net) {
  if (net.num_negative() == 0 || net.num_nodes() == 0) return 0.0;
  const double log_signed = LogTraceExp(SignedAdjacency(net));
  const double log_unsigned = LogTraceExp(UnsignedAdjacency(net));
  // (1 - K)/(1 + K) with K = exp(log_signed - log_unsigned).
  return std::tanh(0.5 * (log_unsigned - log_signed));
}

double EbComplement(const SignedNetwork& net) {
  if (net.num_negative() == 0 || net.num_nodes() == 0) return 1.0;
  const double gap = LogTraceExp(UnsignedAdjacency(net)) - LogTraceExp(SignedAdjacency(net));
  return 2.0 / (1.0 + std::exp(gap));
}

double SaBalance(const SignedNetwork& net, const BalanceConfig& cfg) {
  if (net.num_negative() == 0) return 1.0;
  const double z = ResolveShift(net, BalanceConfig{Metric::kSa, cfg.alpha, cfg.fixed_shift});
  auto shifted = [z](Matrix m) {
    m = -m;
    m.diagonal().array() += z;
    return m;
  };
  // The factors of z in (I - M/z)^-1 = z (zI - M)^-1 cancel in the ratio.
  const double num = InverseSpd(shifted(SignedAdjacency(net))).trace();
  const double den = InverseSpd(shifted(UnsignedAdjacency(net))).trace();
  return num / den;
}

double Imbalance(const SignedNetwork& net, const BalanceConfig& cfg) {
  switch (cfg.metric) {
    case Metric::kWeak:
      return WeakImbalance(net, cfg);
    case Metric::kStrong:
      return StrongImbalance(net, cfg);
    case Metric::kEb:
      return EbImbalance(net);
    case Metric::kSa:
      return 0.5 * (1.0 - SaBalance(net, cfg));
  }
  return 0.0;
}

}  // namespace signbal
