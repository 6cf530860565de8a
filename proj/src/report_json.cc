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

#include "signbal/report_json.h"

namespace signbal {

using nlohmann::json;

namespace {

json OptionalNumber(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json ToJson(const EtaReport& r) {
  json out = {
      {"metric", MetricName(r.metric.metric)},
      {"alpha", r.metric.alpha},
      {"B_obs", r.b_obs},
      {"null_mean", r.null_mean},
      {"null_std", r.null_std},
      {"eta", OptionalNumber(r.eta)},
      {"eta_defined", r.eta.has_value()},
      {"z_score", OptionalNumber(r.z_score)},
      {"samples", r.samples},
      {"seed", r.seed},
  };
  if (!r.null_values.empty()) out["null_samples"] = r.null_values;
  return out;
}

json ToJson(const PredictionReport& r, const SignedNetwork& net) {
  json edges = json::array();
  for (const auto& o : r.outcomes) {
    const Edge& e = net.edge(o.edge);
    edges.push_back({
        {"u", net.labels()[e.u]},
        {"v", net.labels()[e.v]},
        {"true_sign", ToInt(o.true_sign)},
        {"predicted_sign", ToInt(o.predicted_sign)},
        {"imbalance_pos", o.imbalance_pos},
        {"imbalance_neg", o.imbalance_neg},
        {"fallback", o.fallback},
    });
  }
  return {
      {"metric", MetricName(r.config.metric)},
      {"alpha", r.config.alpha},
      {"shift", r.shift},
      {"edges", edges},
      {"summary",
       {{"accuracy", r.summary.accuracy},
        {"nmi", r.summary.nmi},
        {"baseline_accuracy", r.summary.baseline_accuracy},
        {"baseline_nmi", r.summary.baseline_nmi}}},
  };
}

json ToJson(const FractionResult& r) {
  json accuracy = json::array(), nmi = json::array(), baseline = json::array();
  for (const auto& rep : r.reps) {
    accuracy.push_back(rep.accuracy);
    nmi.push_back(rep.nmi);
    baseline.push_back(rep.baseline_accuracy);
  }
  const MeanStd acc = r.accuracy(), mi = r.nmi(), base = r.baseline_accuracy();
  return {
      {"fraction", r.fraction},
      {"hidden", r.hidden},
      {"reps", r.reps.size()},
      {"accuracy", acc.mean},
      {"nmi", mi.mean},
      {"baseline_accuracy", base.mean},
      {"baseline_nmi", 0.0},
      {"mean", {{"accuracy", acc.mean}, {"nmi", mi.mean}, {"baseline_accuracy", base.mean}}},
      {"std", {{"accuracy", acc.std}, {"nmi", mi.std}, {"baseline_accuracy", base.std}}},
      {"per_rep", {{"accuracy", accuracy}, {"nmi", nmi}, {"baseline_accuracy", baseline}}},
  };
}

json ToJson(const AnnealSchedule& s) {
  return {{"t0", s.t0},
          {"tau", s.tau},
          {"steps", s.steps},
          {"refresh_every", s.refresh_every},
          {"seed", s.seed}};
}

}  // namespace signbal
