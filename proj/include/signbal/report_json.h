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

#ifndef SIGNBAL_REPORT_JSON_H_
#define SIGNBAL_REPORT_JSON_H_

#include "json.hpp"
#include "signbal/null_model.h"
#include "signbal/prediction.h"
#include "signbal/signed_graph.h"

namespace signbal {

// Flat object with the EtaReport field names. eta and z_score are null when
// undefined; eta_defined flags the first case explicitly.
nlohmann::json ToJson(const EtaReport& report);

// Per-edge records (labels resolved through `net`) plus a summary object.
nlohmann::json ToJson(const PredictionReport& report, const SignedNetwork& net);

nlohmann::json ToJson(const FractionResult& result);

nlohmann::json ToJson(const AnnealSchedule& schedule);

}  // namespace signbal

#endif  // SIGNBAL_REPORT_JSON_H_
