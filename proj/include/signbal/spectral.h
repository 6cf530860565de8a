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

#ifndef SIGNBAL_SPECTRAL_H_
#define SIGNBAL_SPECTRAL_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "signbal/signed_graph.h"

namespace signbal {

inline constexpr double kEigenTolerance = 1e-10;
inline constexpr int kMaxPowerIterations = 100000;

// Most positive eigenvalue of a symmetric matrix. Shifted power iteration
// with a residual test; falls back to a full symmetric eigendecomposition
// when the iteration budget runs out. The zero matrix gives 0.
double LeadingEigenvalue(const Matrix& m, double tol = kEigenTolerance);

// log det of a symmetric positive-definite matrix. Cholesky first, then a
// pivoted LDL^T; any non-positive pivot throws DomainError.
double LogDetSpd(const Matrix& m);

// Inverse of a symmetric positive-definite matrix; DomainError otherwise.
Matrix InverseSpd(const Matrix& m);

// R = (zI - P)^-1. DomainError unless z > lambda_P.
Matrix Resolvent(const Matrix& positive, double shift);

// log det[zI - (P-N)] - log det[zI - (P+N)]. DomainError unless z exceeds
// the leading eigenvalue of P+N.
double LogDetRatio(const Matrix& positive, const Matrix& negative, double shift);

// log Tr exp(M) from the eigenvalues of M (log-sum-exp).
double LogTraceExp(const Matrix& m);

enum class FlipDirection { kPositiveToNegative, kNegativeToPositive };

// Reversal of the sign on edge (i, j). As a matrix change it is the rank-2
// term U V with U = [e_i e_j] and V = [e_j^T; e_i^T].
struct FlipUpdate {
  std::size_t i = 0;
  std::size_t j = 0;
  FlipDirection direction = FlipDirection::kPositiveToNegative;
};

// Resolvent of P plus the running weak-imbalance trace 1/2 Tr[N R]. The
// negative edges are carried along so a flip can keep both in sync.
struct ResolventState {
  Matrix resolvent;
  double shift = 0.0;
  double trace_nr = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> negative_edges;
};

ResolventState MakeResolventState(const SignedNetwork& net, double shift);

// Change in trace_nr caused by `flip`, without forming the new resolvent.
// O(n + |N|). DomainError if the flip would push lambda_P past z.
double WeakFlipDelta(const ResolventState& state, const FlipUpdate& flip);

// Woodbury rank-2 update of the resolvent, O(n^2). Also moves the edge
// between P and N and refreshes trace_nr.
ResolventState WoodburyFlip(const ResolventState& state, const FlipUpdate& flip);
void ApplyWoodburyFlip(ResolventState& state, const FlipUpdate& flip);

// Inverse and log-determinant of A = zI - (P-N), plus the unsigned
// log det[zI - (P+N)] that no sign flip changes.
struct DetState {
  Matrix a_inv;
  double shift = 0.0;
  double log_det_a = 0.0;
  double log_det_unsigned = 0.0;
};

DetState MakeDetState(const SignedNetwork& net, double shift);

// log det(I + c V A^-1 U) with c = +2 for positive-to-negative and -2 for
// the reverse, read from four cached entries of A^-1. DomainError when the
// determinant is not positive.
double DetLemmaDelta(const DetState& state, const FlipUpdate& flip);

struct DetFlipResult {
  double delta_log_det = 0.0;
  DetState updated;
};

DetFlipResult DetLemmaFlip(const DetState& state, const FlipUpdate& flip);
double ApplyDetLemmaFlip(DetState& state, const FlipUpdate& flip);

}  // namespace signbal

#endif  // SIGNBAL_SPECTRAL_H_
