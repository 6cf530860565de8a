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

#ifndef SIGNBAL_ORACLE_H_
#define SIGNBAL_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "signbal/balance.h"
#include "signbal/signed_graph.h"

// Brute-force references for tests and `signbal verify`. The series and
// census routines share no code with the spectral kernels: matrices are
// plain row-major vectors and eigenvalues come from cyclic Jacobi sweeps.
// The exhaustive search scores every assignment with a from-scratch
// Imbalance evaluation, never with rank-2 updates.
namespace signbal::oracle {

inline constexpr std::size_t kMaxCycleNodes = 14;
inline constexpr std::size_t kMaxExhaustiveHidden = 16;

// Largest eigenvalue of a symmetric n x n row-major matrix.
double JacobiLeadingEigenvalue(std::vector<double> m, std::size_t n);

// Series 1/2 sum_ij N_ij sum_{k=1..K} z^-k [P^(k-1)]_ji with z = alpha * lambda_P.
double TruncatedWeakImbalance(const SignedNetwork& net, double alpha, std::size_t terms);

// Series 1/4 sum_{k=1..K} (Tr (P+N)^k - Tr (P-N)^k) / (k z^k) with
// z = alpha * lambda_{P+N}.
double TruncatedStrongImbalance(const SignedNetwork& net, double alpha, std::size_t terms);

// Unweighted walk counts by length; entry k (k = 0 .. max_len) is the
// coefficient of z^-k. Weak: 1/2 sum_ij N_ij [P^(k-1)]_ji. Strong:
// I_k = (Tr (P+N)^k - Tr (P-N)^k) / (4k). Entry 0 is unused.
std::vector<double> WeakWalkCounts(const SignedNetwork& net, std::size_t max_len);
std::vector<double> StrongWalkCounts(const SignedNetwork& net, std::size_t max_len);

// Triangles by number of negative edges.
struct TriangleCensus {
  std::uint64_t t0 = 0, t1 = 0, t2 = 0, t3 = 0;
  std::uint64_t total() const { return t0 + t1 + t2 + t3; }
};

TriangleCensus CountTriangles(const SignedNetwork& net);

// Simple-cycle counts indexed by length (0 .. max_len).
struct CycleCounts {
  std::vector<std::uint64_t> total;
  std::vector<std::uint64_t> weak_imbalanced;    // exactly one negative edge
  std::vector<std::uint64_t> strong_imbalanced;  // odd number of negative edges
};

// Exhaustive DFS; each cycle counted once. Throws InputError above
// kMaxCycleNodes nodes.
CycleCounts EnumerateImbalancedCycles(const SignedNetwork& net, std::size_t max_len);

struct SearchResult {
  SignMask assignment;
  double energy = 0.0;
};

// True argmin of Imbalance over all 2^h assignments of the hidden signs at
// the shift in cfg (which must be fixed for metrics other than eb). Ties go
// to the assignment with more positive signs, then to the lexicographically
// smallest sign vector with + before -. Throws InputError above
// kMaxExhaustiveHidden hidden edges.
SearchResult ExhaustiveSignSearch(const SignedNetwork& net, const SignMask& mask,
                                  const BalanceConfig& cfg);

}  // namespace signbal::oracle

#endif  // SIGNBAL_ORACLE_H_
