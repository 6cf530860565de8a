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

#ifndef SIGNBAL_SIGNED_GRAPH_H_
#define SIGNBAL_SIGNED_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "Eigen/Core"

namespace signbal {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Sign : std::int8_t { kNegative = -1, kPositive = 1 };

inline int ToInt(Sign s) { return static_cast<int>(s); }
inline Sign Flipped(Sign s) {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}
inline Sign SignFromInt(int v) { return v < 0 ? Sign::kNegative : Sign::kPositive; }

// Undirected edge with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Sign sign = Sign::kPositive;

  bool operator==(const Edge&) const = default;
};

// Undirected network with +1/-1 edge signs. Immutable once built; every
// transform returns a new network. Edge order is stable and is the index
// space used by masks, shuffles and prediction reports.
class SignedNetwork {
 public:
  SignedNetwork() = default;

  // Edges are normalized to u < v. Throws InputError on self-loops,
  // repeated pairs or out-of-range endpoints.
  SignedNetwork(std::vector<std::string> labels, std::vector<Edge> edges);

  // Nodes labelled "0" .. "n-1".
  static SignedNetwork WithIndexLabels(std::size_t n, std::vector<Edge> edges);

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_negative() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_[k]; }

  std::optional<std::size_t> FindEdge(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> FindNode(std::string_view label) const;

  std::vector<Sign> signs() const;

  // Same nodes and edge positions, signs replaced (one per edge).
  SignedNetwork WithSigns(std::span<const Sign> signs) const;

  bool operator==(const SignedNetwork& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  static std::uint64_t PairKey(std::size_t a, std::size_t b);

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

// Edges whose signs are treated as unknown, together with a candidate sign
// for each of them.
class SignMask {
 public:
  SignMask() = default;
  // Candidate signs start at +1. Throws InputError on duplicates or
  // indices outside the host network.
  SignMask(const SignedNetwork& host, std::vector<std::size_t> hidden_edges);

  const std::vector<std::size_t>& hidden_edges() const { return hidden_; }
  std::size_t size() const { return hidden_.size(); }
  bool empty() const { return hidden_.empty(); }

  // Candidate sign of the k-th hidden edge (position in hidden_edges()).
  Sign candidate(std::size_t k) const { return candidate_[k]; }
  void set_candidate(std::size_t k, Sign s) { candidate_[k] = s; }
  const std::vector<Sign>& candidates() const { return candidate_; }

  // Edge index -> candidate sign.
  std::map<std::size_t, Sign> assignment() const;

  // The host's signs with hidden edges replaced by their candidates.
  std::vector<Sign> Apply(const SignedNetwork& host) const;

 private:
  std::vector<std::size_t> hidden_;
  std::vector<Sign> candidate_;
};

enum class ConflictPolicy { kError, kNegativeWins };

// One "u v s" record per line; '#' starts a comment line. Sign tokens are
// "+", "-", "+1", "-1" and "1". Labels are interned in order of first
// appearance. Identical duplicates are merged; conflicting duplicates
// either throw or resolve to negative. Errors carry 1-based line numbers.
SignedNetwork ParseEdgeList(std::string_view text,
                            ConflictPolicy policy = ConflictPolicy::kError);

struct Layer {
  std::string name;
  SignedNetwork network;
};

// Accepts both the plain 3-column format (a single layer named "") and the
// 4-column "layer u v s" format. The column count of the first data line
// decides the format. Layers come back in lexicographic order.
std::vector<Layer> ParseLayeredEdgeList(
    std::string_view text, ConflictPolicy policy = ConflictPolicy::kError);

// Inverse of ParseEdgeList. Isolated nodes cannot be represented and are
// dropped.
std::string WriteEdgeList(const SignedNetwork& net);

struct Adjacency {
  Matrix positive;
  Matrix negative;
};

// P and N as dense symmetric 0/1 matrices.
Adjacency SplitAdjacency(const SignedNetwork& net);
Matrix SignedAdjacency(const SignedNetwork& net);    // P - N
Matrix UnsignedAdjacency(const SignedNetwork& net);  // P + N

// Flips every edge with exactly one endpoint in `subset`.
SignedNetwork SwitchNodes(const SignedNetwork& net,
                          std::span<const std::size_t> subset);

struct PlantedFactionParams {
  std::size_t nodes = 0;
  std::size_t factions = 2;
  double density = 1.0;
  double noise = 0.0;
  std::uint64_t seed = 0;
};

// Faction of `node` when n nodes are cut into g contiguous near-equal blocks.
std::size_t PlantedFaction(std::size_t node, std::size_t n, std::size_t g);

// Every pair joined with probability density; positive inside a faction,
// negative across; each sign then flipped with probability noise.
SignedNetwork PlantedFactionNetwork(const PlantedFactionParams& params);

// Erdos-Renyi positions with independent signs, negative with
// probability negative_probability.
SignedNetwork RandomSignedNetwork(std::size_t n, double density,
                                  double negative_probability,
                                  std::uint64_t seed);

// Throws InputError on an edgeless network.
double NegativeFraction(const SignedNetwork& net);

}  // namespace signbal

#endif  // SIGNBAL_SIGNED_GRAPH_H_
