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

#include "signbal/signed_graph.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "signbal/errors.h"
#include "signbal/random.h"

namespace signbal {

namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

std::string LineError(std::size_t line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

Sign ParseSign(std::string_view token, std::size_t line_no) {
  if (token == "+" || token == "+1" || token == "1") return Sign::kPositive;
  if (token == "-" || token == "-1") return Sign::kNegative;
  throw InputError(LineError(line_no, "malformed sign token '" + std::string(token) + "'"));
}

// Accumulates records for one network, applying the duplicate policy.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(ConflictPolicy policy) : policy_(policy) {}

  void Add(std::string_view a, std::string_view b, Sign sign, std::size_t line_no) {
    if (a == b) throw InputError(LineError(line_no, "self-loop on '" + std::string(a) + "'"));
    std::size_t u = Intern(a);
    std::size_t v = Intern(b);
    if (u > v) std::swap(u, v);
    const auto key = std::make_pair(u, v);
    auto it = index_.find(key);
    if (it == index_.end()) {
      index_.emplace(key, edges_.size());
      edges_.push_back({u, v, sign});
      return;
    }
    Edge& existing = edges_[it->second];
    if (existing.sign == sign) return;
    if (policy_ == ConflictPolicy::kError) {
      throw InputError(LineError(line_no, "conflicting signs for pair '" + std::string(a) +
                                              "' '" + std::string(b) + "'"));
    }
    existing.sign = Sign::kNegative;
  }

  SignedNetwork Build() && { return SignedNetwork(std::move(labels_), std::move(edges_)); }

 private:
  std::size_t Intern(std::string_view label) {
    auto it = ids_.find(std::string(label));
    if (it != ids_.end()) return it->second;
    ids_.emplace(std::string(label), labels_.size());
    labels_.emplace_back(label);
    return labels_.size() - 1;
  }

  ConflictPolicy policy_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<Edge> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

template <typename Fn>
void ForEachDataLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    auto fields = SplitFields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    fn(fields, line_no);
    if (end == text.size()) break;
  }
}

}  // namespace

SignedNetwork::SignedNetwork(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  edge_index_.reserve(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    Edge& e = edges_[k];
    if (e.u == e.v) throw InputError("self-loop on node " + std::to_string(e.u));
    if (e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!edge_index_.emplace(PairKey(e.u, e.v), k).second) {
      throw InputError("repeated pair " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
}

SignedNetwork SignedNetwork::WithIndexLabels(std::size_t n, std::vector<Edge> edges) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return SignedNetwork(std::move(labels), std::move(edges));
}

std::uint64_t SignedNetwork::PairKey(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::size_t SignedNetwork::num_negative() const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign == Sign::kNegative; }));
}

std::optional<std::size_t> SignedNetwork::FindEdge(std::size_t a, std::size_t b) const {
  auto it = edge_index_.find(PairKey(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SignedNetwork::FindNode(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<Sign> SignedNetwork::signs() const {
  std::vector<Sign> out(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) out[k] = edges_[k].sign;
  return out;
}

SignedNetwork SignedNetwork::WithSigns(std::span<const Sign> signs) const {
  if (signs.size() != edges_.size()) throw InputError("sign vector length mismatch");
  SignedNetwork out = *this;
  for (std::size_t k = 0; k < signs.size(); ++k) out.edges_[k].sign = signs[k];
  return out;
}

SignMask::SignMask(const SignedNetwork& host, std::vector<std::size_t> hidden_edges)
    : hidden_(std::move(hidden_edges)), candidate_(hidden_.size(), Sign::kPositive) {
  std::unordered_set<std::size_t> seen;
  for (std::size_t k : hidden_) {
    if (k >= host.num_edges()) throw InputError("hidden edge index out of range");
    if (!seen.insert(k).second) throw InputError("hidden edge listed twice");
  }
}

std::map<std::size_t, Sign> SignMask::assignment() const {
  std::map<std::size_t, Sign> out;
  for (std::size_t k = 0; k < hidden_.size(); ++k) out.emplace(hidden_[k], candidate_[k]);
  return out;
}

std::vector<Sign> SignMask::Apply(const SignedNetwork& host) const {
  std::vector<Sign> signs = host.signs();
  for (std::size_t k = 0; k < hidden_.size(); ++k) signs[hidden_[k]] = candidate_[k];
  return signs;
}

SignedNetwork ParseEdgeList(std::string_view text, ConflictPolicy policy) {
  NetworkBuilder builder(policy);
  ForEachDataLine(text, [&](const std::vector<std::string_view>& f, std::size_t line_no) {
    if (f.size() < 3) throw InputError(LineError(line_no, "expected 'u v sign'"));
    if (f.size() > 3) throw InputError(LineError(line_no, "too many fields"));
    builder.Add(f[0], f[1], ParseSign(f[2], line_no), line_no);
  });
  return std::move(builder).Build();
}

std::vector<Layer> ParseLayeredEdgeList(std::string_view text, ConflictPolicy policy) {
  std::size_t columns = 0;
  ForEachDataLine(text, [&](const std::vector<std::string_view>& f, std::size_t) {
    if (columns == 0) columns = f.size();
  });
  if (columns != 4) {
    return {Layer{"", ParseEdgeList(text, policy)}};
  }
  std::map<std::string, NetworkBuilder, std::less<>> builders;
  ForEachDataLine(text, [&](const std::vector<std::string_view>& f, std::size_t line_no) {
    if (f.size() != 4) throw InputError(LineError(line_no, "expected 'layer u v sign'"));
    auto it = builders.find(f[0]);
    if (it == builders.end()) it = builders.emplace(std::string(f[0]), NetworkBuilder(policy)).first;
    it->second.Add(f[1], f[2], ParseSign(f[3], line_no), line_no);
  });
  std::vector<Layer> layers;
  for (auto& [name, builder] : builders) {
    layers.push_back(Layer{name, std::move(builder).Build()});
  }
  return layers;
}

std::string WriteEdgeList(const SignedNetwork& net) {
  std::ostringstream out;
  for (const Edge& e : net.edges()) {
    out << net.labels()[e.u] << ' ' << net.labels()[e.v] << ' '
        << (e.sign == Sign::kPositive ? '+' : '-') << '\n';
  }
  return out.str();
}

Adjacency SplitAdjacency(const SignedNetwork& net) {
  const auto n = static_cast<Eigen::Index>(net.num_nodes());
  Adjacency adj{Matrix::Zero(n, n), Matrix::Zero(n, n)};
  for (const Edge& e : net.edges()) {
    Matrix& m = e.sign == Sign::kPositive ? adj.positive : adj.negative;
    m(e.u, e.v) = 1.0;
    m(e.v, e.u) = 1.0;
  }
  return adj;
}

Matrix SignedAdjacency(const SignedNetwork& net) {
  const auto n = static_cast<Eigen::Index>(net.num_nodes());
  Matrix m = Matrix::Zero(n, n);
  for (const Edge& e : net.edges()) {
    m(e.u, e.v) = m(e.v, e.u) = ToInt(e.sign);
  }
  return m;
}

Matrix UnsignedAdjacency(const SignedNetwork& net) {
  const auto n = static_cast<Eigen::Index>(net.num_nodes());
  Matrix m = Matrix::Zero(n, n);
  for (const Edge& e : net.edges()) m(e.u, e.v) = m(e.v, e.u) = 1.0;
  return m;
}

SignedNetwork SwitchNodes(const SignedNetwork& net, std::span<const std::size_t> subset) {
  std::vector<bool> in(net.num_nodes(), false);
  for (std::size_t i : subset) {
    if (i >= net.num_nodes()) throw InputError("switch subset node out of range");
    in[i] = true;
  }
  std::vector<Sign> signs = net.signs();
  for (std::size_t k = 0; k < signs.size(); ++k) {
    const Edge& e = net.edge(k);
    if (in[e.u] != in[e.v]) signs[k] = Flipped(signs[k]);
  }
  return net.WithSigns(signs);
}

std::size_t PlantedFaction(std::size_t node, std::size_t n, std::size_t g) {
  return node * g / n;
}

SignedNetwork PlantedFactionNetwork(const PlantedFactionParams& p) {
  if (p.factions < 1) throw InputError("need at least one faction");
  if (p.nodes < p.factions) throw InputError("fewer nodes than factions");
  if (!(p.density > 0.0 && p.density <= 1.0)) throw InputError("density must be in (0,1]");
  if (!(p.noise >= 0.0 && p.noise < 1.0)) throw InputError("noise must be in [0,1)");
  Rng rng(p.seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p.nodes; ++i) {
    for (std::size_t j = i + 1; j < p.nodes; ++j) {
      if (p.density < 1.0 && !rng.Bernoulli(p.density)) continue;
      Sign s = PlantedFaction(i, p.nodes, p.factions) == PlantedFaction(j, p.nodes, p.factions)
                   ? Sign::kPositive
                   : Sign::kNegative;
      if (p.noise > 0.0 && rng.Bernoulli(p.noise)) s = Flipped(s);
      edges.push_back({i, j, s});
    }
  }
  return SignedNetwork::WithIndexLabels(p.nodes, std::move(edges));
}

SignedNetwork RandomSignedNetwork(std::size_t n, double density, double negative_probability,
                                  std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!rng.Bernoulli(density)) continue;
      edges.push_back({i, j, rng.Bernoulli(negative_probability) ? Sign::kNegative : Sign::kPositive});
    }
  }
  return SignedNetwork::WithIndexLabels(n, std::move(edges));
}

double NegativeFraction(const SignedNetwork& net) {
  if (net.num_edges() == 0) throw InputError("negative fraction of an edgeless network");
  return static_cast<double>(net.num_negative()) / static_cast<double>(net.num_edges());
}

}  // namespace signbal
