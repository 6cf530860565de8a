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

#include "signbal/oracle.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "signbal/errors.h"

namespace signbal::oracle {

namespace {

using Dense = std::vector<double>;

struct Matrices {
  std::size_t n = 0;
  Dense positive, negative;
};

Matrices Build(const SignedNetwork& net) {
  Matrices m;
  m.n = net.num_nodes();
  m.positive.assign(m.n * m.n, 0.0);
  m.negative.assign(m.n * m.n, 0.0);
  for (const Edge& e : net.edges()) {
    Dense& target = e.sign == Sign::kPositive ? m.positive : m.negative;
    target[e.u * m.n + e.v] = 1.0;
    target[e.v * m.n + e.u] = 1.0;
  }
  return m;
}

Dense Multiply(const Dense& a, const Dense& b, std::size_t n) {
  Dense c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  }
  return c;
}

Dense Identity(std::size_t n, double scale = 1.0) {
  Dense id(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = scale;
  return id;
}

Dense Scaled(const Dense& a, double c) {
  Dense out(a);
  for (double& v : out) v *= c;
  return out;
}

Dense Combine(const Dense& a, double ca, const Dense& b, double cb) {
  Dense out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = ca * a[k] + cb * b[k];
  return out;
}

double Trace(const Dense& a, std::size_t n) {
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) t += a[i * n + i];
  return t;
}

// sum_ij N_ij A_ji
double Contract(const Dense& negative, const Dense& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s += negative[i * n + j] * a[j * n + i];
  }
  return s;
}

}  // namespace

double JacobiLeadingEigenvalue(std::vector<double> a, std::size_t n) {
  if (n == 0) return 0.0;
  double scale = 0.0;
  for (double v : a) scale += v * v;
  if (scale == 0.0) return 0.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    }
    if (off <= 1e-30 * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  double top = a[0];
  for (std::size_t i = 1; i < n; ++i) top = std::max(top, a[i * n + i]);
  return top;
}

double TruncatedWeakImbalance(const SignedNetwork& net, double alpha, std::size_t terms) {
  const Matrices m = Build(net);
  const std::size_t n = m.n;
  const double z = alpha * JacobiLeadingEigenvalue(m.positive, n);
  if (z == 0.0) return 0.0;
  // power = P^(k-1) / z^k, starting at k = 1.
  Dense power = Identity(n, 1.0 / z);
  const Dense step = Scaled(m.positive, 1.0 / z);
  double sum = 0.0;
  for (std::size_t k = 1; k <= terms; ++k) {
    sum += 0.5 * Contract(m.negative, power, n);
    power = Multiply(step, power, n);
  }
  return sum;
}

double TruncatedStrongImbalance(const SignedNetwork& net, double alpha, std::size_t terms) {
  const Matrices m = Build(net);
  const std::size_t n = m.n;
  const Dense sum_pn = Combine(m.positive, 1.0, m.negative, 1.0);
  const Dense diff_pn = Combine(m.positive, 1.0, m.negative, -1.0);
  const double z = alpha * JacobiLeadingEigenvalue(sum_pn, n);
  if (z == 0.0) return 0.0;
  const Dense unsigned_step = Scaled(sum_pn, 1.0 / z);
  const Dense signed_step = Scaled(diff_pn, 1.0 / z);
  Dense unsigned_power = unsigned_step;
  Dense signed_power = signed_step;
  double sum = 0.0;
  for (std::size_t k = 1; k <= terms; ++k) {
    sum += 0.25 * (Trace(unsigned_power, n) - Trace(signed_power, n)) / static_cast<double>(k);
    unsigned_power = Multiply(unsigned_step, unsigned_power, n);
    signed_power = Multiply(signed_step, signed_power, n);
  }
  return sum;
}

std::vector<double> WeakWalkCounts(const SignedNetwork& net, std::size_t max_len) {
  const Matrices m = Build(net);
  const std::size_t n = m.n;
  std::vector<double> counts(max_len + 1, 0.0);
  Dense power = Identity(n);  // P^(k-1)
  for (std::size_t k = 1; k <= max_len; ++k) {
    counts[k] = 0.5 * Contract(m.negative, power, n);
    power = Multiply(m.positive, power, n);
  }
  return counts;
}

std::vector<double> StrongWalkCounts(const SignedNetwork& net, std::size_t max_len) {
  const Matrices m = Build(net);
  const std::size_t n = m.n;
  const Dense sum_pn = Combine(m.positive, 1.0, m.negative, 1.0);
  const Dense diff_pn = Combine(m.positive, 1.0, m.negative, -1.0);
  std::vector<double> counts(max_len + 1, 0.0);
  Dense up = sum_pn, sp = diff_pn;
  for (std::size_t k = 1; k <= max_len; ++k) {
    counts[k] = (Trace(up, n) - Trace(sp, n)) / (4.0 * static_cast<double>(k));
    up = Multiply(sum_pn, up, n);
    sp = Multiply(diff_pn, sp, n);
  }
  return counts;
}

TriangleCensus CountTriangles(const SignedNetwork& net) {
  const std::size_t n = net.num_nodes();
  // 0 = no edge, 1 = positive, 2 = negative
  std::vector<int> kind(n * n, 0);
  for (const Edge& e : net.edges()) {
    const int k = e.sign == Sign::kPositive ? 1 : 2;
    kind[e.u * n + e.v] = kind[e.v * n + e.u] = k;
  }
  TriangleCensus census;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const int ab = kind[a * n + b];
      if (ab == 0) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        const int bc = kind[b * n + c];
        const int ca = kind[c * n + a];
        if (bc == 0 || ca == 0) continue;
        const int negatives = (ab == 2) + (bc == 2) + (ca == 2);
        std::uint64_t* slots[] = {&census.t0, &census.t1, &census.t2, &census.t3};
        ++*slots[negatives];
      }
    }
  }
  return census;
}

CycleCounts EnumerateImbalancedCycles(const SignedNetwork& net, std::size_t max_len) {
  const std::size_t n = net.num_nodes();
  if (n > kMaxCycleNodes) {
    throw InputError("cycle enumeration is limited to " + std::to_string(kMaxCycleNodes) +
                     " nodes");
  }
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj(n);  // (neighbor, negative)
  for (const Edge& e : net.edges()) {
    const bool neg = e.sign == Sign::kNegative;
    adj[e.u].emplace_back(e.v, neg);
    adj[e.v].emplace_back(e.u, neg);
  }
  // Directed counts; every cycle is found once per direction.
  CycleCounts directed;
  directed.total.assign(max_len + 1, 0);
  directed.weak_imbalanced.assign(max_len + 1, 0);
  directed.strong_imbalanced.assign(max_len + 1, 0);

  std::vector<bool> on_path(n, false);
  // Cycles are rooted at their smallest node.
  std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> dfs =
      [&](std::size_t root, std::size_t node, std::size_t length, std::size_t negatives) {
        for (const auto& [next, neg] : adj[node]) {
          const std::size_t nneg = negatives + (neg ? 1 : 0);
          if (next == root && length + 1 >= 3) {
            const std::size_t len = length + 1;
            ++directed.total[len];
            if (nneg == 1) ++directed.weak_imbalanced[len];
            if (nneg % 2 == 1) ++directed.strong_imbalanced[len];
            continue;
          }
          if (next <= root || on_path[next] || length + 1 >= max_len) continue;
          on_path[next] = true;
          dfs(root, next, length + 1, nneg);
          on_path[next] = false;
        }
      };
  for (std::size_t root = 0; root < n; ++root) {
    on_path[root] = true;
    dfs(root, root, 0, 0);
    on_path[root] = false;
  }
  CycleCounts out = directed;
  for (std::size_t k = 0; k <= max_len; ++k) {
    out.total[k] /= 2;
    out.weak_imbalanced[k] /= 2;
    out.strong_imbalanced[k] /= 2;
  }
  return out;
}

SearchResult ExhaustiveSignSearch(const SignedNetwork& net, const SignMask& mask,
                                  const BalanceConfig& cfg) {
  const std::size_t h = mask.size();
  if (h > kMaxExhaustiveHidden) {
    throw InputError("exhaustive search is limited to " + std::to_string(kMaxExhaustiveHidden) +
                     " hidden signs");
  }
  if (cfg.metric != Metric::kEb && !cfg.fixed_shift) {
    throw InputError("exhaustive search needs a fixed shift");
  }
  std::vector<Sign> signs = net.signs();
  const auto& hidden = mask.hidden_edges();
  std::optional<double> best;
  std::vector<Sign> best_pattern;
  std::size_t best_positives = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << h); ++code) {
    // Bit (h-1-k) set means hidden edge k is negative, so increasing codes
    // walk the sign vectors in lexicographic order with + first.
    std::vector<Sign> pattern(h);
    std::size_t positives = 0;
    for (std::size_t k = 0; k < h; ++k) {
      const bool negative = (code >> (h - 1 - k)) & 1U;
      pattern[k] = negative ? Sign::kNegative : Sign::kPositive;
      positives += negative ? 0 : 1;
      signs[hidden[k]] = pattern[k];
    }
    const double energy = Imbalance(net.WithSigns(signs), cfg);
    bool take = false;
    if (!best) {
      take = true;
    } else {
      const double tol = 1e-12 * std::max({1.0, std::abs(energy), std::abs(*best)});
      if (energy < *best - tol) {
        take = true;
      } else if (std::abs(energy - *best) <= tol && positives > best_positives) {
        take = true;
      }
    }
    if (take) {
      best = energy;
      best_pattern = pattern;
      best_positives = positives;
    }
  }
  SearchResult result{mask, best.value_or(0.0)};
  for (std::size_t k = 0; k < h; ++k) result.assignment.set_candidate(k, best_pattern[k]);
  return result;
}

}  // namespace signbal::oracle
