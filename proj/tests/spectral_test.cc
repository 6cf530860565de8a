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

#include "signbal/spectral.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "Eigen/Eigenvalues"
#include "gtest/gtest.h"
#include "signbal/errors.h"
#include "signbal/random.h"
#include "signbal/signed_graph.h"

namespace signbal {
namespace {

const double kSqrt2 = std::numbers::sqrt2;

Matrix PathAdjacency(int n) {
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = 1;
  return m;
}

Matrix K3() { return Matrix::Ones(3, 3) - Matrix::Identity(3, 3); }

double MaxRelativeError(const Matrix& got, const Matrix& want) {
  const double floor = 1e-12 * std::max(1.0, want.cwiseAbs().maxCoeff());
  double worst = 0;
  for (Eigen::Index i = 0; i < want.rows(); ++i) {
    for (Eigen::Index j = 0; j < want.cols(); ++j) {
      const double d = std::abs(got(i, j) - want(i, j));
      worst = std::max(worst, d / std::max(std::abs(want(i, j)), floor));
    }
  }
  return worst;
}

FlipUpdate FlipOf(const SignedNetwork& net, std::size_t k) {
  const Edge& e = net.edge(k);
  return {e.u, e.v,
          e.sign == Sign::kPositive ? FlipDirection::kPositiveToNegative
                                    : FlipDirection::kNegativeToPositive};
}

SignedNetwork FlipEdge(const SignedNetwork& net, std::size_t k) {
  std::vector<Sign> s = net.signs();
  s[k] = Flipped(s[k]);
  return net.WithSigns(s);
}

TEST(LeadingEigenvalueTest, KnownSpectra) {
  EXPECT_NEAR(LeadingEigenvalue(K3()), 2.0, 1e-9);
  EXPECT_NEAR(LeadingEigenvalue(PathAdjacency(2)), 1.0, 1e-9);
  EXPECT_NEAR(LeadingEigenvalue(PathAdjacency(3)), kSqrt2, 1e-9);
  EXPECT_EQ(LeadingEigenvalue(Matrix::Zero(4, 4)), 0.0);
  EXPECT_EQ(LeadingEigenvalue(Matrix(0, 0)), 0.0);
}

TEST(LeadingEigenvalueTest, BipartiteAndDisconnected) {
  // Path spectra are symmetric; the largest algebraic eigenvalue is wanted.
  EXPECT_NEAR(LeadingEigenvalue(PathAdjacency(6)), 2 * std::cos(std::numbers::pi / 7), 1e-9);
  Matrix blocks = Matrix::Zero(5, 5);
  blocks.topLeftCorner(3, 3) = K3();
  blocks(3, 4) = blocks(4, 3) = 1;
  EXPECT_NEAR(LeadingEigenvalue(blocks), 2.0, 1e-9);
}

TEST(LeadingEigenvalueTest, MatchesDenseSolverOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix a = UnsignedAdjacency(RandomSignedNetwork(25, 0.2, 0.0, seed));
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    EXPECT_NEAR(LeadingEigenvalue(a), es.eigenvalues().maxCoeff(), 1e-8);
  }
}

TEST(ResolventTest, Examples) {
  EXPECT_TRUE(Resolvent(Matrix::Zero(3, 3), 1.0).isApprox(Matrix::Identity(3, 3)));
  const double z = 2 * kSqrt2;
  const Matrix r = Resolvent(PathAdjacency(3), z);
  EXPECT_NEAR(r(0, 2), 1.0 / (z * (z * z - 2)), 1e-12);
  EXPECT_NEAR(r(0, 2), 1.0 / (12 * kSqrt2), 1e-12);
}

TEST(ResolventTest, DefiningResidualAndSign) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Matrix p = SplitAdjacency(RandomSignedNetwork(30, 0.2, 0.3, seed)).positive;
    const double z = 1.5 * LeadingEigenvalue(p) + 1e-3;
    const Matrix r = Resolvent(p, z);
    const Matrix residual = (z * Matrix::Identity(30, 30) - p) * r - Matrix::Identity(30, 30);
    EXPECT_LE(residual.cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_GE(r.minCoeff(), -1e-14);
    // Entries shrink as z grows.
    EXPECT_TRUE(((r - Resolvent(p, z * 1.2)).array() >= -1e-14).all());
  }
}

TEST(ResolventTest, DomainError) {
  EXPECT_THROW(Resolvent(K3(), 2.0), DomainError);
  EXPECT_THROW(Resolvent(K3(), 1.0), DomainError);
}

TEST(LogDetRatioTest, Examples) {
  const Adjacency tri = SplitAdjacency(ParseEdgeList("1 2 +\n2 3 +\n1 3 -"));
  EXPECT_NEAR(LogDetRatio(tri.positive, tri.negative, 4.0), std::log(54.0 / 50.0), 1e-12);
  EXPECT_EQ(LogDetRatio(K3(), Matrix::Zero(3, 3), 4.0), 0.0);
}

TEST(LogDetRatioTest, BlockDiagonalIsAdditive) {
  const SignedNetwork a = RandomSignedNetwork(8, 0.5, 0.4, 1);
  const SignedNetwork b = RandomSignedNetwork(7, 0.5, 0.4, 2);
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) edges.push_back({e.u + 8, e.v + 8, e.sign});
  const SignedNetwork joint = SignedNetwork::WithIndexLabels(15, edges);
  const double z = 25.0;
  const Adjacency aa = SplitAdjacency(a), bb = SplitAdjacency(b), jj = SplitAdjacency(joint);
  EXPECT_NEAR(LogDetRatio(jj.positive, jj.negative, z),
              LogDetRatio(aa.positive, aa.negative, z) + LogDetRatio(bb.positive, bb.negative, z),
              1e-10);
}

TEST(LogDetRatioTest, NonNegative) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SignedNetwork net = RandomSignedNetwork(20, 0.3, 0.4, seed);
    const Adjacency a = SplitAdjacency(net);
    const double z = 2 * LeadingEigenvalue(a.positive + a.negative);
    EXPECT_GE(LogDetRatio(a.positive, a.negative, z), -1e-12);
  }
}

TEST(LogDetRatioTest, InsideSpectrumIsDomainError) {
  const Adjacency tri = SplitAdjacency(ParseEdgeList("1 2 +\n2 3 +\n1 3 -"));
  EXPECT_THROW(LogDetRatio(tri.positive, tri.negative, 1.5), DomainError);
}

TEST(LogTraceExpTest, Examples) {
  EXPECT_NEAR(LogTraceExp(Matrix::Zero(3, 3)), std::log(3.0), 1e-14);
  const double e = std::numbers::e;
  EXPECT_NEAR(LogTraceExp(K3()), std::log(e * e + 2 / e), 1e-12);
  EXPECT_NEAR(LogTraceExp(SignedAdjacency(ParseEdgeList("1 2 +\n2 3 +\n1 3 -"))),
              std::log(1 / (e * e) + 2 * e), 1e-12);
}

TEST(LogTraceExpTest, NoOverflowOnLargeSpectra) {
  const Matrix big = 2000.0 * K3();
  EXPECT_NEAR(LogTraceExp(big), 4000.0, 1e-9);
}

TEST(WoodburyFlipTest, SingleEdgeBecomesEmpty) {
  const SignedNetwork edge = ParseEdgeList("1 2 +");
  const ResolventState s = MakeResolventState(edge, 2.0);
  const ResolventState t = WoodburyFlip(s, {0, 1, FlipDirection::kPositiveToNegative});
  EXPECT_LE((t.resolvent - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
  // N now holds the edge and R is diagonal.
  EXPECT_NEAR(t.trace_nr, 0.0, 1e-15);
}

TEST(WoodburyFlipTest, MatchesFullRecomputeAndInvolution) {
  Rng rng(7);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const SignedNetwork net = RandomSignedNetwork(50, 0.15, 0.3, seed);
    const double z = 2 * LeadingEigenvalue(UnsignedAdjacency(net));
    const ResolventState base = MakeResolventState(net, z);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t k = rng.Below(net.num_edges());
      const FlipUpdate f = FlipOf(net, k);
      const SignedNetwork flipped = FlipEdge(net, k);
      const ResolventState upd = WoodburyFlip(base, f);
      const ResolventState full = MakeResolventState(flipped, z);
      EXPECT_LE(MaxRelativeError(upd.resolvent, full.resolvent), 1e-8);
      EXPECT_NEAR(upd.trace_nr, full.trace_nr, 1e-10 * std::max(1.0, full.trace_nr));
      EXPECT_NEAR(WeakFlipDelta(base, f), full.trace_nr - base.trace_nr,
                  1e-10 * std::max(1.0, full.trace_nr));
      const ResolventState back = WoodburyFlip(
          upd, FlipOf(flipped, k));
      EXPECT_LE((back.resolvent - base.resolvent).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(WoodburyFlipTest, CrossingTheBoundaryIsRefused) {
  // z just above lambda_P of the two positive edges; turning the negative
  // edge positive creates K3 with lambda 2 > z.
  const SignedNetwork tri = ParseEdgeList("1 2 +\n2 3 +\n1 3 -");
  const ResolventState s = MakeResolventState(tri, 1.9);
  EXPECT_THROW(WoodburyFlip(s, {0, 2, FlipDirection::kNegativeToPositive}), DomainError);
  EXPECT_THROW(WeakFlipDelta(s, {0, 2, FlipDirection::kNegativeToPositive}), DomainError);
}

TEST(DetLemmaFlipTest, TriangleExample) {
  const SignedNetwork k3 = ParseEdgeList("1 2 +\n2 3 +\n1 3 +");
  const DetState s = MakeDetState(k3, 4.0);
  const DetFlipResult r = DetLemmaFlip(s, {0, 2, FlipDirection::kPositiveToNegative});
  EXPECT_NEAR(r.delta_log_det, std::log(54.0 / 50.0), 1e-12);
  EXPECT_NEAR(DetLemmaDelta(s, {0, 2, FlipDirection::kPositiveToNegative}),
              std::log(54.0 / 50.0), 1e-12);
}

TEST(DetLemmaFlipTest, MatchesFullRecomputeAndInvolution) {
  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const SignedNetwork net = RandomSignedNetwork(50, 0.15, 0.3, seed + 100);
    const double z = 2 * LeadingEigenvalue(UnsignedAdjacency(net));
    const DetState base = MakeDetState(net, z);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t k = rng.Below(net.num_edges());
      const SignedNetwork flipped = FlipEdge(net, k);
      const DetFlipResult r = DetLemmaFlip(base, FlipOf(net, k));
      const DetState full = MakeDetState(flipped, z);
      EXPECT_NEAR(r.delta_log_det, full.log_det_a - base.log_det_a, 1e-8);
      EXPECT_LE(MaxRelativeError(r.updated.a_inv, full.a_inv), 1e-8);
      const DetFlipResult back = DetLemmaFlip(r.updated, FlipOf(flipped, k));
      EXPECT_NEAR(r.delta_log_det + back.delta_log_det, 0.0, 1e-10);
      EXPECT_LE((back.updated.a_inv - base.a_inv).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(DetStateTest, SignedDeterminantDominatesUnsigned) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SignedNetwork net = RandomSignedNetwork(20, 0.3, 0.5, seed);
    const DetState s = MakeDetState(net, 2 * LeadingEigenvalue(UnsignedAdjacency(net)));
    EXPECT_GE(s.log_det_a, s.log_det_unsigned - 1e-12);
    const Matrix a = s.shift * Matrix::Identity(20, 20) - SignedAdjacency(net);
    EXPECT_LE((a * s.a_inv - Matrix::Identity(20, 20)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(IncrementalDriftTest, ChainedFlipsStayClose) {
  Rng rng(3);
  SignedNetwork net = RandomSignedNetwork(40, 0.2, 0.3, 5);
  const double z = 2 * LeadingEigenvalue(UnsignedAdjacency(net));
  ResolventState r = MakeResolventState(net, z);
  DetState d = MakeDetState(net, z);
  for (int step = 0; step < 1000; ++step) {
    const std::size_t k = rng.Below(net.num_edges());
    const FlipUpdate f = FlipOf(net, k);
    // The weak state is bounded by lambda_P, which can only grow toward
    // lambda_{P+N} < z, so every flip is admissible.
    ApplyWoodburyFlip(r, f);
    ApplyDetLemmaFlip(d, f);
    net = FlipEdge(net, k);
  }
  EXPECT_LE((r.resolvent - MakeResolventState(net, z).resolvent).cwiseAbs().maxCoeff(), 1e-6);
  const DetState fresh = MakeDetState(net, z);
  EXPECT_LE((d.a_inv - fresh.a_inv).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_NEAR(d.log_det_a, fresh.log_det_a, 1e-6);
}

}  // namespace
}  // namespace signbal
