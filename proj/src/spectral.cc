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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "Eigen/Cholesky"
#include "Eigen/Eigenvalues"
#include "signbal/errors.h"
#include "signbal/random.h"

namespace signbal {

namespace {

struct SpdFactor {
  Matrix inverse;
  double log_det = 0.0;
};

// Cholesky with an LDL^T fallback. Returns false when the matrix is not
// positive definite.
bool FactorSpd(const Matrix& m, bool want_inverse, SpdFactor* out) {
  const Eigen::Index n = m.rows();
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() == Eigen::Success) {
    const auto& l = llt.matrixLLT();
    bool ok = true;
    double log_det = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!(l(k, k) > 0.0)) ok = false;
      log_det += 2.0 * std::log(l(k, k));
    }
    if (ok) {
      out->log_det = log_det;
      if (want_inverse) out->inverse = llt.solve(Matrix::Identity(n, n));
      return true;
    }
  }
  Eigen::LDLT<Matrix> ldlt(m);
  if (ldlt.info() != Eigen::Success) return false;
  const Vector d = ldlt.vectorD();
  double log_det = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!(d(k) > 0.0)) return false;
    log_det += std::log(d(k));
  }
  out->log_det = log_det;
  if (want_inverse) out->inverse = ldlt.solve(Matrix::Identity(n, n));
  return true;
}

Matrix Symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

std::string ShiftMessage(const char* what, double shift) {
  std::ostringstream out;
  out.precision(17);
  out << "shift z=" << shift << " does not exceed the leading eigenvalue of " << what;
  return out.str();
}

double FullLeadingEigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().maxCoeff();
}

Matrix ShiftedMinus(const Matrix& m, double shift) {
  Matrix a = -m;
  a.diagonal().array() += shift;
  return a;
}

struct TwoByTwo {
  double a00, a01, a10, a11;
  double det() const { return a00 * a11 - a01 * a10; }
  TwoByTwo inverse() const {
    const double d = det();
    return {a11 / d, -a01 / d, -a10 / d, a00 / d};
  }
};

}  // namespace

double LeadingEigenvalue(const Matrix& m, double tol) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 0.0;
  // Shift by the infinity norm so every eigenvalue of m + cI is >= 0 and
  // the most positive one dominates.
  const double c = m.cwiseAbs().rowwise().sum().maxCoeff();
  if (c == 0.0) return 0.0;

  Vector v(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    v(k) = 0.5 + static_cast<double>(SplitMix64(static_cast<std::uint64_t>(k)) >> 11) * 0x1.0p-53;
  }
  v.normalize();

  // Past this many iterations a dense eigendecomposition is cheaper.
  const long budget = std::min<long>(kMaxPowerIterations, 50 + 10 * static_cast<long>(n));
  Vector w(n);
  for (long it = 0; it < budget; ++it) {
    w.noalias() = m * v;
    w += c * v;
    const double theta = v.dot(w);
    const double residual = (w - theta * v).norm();
    if (residual <= tol * std::max(1.0, std::abs(theta))) return theta - c;
    const double norm = w.norm();
    if (norm == 0.0) break;
    v = w / norm;
  }
  return FullLeadingEigenvalue(m);
}

double LogDetSpd(const Matrix& m) {
  SpdFactor f;
  if (!FactorSpd(m, false, &f)) throw DomainError("matrix is not positive definite");
  return f.log_det;
}

Matrix InverseSpd(const Matrix& m) {
  SpdFactor f;
  if (!FactorSpd(m, true, &f)) throw DomainError("matrix is not positive definite");
  return Symmetrized(f.inverse);
}

Matrix Resolvent(const Matrix& positive, double shift) {
  SpdFactor f;
  if (!FactorSpd(ShiftedMinus(positive, shift), true, &f)) {
    throw DomainError(ShiftMessage("P", shift));
  }
  return Symmetrized(f.inverse);
}

double LogDetRatio(const Matrix& positive, const Matrix& negative, double shift) {
  SpdFactor signed_f, unsigned_f;
  if (!FactorSpd(ShiftedMinus(positive + negative, shift), false, &unsigned_f) ||
      !FactorSpd(ShiftedMinus(positive - negative, shift), false, &signed_f)) {
    throw DomainError(ShiftMessage("P+N", shift));
  }
  return signed_f.log_det - unsigned_f.log_det;
}

double LogTraceExp(const Matrix& m) {
  if (m.rows() == 0) return -std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
  const Vector& mu = eig.eigenvalues();
  const double top = mu.maxCoeff();
  return top + std::log((mu.array() - top).exp().sum());
}

ResolventState MakeResolventState(const SignedNetwork& net, double shift) {
  ResolventState state;
  state.shift = shift;
  state.resolvent = Resolvent(SplitAdjacency(net).positive, shift);
  for (const Edge& e : net.edges()) {
    if (e.sign == Sign::kNegative) {
      state.negative_edges.emplace_back(e.u, e.v);
      state.trace_nr += state.resolvent(e.u, e.v);
    }
  }
  return state;
}

namespace {

// Capacitance I - s V R U with s = +1 when the edge joins P.
TwoByTwo Capacitance(const Matrix& r, const FlipUpdate& f, double s) {
  const auto i = static_cast<Eigen::Index>(f.i);
  const auto j = static_cast<Eigen::Index>(f.j);
  return {1.0 - s * r(j, i), -s * r(j, j), -s * r(i, i), 1.0 - s * r(i, j)};
}

double PositiveGain(const FlipUpdate& f) {
  return f.direction == FlipDirection::kNegativeToPositive ? 1.0 : -1.0;
}

}  // namespace

double WeakFlipDelta(const ResolventState& state, const FlipUpdate& flip) {
  const Matrix& r = state.resolvent;
  const auto i = static_cast<Eigen::Index>(flip.i);
  const auto j = static_cast<Eigen::Index>(flip.j);
  const double s = PositiveGain(flip);
  const TwoByTwo cap = Capacitance(r, flip, s);
  if (!(cap.det() > 0.0)) throw DomainError(ShiftMessage("P after the flip", state.shift));
  const TwoByTwo inv = cap.inverse();

  // Quadratic forms of N with columns i and j of R.
  double a = 0.0, b = 0.0, c = 0.0;
  for (const auto& [u, v] : state.negative_edges) {
    const double ri_u = r(u, i), ri_v = r(v, i), rj_u = r(u, j), rj_v = r(v, j);
    a += 2.0 * ri_u * ri_v;
    b += ri_u * rj_v + ri_v * rj_u;
    c += 2.0 * rj_u * rj_v;
  }
  const double n_dot_w = inv.a00 * b + inv.a01 * a + inv.a10 * c + inv.a11 * b;
  const double w_ij = r(i, i) * (inv.a00 * r(j, j) + inv.a01 * r(i, j)) +
                      r(i, j) * (inv.a10 * r(j, j) + inv.a11 * r(i, j));
  const double new_r_ij = r(i, j) + s * w_ij;
  return 0.5 * s * n_dot_w - s * new_r_ij;
}

void ApplyWoodburyFlip(ResolventState& state, const FlipUpdate& flip) {
  Matrix& r = state.resolvent;
  const auto i = static_cast<Eigen::Index>(flip.i);
  const auto j = static_cast<Eigen::Index>(flip.j);
  const double s = PositiveGain(flip);
  const TwoByTwo cap = Capacitance(r, flip, s);
  if (!(cap.det() > 0.0)) throw DomainError(ShiftMessage("P after the flip", state.shift));
  const TwoByTwo inv = cap.inverse();

  const Vector ri = r.col(i);
  const Vector rj = r.col(j);
  // R' = R + s [ri rj] C^-1 [rj^T; ri^T]
  const Vector left0 = inv.a00 * ri + inv.a10 * rj;
  const Vector left1 = inv.a01 * ri + inv.a11 * rj;
  r.noalias() += s * (left0 * rj.transpose() + left1 * ri.transpose());
  r = Symmetrized(r);

  auto& neg = state.negative_edges;
  const auto key = std::minmax(flip.i, flip.j);
  if (flip.direction == FlipDirection::kNegativeToPositive) {
    auto it = std::find(neg.begin(), neg.end(), std::pair(key.first, key.second));
    if (it != neg.end()) neg.erase(it);
  } else {
    neg.emplace_back(key.first, key.second);
  }
  state.trace_nr = 0.0;
  for (const auto& [u, v] : neg) state.trace_nr += r(u, v);
}

ResolventState WoodburyFlip(const ResolventState& state, const FlipUpdate& flip) {
  ResolventState next = state;
  ApplyWoodburyFlip(next, flip);
  return next;
}

DetState MakeDetState(const SignedNetwork& net, double shift) {
  DetState state;
  state.shift = shift;
  SpdFactor signed_f, unsigned_f;
  if (!FactorSpd(ShiftedMinus(UnsignedAdjacency(net), shift), false, &unsigned_f) ||
      !FactorSpd(ShiftedMinus(SignedAdjacency(net), shift), true, &signed_f)) {
    throw DomainError(ShiftMessage("P+N", shift));
  }
  state.a_inv = Symmetrized(signed_f.inverse);
  state.log_det_a = signed_f.log_det;
  state.log_det_unsigned = unsigned_f.log_det;
  return state;
}

namespace {

// A' = A + c U V; c = +2 removes a positive sign, -2 removes a negative one.
double DetCoefficient(const FlipUpdate& f) {
  return f.direction == FlipDirection::kPositiveToNegative ? 2.0 : -2.0;
}

TwoByTwo LemmaMatrix(const Matrix& g, const FlipUpdate& f) {
  const auto i = static_cast<Eigen::Index>(f.i);
  const auto j = static_cast<Eigen::Index>(f.j);
  const double c = DetCoefficient(f);
  return {1.0 + c * g(j, i), c * g(j, j), c * g(i, i), 1.0 + c * g(i, j)};
}

}  // namespace

double DetLemmaDelta(const DetState& state, const FlipUpdate& flip) {
  const double det = LemmaMatrix(state.a_inv, flip).det();
  if (!(det > 0.0)) throw DomainError(ShiftMessage("P-N after the flip", state.shift));
  return std::log(det);
}

double ApplyDetLemmaFlip(DetState& state, const FlipUpdate& flip) {
  const TwoByTwo d = LemmaMatrix(state.a_inv, flip);
  if (!(d.det() > 0.0)) throw DomainError(ShiftMessage("P-N after the flip", state.shift));
  const double delta = std::log(d.det());
  const TwoByTwo inv = d.inverse();
  const double c = DetCoefficient(flip);
  Matrix& g = state.a_inv;
  const auto i = static_cast<Eigen::Index>(flip.i);
  const auto j = static_cast<Eigen::Index>(flip.j);
  const Vector gi = g.col(i);
  const Vector gj = g.col(j);
  // G' = G - c [gi gj] D^-1 [gj^T; gi^T]
  const Vector left0 = inv.a00 * gi + inv.a10 * gj;
  const Vector left1 = inv.a01 * gi + inv.a11 * gj;
  g.noalias() -= c * (left0 * gj.transpose() + left1 * gi.transpose());
  g = Symmetrized(g);
  state.log_det_a += delta;
  return delta;
}

DetFlipResult DetLemmaFlip(const DetState& state, const FlipUpdate& flip) {
  DetFlipResult out{0.0, state};
  out.delta_log_det = ApplyDetLemmaFlip(out.updated, flip);
  return out;
}

}  // namespace signbal
