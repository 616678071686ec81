// Copyright 2026 The qig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qig/channel.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "qig/errors.hpp"
#include "qig/sampling.hpp"

namespace qig {

KrausChannel::KrausChannel(Index in_dim, Index out_dim, std::vector<Matrix> kraus)
    : in_dim_(in_dim), out_dim_(out_dim), kraus_(std::move(kraus)) {
  if (in_dim_ < 1 || out_dim_ < 1) throw BadDims("channel dimensions must be positive");
  if (kraus_.empty()) throw BadDims("channel needs at least one Kraus operator");
  for (const Matrix& k : kraus_) {
    if (k.rows() != out_dim_ || k.cols() != in_dim_) {
      throw DimMismatch("Kraus operator shape does not match (out_dim x in_dim)");
    }
  }
  Matrix completeness = Matrix::Zero(in_dim_, in_dim_);
  for (const Matrix& k : kraus_) completeness += k.adjoint() * k;
  double defect = max_abs(completeness - Matrix::Identity(in_dim_, in_dim_));
  if (defect > 1e-10) {
    throw NotTracePreserving("Kraus completeness sum is off the identity by " +
                             std::to_string(defect));
  }
}

KrausChannel KrausChannel::identity(Index n) {
  return KrausChannel(n, n, {Matrix::Identity(n, n)});
}

KrausChannel KrausChannel::pinching(Index n) {
  if (n < 1) throw BadDims("pinching dimension must be positive");
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    Matrix p = Matrix::Zero(n, n);
    p(i, i) = Complex(1.0, 0.0);
    kraus.push_back(std::move(p));
  }
  return KrausChannel(n, n, std::move(kraus));
}

KrausChannel KrausChannel::partial_trace(Index keep_dim, Index env_dim) {
  if (keep_dim < 1 || env_dim < 1) throw BadDims("tensor factors must be positive");
  Index n = keep_dim * env_dim;
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(env_dim));
  for (Index s = 0; s < env_dim; ++s) {
    // (identity on the kept factor) tensor (bra s on the traced factor).
    Matrix k = Matrix::Zero(keep_dim, n);
    for (Index i = 0; i < keep_dim; ++i) {
      k(i, i * env_dim + s) = Complex(1.0, 0.0);
    }
    kraus.push_back(std::move(k));
  }
  return KrausChannel(n, keep_dim, std::move(kraus));
}

Matrix KrausChannel::apply_matrix(const Matrix& x) const {
  if (x.rows() != in_dim_ || x.cols() != in_dim_) {
    throw DimMismatch("channel input must be in_dim x in_dim");
  }
  Matrix out = Matrix::Zero(out_dim_, out_dim_);
  for (const Matrix& k : kraus_) out += k * x * k.adjoint();
  return out;
}

Matrix KrausChannel::adjoint_apply(const Matrix& a) const {
  if (a.rows() != out_dim_ || a.cols() != out_dim_) {
    throw DimMismatch("adjoint input must be out_dim x out_dim");
  }
  Matrix out = Matrix::Zero(in_dim_, in_dim_);
  for (const Matrix& k : kraus_) out += k.adjoint() * a * k;
  return out;
}

ChannelOutput apply(const KrausChannel& ch, const DensityMatrix& d) {
  Matrix raw = ch.apply_matrix(d.matrix());
  raw = 0.5 * (raw + raw.adjoint());
  double raw_lambda_min = hermitian_eig(raw).eigenvalues(0);

  if (raw_lambda_min >= kFaithfulnessFloor) {
    return ChannelOutput{DensityMatrix(std::move(raw)), false, raw_lambda_min, 0.0};
  }
  Index k = ch.out_dim();
  double delta = 10.0 * kFaithfulnessFloor * static_cast<double>(k);
  Matrix repaired = (1.0 - delta) * raw +
                    (delta / static_cast<double>(k)) * Matrix::Identity(k, k);
  return ChannelOutput{DensityMatrix(std::move(repaired)), true, raw_lambda_min, delta};
}

KrausChannel random_channel(Index n, Index k, Index env_dim, RngStream& rng) {
  if (n < 1 || k < 1 || env_dim < 1) throw BadDims("channel dimensions must be positive");
  if (k * env_dim < n) {
    throw BadDims("random channel needs k * env_dim >= n for an isometry to exist");
  }
  Matrix g = random_ginibre(k * env_dim, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix v = qr.householderQ() * Matrix::Identity(k * env_dim, n);

  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(env_dim));
  for (Index s = 0; s < env_dim; ++s) {
    Matrix ks(k, n);
    for (Index i = 0; i < k; ++i) ks.row(i) = v.row(i * env_dim + s);
    kraus.push_back(std::move(ks));
  }
  return KrausChannel(n, k, std::move(kraus));
}

namespace {

void require_traceless(const Observable& a) {
  double trace = std::abs(a.trace());
  if (trace > scaled_tol(1e-12, std::max(1.0, max_abs(a)))) {
    throw NotTraceless("direction must be traceless (|trace| = " +
                       std::to_string(trace) + ")");
  }
}

// Observable transform of the repaired composite map: the identity-mixing
// step sends X to (1-delta) X + delta Tr(X) I/k, and its HS adjoint sends A
// to (1-delta) A + delta (Tr A / k) I.
Matrix mix_forward(const Matrix& x, double delta, Index k) {
  if (delta == 0.0) return x;
  return (1.0 - delta) * x +
         (delta * x.trace() / static_cast<double>(k)) * Matrix::Identity(k, k);
}

Matrix mix_adjoint(const Matrix& a, double delta, Index k, Index n) {
  if (delta == 0.0) return a;
  return (1.0 - delta) * a +
         (delta * a.trace() / static_cast<double>(k)) * Matrix::Identity(n, n);
}

// Metric value at a possibly non-faithful raw output, used only to report the
// pre-repair margin; empty when an eigenvalue is nonpositive.
std::optional<double> gamma_at_raw(const Matrix& rho_raw, const StandardFunction& f,
                                   const Matrix& x) {
  SpectralDecomposition eig = hermitian_eig(0.5 * (rho_raw + rho_raw.adjoint()));
  if (eig.eigenvalues(0) <= 0.0) return std::nullopt;
  Matrix xt = eig.eigenvectors.adjoint() * x * eig.eigenvectors;
  Complex acc(0.0, 0.0);
  for (Index i = 0; i < xt.rows(); ++i) {
    for (Index j = 0; j < xt.cols(); ++j) {
      acc += std::conj(xt(i, j)) * xt(i, j) /
             mean(f, eig.eigenvalues(i), eig.eigenvalues(j));
    }
  }
  return acc.real();
}

std::string repair_note(const ChannelOutput& out, std::optional<double> raw_margin) {
  char buf[160];
  if (raw_margin.has_value()) {
    std::snprintf(buf, sizeof(buf),
                  "output repaired (raw lambda_min=%.6g, delta=%.6g); raw margin=%.9g",
                  out.raw_lambda_min, out.mix_delta, *raw_margin);
  } else {
    std::snprintf(buf, sizeof(buf),
                  "output repaired (raw lambda_min=%.6g, delta=%.6g); raw metric singular",
                  out.raw_lambda_min, out.mix_delta);
  }
  return buf;
}

double margin_scale(double lhs, double rhs) {
  return std::max({std::abs(lhs), std::abs(rhs), 1e-30});
}

}  // namespace

InequalityVerdict check_fisher_monotonicity(const StandardFunction& f,
                                            const KrausChannel& ch,
                                            const DensityMatrix& d,
                                            const Observable& a) {
  if (d.dim() != ch.in_dim()) throw DimMismatch("state does not fit the channel input");
  if (a.rows() != ch.in_dim() || a.cols() != ch.in_dim()) {
    throw DimMismatch("direction does not fit the channel input");
  }
  require_hermitian(a, "direction");
  require_traceless(a);

  MetricContext ctx_in(d, f);
  InequalityVerdict verdict;
  verdict.lhs = gamma(ctx_in, a, a).real();

  ChannelOutput out = apply(ch, d);
  Matrix pushed_raw = ch.apply_matrix(a);
  Matrix pushed = mix_forward(pushed_raw, out.mix_delta, ch.out_dim());

  MetricContext ctx_out(out.state, f);
  verdict.rhs = gamma(ctx_out, pushed, pushed).real();
  verdict.margin = verdict.lhs - verdict.rhs;
  double scale = margin_scale(verdict.lhs, verdict.rhs);
  verdict.holds = verdict.margin >= -kInequalityTol * scale;
  verdict.equality_case = std::abs(verdict.margin) <= kInequalityTol * scale;

  if (out.repaired) {
    std::optional<double> raw_rhs =
        gamma_at_raw(ch.apply_matrix(d.matrix()), f, pushed_raw);
    std::optional<double> raw_margin;
    if (raw_rhs.has_value()) raw_margin = verdict.lhs - *raw_rhs;
    verdict.notes = repair_note(out, raw_margin);
  }
  return verdict;
}

InequalityVerdict check_cov_monotonicity(const StandardFunction& f,
                                         const KrausChannel& ch,
                                         const DensityMatrix& d,
                                         const Observable& a_out) {
  if (d.dim() != ch.in_dim()) throw DimMismatch("state does not fit the channel input");
  if (a_out.rows() != ch.out_dim() || a_out.cols() != ch.out_dim()) {
    throw DimMismatch("observable does not fit the channel output");
  }
  require_hermitian(a_out, "observable");

  ChannelOutput out = apply(ch, d);
  Matrix pulled = mix_adjoint(ch.adjoint_apply(a_out), out.mix_delta, ch.out_dim(),
                              ch.in_dim());

  MetricContext ctx_out(out.state, f);
  MetricContext ctx_in(d, f);

  InequalityVerdict verdict;
  verdict.lhs = qcov(ctx_out, a_out, a_out).real();
  verdict.rhs = qcov(ctx_in, pulled, pulled).real();
  verdict.margin = verdict.lhs - verdict.rhs;
  double scale = margin_scale(verdict.lhs, verdict.rhs);
  verdict.holds = verdict.margin >= -kInequalityTol * scale;
  verdict.equality_case = std::abs(verdict.margin) <= kInequalityTol * scale;
  verdict.notes = "lhs = covariance at the channel output, rhs = pulled-back covariance";
  if (out.repaired) {
    verdict.notes += "; " + repair_note(out, std::nullopt);
  }
  return verdict;
}

}  // namespace qig
