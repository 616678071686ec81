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

#include "qig/metric.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qig/errors.hpp"

namespace qig {

MetricContext::MetricContext(DensityMatrix state, StandardFunction function)
    : state_(std::move(state)), function_(std::move(function)) {
  const RealVector& lambda = state_.spectrum().eigenvalues;
  Index n = lambda.size();
  kernel_.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    kernel_(i, i) = lambda(i);
    // Upper triangle computed once, mirrored for exact symmetry.
    for (Index j = i + 1; j < n; ++j) {
      double m = mean(function_, lambda(i), lambda(j));
      kernel_(i, j) = m;
      kernel_(j, i) = m;
    }
  }
}

namespace {

void require_dim(const MetricContext& ctx, const Matrix& x) {
  if (x.rows() != ctx.dim() || x.cols() != ctx.dim()) {
    throw DimMismatch("matrix dimension does not match the metric context");
  }
}

Matrix to_eigenbasis(const MetricContext& ctx, const Matrix& x) {
  const Matrix& u = ctx.state().spectrum().eigenvectors;
  return u.adjoint() * x * u;
}

Matrix from_eigenbasis(const MetricContext& ctx, const Matrix& x) {
  const Matrix& u = ctx.state().spectrum().eigenvectors;
  return u * x * u.adjoint();
}

}  // namespace

Matrix j_apply(const MetricContext& ctx, const Matrix& x) {
  require_dim(ctx, x);
  Matrix xt = to_eigenbasis(ctx, x);
  xt = xt.cwiseProduct(ctx.kernel().cast<Complex>());
  return from_eigenbasis(ctx, xt);
}

Matrix j_inv_apply(const MetricContext& ctx, const Matrix& x) {
  require_dim(ctx, x);
  Matrix xt = to_eigenbasis(ctx, x);
  xt = xt.cwiseQuotient(ctx.kernel().cast<Complex>());
  return from_eigenbasis(ctx, xt);
}

Complex gamma(const MetricContext& ctx, const Matrix& a, const Matrix& b) {
  require_dim(ctx, a);
  require_dim(ctx, b);
  Matrix at = to_eigenbasis(ctx, a);
  Matrix bt = to_eigenbasis(ctx, b);
  const RealMatrix& kernel = ctx.kernel();
  Complex acc(0.0, 0.0);
  for (Index i = 0; i < at.rows(); ++i) {
    for (Index j = 0; j < at.cols(); ++j) {
      acc += std::conj(at(i, j)) * bt(i, j) / kernel(i, j);
    }
  }
  return acc;
}

Complex qcov(const MetricContext& ctx, const Matrix& a, const Matrix& b) {
  require_dim(ctx, a);
  require_dim(ctx, b);
  Matrix at = to_eigenbasis(ctx, a);
  Matrix bt = to_eigenbasis(ctx, b);
  const RealMatrix& kernel = ctx.kernel();
  const RealVector& lambda = ctx.state().spectrum().eigenvalues;
  Complex acc(0.0, 0.0);
  Complex mean_a(0.0, 0.0);
  Complex mean_b(0.0, 0.0);
  for (Index i = 0; i < at.rows(); ++i) {
    for (Index j = 0; j < at.cols(); ++j) {
      acc += kernel(i, j) * std::conj(at(i, j)) * bt(i, j);
    }
    mean_a += lambda(i) * std::conj(at(i, i));
    mean_b += lambda(i) * bt(i, i);
  }
  return acc - mean_a * mean_b;
}

double cov_symmetrized(const DensityMatrix& d, const Observable& a, const Observable& b) {
  if (a.rows() != d.dim() || a.cols() != d.dim()) {
    throw DimMismatch("observable dimension does not match the state");
  }
  require_same_shape(a, b);
  const Matrix& rho = d.matrix();
  Complex second = 0.5 * (rho * (a.adjoint() * b + b * a.adjoint())).trace();
  Complex mean_a = (rho * a.adjoint()).trace();
  Complex mean_b = (rho * b).trace();
  return (second - mean_a * mean_b).real();
}

double gamma_commutators(const MetricContext& ctx, const Observable& a,
                         const Observable& b) {
  require_dim(ctx, a);
  require_dim(ctx, b);
  Matrix at = to_eigenbasis(ctx, a);
  Matrix bt = to_eigenbasis(ctx, b);
  const RealMatrix& kernel = ctx.kernel();
  const RealVector& lambda = ctx.state().spectrum().eigenvalues;
  // In the eigenbasis [D,X]_ij = (lambda_i - lambda_j) X_ij, so the metric of
  // the commutators reduces to a gap-squared weight; the diagonal never
  // contributes and equal eigenvalues are exact zeros, never 0/0.
  Complex acc(0.0, 0.0);
  for (Index i = 0; i < at.rows(); ++i) {
    for (Index j = 0; j < at.cols(); ++j) {
      double gap = lambda(i) - lambda(j);
      if (gap == 0.0) continue;
      acc += (gap * gap / kernel(i, j)) * std::conj(at(i, j)) * bt(i, j);
    }
  }
  return acc.real();
}

double skew_information(const MetricContext& ctx, const Observable& a,
                        const Observable& b) {
  double f0 = ctx.function().at_zero();
  if (f0 == 0.0) return 0.0;
  return 0.5 * f0 * gamma_commutators(ctx, a, b);
}

TildeIdentitySides tilde_identity_sides(const DensityMatrix& d, const StandardFunction& f,
                                        const Observable& a, const Observable& b) {
  Observable ac = center_observable(a, d);
  Observable bc = center_observable(b, d);

  MetricContext ctx_f(d, f);
  MetricContext ctx_tilde(d, tilde(f));

  TildeIdentitySides sides;
  sides.skew_side = skew_information(ctx_f, ac, bc);
  double cov = cov_symmetrized(d, ac, bc);
  double qc = qcov(ctx_tilde, ac, bc).real();
  sides.cov_side = cov - qc;
  sides.residual = std::abs(sides.skew_side - sides.cov_side);
  sides.scale = std::max({std::abs(cov), std::abs(qc), 1e-30});
  return sides;
}

double tilde_identity_residual(const DensityMatrix& d, const StandardFunction& f,
                               const Observable& a, const Observable& b) {
  return tilde_identity_sides(d, f, a, b).residual;
}

}  // namespace qig
