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

#pragma once

#include "qig/standard_function.hpp"
#include "qig/state.hpp"

namespace qig {

// One (state, standard function) pair with the precomputed mean kernel
// kernel(i,j) = M_f(lambda_i, lambda_j) over the state's spectrum. Everything
// this module computes works in the state's eigenbasis through that kernel:
// the positive superoperator J acts entrywise as the kernel, the metric form
// gamma entrywise as its reciprocal. n^2 x n^2 left/right multiplication
// operators are never materialized. Immutable after construction.
class MetricContext {
 public:
  MetricContext(DensityMatrix state, StandardFunction function);

  const DensityMatrix& state() const { return state_; }
  const StandardFunction& function() const { return function_; }
  // Symmetric, strictly positive entries; kernel(i,i) = lambda_i exactly.
  const RealMatrix& kernel() const { return kernel_; }
  Index dim() const { return state_.dim(); }

 private:
  DensityMatrix state_;
  StandardFunction function_;
  RealMatrix kernel_;
};

// J X: conjugate into the eigenbasis, multiply entrywise by the kernel,
// conjugate back. Linear and positive as a map on matrices.
Matrix j_apply(const MetricContext& ctx, const Matrix& x);

// Inverse of j_apply (entrywise division by the kernel).
Matrix j_inv_apply(const MetricContext& ctx, const Matrix& x);

// Monotone-metric form: sum_ij conj(At_ij) Bt_ij / kernel(i,j) with At, Bt
// the arguments expressed in the state's eigenbasis. Sesquilinear (conjugate
// in the first argument), real on Hermitian pairs, equal to
// hs_inner(a, j_inv_apply(ctx, b)).
Complex gamma(const MetricContext& ctx, const Matrix& a, const Matrix& b);

// Generalized covariance: sum_ij kernel(i,j) conj(At_ij) Bt_ij minus the
// product of means (sum_i lambda_i conj(At_ii)) (sum_i lambda_i Bt_ii).
// Reduces to the classical covariance when everything commutes.
Complex qcov(const MetricContext& ctx, const Matrix& a, const Matrix& b);

// (1/2) Tr(D (A* B + B A*)) - Tr(D A*) Tr(D B), the symmetrized covariance.
// Coincides with qcov under the arithmetic-mean kernel (f = sld); kept as an
// independent code path for cross-checking.
double cov_symmetrized(const DensityMatrix& d, const Observable& a, const Observable& b);

// Common value of gamma on commutators of the state with a and b: the
// eigenbasis weight is (lambda_i - lambda_j)^2 / kernel(i,j), which depends
// on the eigenvalue gap only through its square, so [D,A] and i[D,A] give
// identical results. Real symmetric bilinear form on Hermitian inputs.
double gamma_commutators(const MetricContext& ctx, const Observable& a,
                         const Observable& b);

// (f(0)/2) * gamma_commutators: zero whenever the state commutes with a, and
// identically zero for kernels with f(0) = 0 (rld, km).
double skew_information(const MetricContext& ctx, const Observable& a,
                        const Observable& b);

// Both sides of the identity
//   skew_information_f(A,B) = Cov(A,B) - qcov_{tilde(f)}(A,B)
// for observables centered against the state (centering is applied here).
struct TildeIdentitySides {
  double skew_side = 0.0;
  double cov_side = 0.0;
  double residual = 0.0;  // |skew_side - cov_side|
  double scale = 1.0;     // max(|Cov|, |qcov|, 1e-30)
};

TildeIdentitySides tilde_identity_sides(const DensityMatrix& d, const StandardFunction& f,
                                        const Observable& a, const Observable& b);

// |skew side - covariance side| of the identity above.
double tilde_identity_residual(const DensityMatrix& d, const StandardFunction& f,
                               const Observable& a, const Observable& b);

}  // namespace qig
