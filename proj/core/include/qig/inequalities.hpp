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

#include <string>
#include <vector>

#include "qig/metric.hpp"

namespace qig {

// Relative tolerance for inequality margins: holds means
// margin >= -kInequalityTol * scale, scale = max(|lhs|, |rhs|, 1e-30).
inline constexpr double kInequalityTol = 1e-9;

// Eigenvalues below kRankCutoff * (largest |eigenvalue|) are treated as exact
// zeros when classifying Gram determinants and deciding linear dependence.
inline constexpr double kRankCutoff = 1e-10;

// Outcome of one inequality check. margin is lhs - rhs with lhs always the
// side asserted to dominate, so `holds` has one reading everywhere.
struct InequalityVerdict {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool holds = false;
  bool equality_case = false;
  std::string notes;
};

// The two m x m real symmetric PSD sides of a determinant bound:
// covariance(i,j) = qcov_g(A_i, A_j) and
// metric(i,j) = c * gamma_f([D,A_i], [D,A_j]).
struct GramPair {
  RealMatrix covariance;
  RealMatrix metric;
  double det_covariance = 1.0;
  double det_metric = 1.0;
};

// min over the grid of g(x) - c (x-1)^2 / f(x): the scalar hypothesis that
// makes the variance bound and determinant bound below theorems. Nonnegative
// e.g. for g = sld with c = f(0)/2 (any f), where it equals tilde(f), and for
// c = f(0) g(0) by the product-chord bound.
double pointwise_condition_margin(const StandardFunction& f, const StandardFunction& g,
                                  double c, const FunctionGrid& grid);

// Gram matrix of generalized covariances; real symmetric PSD projection after
// checking the imaginary residue is round-off only.
RealMatrix gram_qcov(const StandardFunction& g, const DensityMatrix& d,
                     const std::vector<Observable>& a);

// Gram matrix c * gamma_f of commutators with the state; identical for [D,A]
// and i[D,A] inputs (gap-squared kernel).
RealMatrix gram_metric_commutators(const StandardFunction& f, double c,
                                   const DensityMatrix& d,
                                   const std::vector<Observable>& a);

// Both Gram sides plus rank-classified determinants in one pass.
GramPair make_gram_pair(const StandardFunction& g, const StandardFunction& f, double c,
                        const DensityMatrix& d, const std::vector<Observable>& a);

// Real antisymmetric matrix with entries Im Tr(D A_i A_j), i.e.
// -(i/2) Tr(D [A_i, A_j]); zero diagonal by construction.
RealMatrix robertson_matrix(const DensityMatrix& d, const std::vector<Observable>& a);

// Determinant with rank classification: eigenvalues of the symmetrized input
// with |eig| <= kRankCutoff * ||G|| count as zero, so near-singular Grams
// report exactly 0 instead of noise of either sign.
double gram_determinant(const RealMatrix& g);

// True when the centered observables are linearly dependent over the reals,
// decided by the spectrum of their Hilbert-Schmidt Gram matrix.
bool centered_linearly_dependent(const DensityMatrix& d,
                                 const std::vector<Observable>& a);

// Scalar bound qcov_g(A,A) >= c * gamma_f([D,A],[D,A]), valid whenever the
// pointwise hypothesis above holds (checked on the grid and on the state's
// eigenvalue ratios; ConditionViolated if it fails). c may be zero.
InequalityVerdict check_variance_bound(const StandardFunction& f,
                                       const StandardFunction& g, double c,
                                       const DensityMatrix& d, const Observable& a);

// Determinant bound det G >= det H for the GramPair under the same
// hypothesis; equality_case flags linearly dependent centered observables
// (then both determinants vanish).
InequalityVerdict check_det_bound(const StandardFunction& f, const StandardFunction& g,
                                  double c, const DensityMatrix& d,
                                  const std::vector<Observable>& a);

// Determinant bound specialized to g = sld and c = f(0)/2, where the
// hypothesis holds automatically (the condition function is tilde(f)). Also
// asserts the [D,A] vs i[D,A] phase invariance on the first observable.
InequalityVerdict check_dynamical_ucp(const StandardFunction& f, const DensityMatrix& d,
                                      const std::vector<Observable>& a);

// Ordering of metric-Gram determinants: if c/f(x) <= d/g(x) pointwise
// (equivalently c g <= d f; checked, ConditionViolated otherwise), then
// det[c-f Gram] <= det[d-g Gram]. lhs is the dominating (d,g) determinant.
InequalityVerdict check_det_order(const StandardFunction& f, const StandardFunction& g,
                                  double c, double dconst, const DensityMatrix& d,
                                  const std::vector<Observable>& a);

// det[Cov Gram] >= det[robertson_matrix]; the right side vanishes for odd m.
InequalityVerdict check_robertson(const DensityMatrix& d,
                                  const std::vector<Observable>& a);

}  // namespace qig
