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

#include <optional>
#include <vector>

#include "qig/inequalities.hpp"
#include "qig/random.hpp"

namespace qig {

// Completely positive trace-preserving map M_n -> M_k in Kraus form:
// X |-> sum_s K_s X K_s*, with sum_s K_s* K_s = identity (validated at
// construction). Immutable.
class KrausChannel {
 public:
  // kraus entries must all be out_dim x in_dim; throws BadDims/DimMismatch on
  // shape errors and NotTracePreserving if the completeness sum is off.
  KrausChannel(Index in_dim, Index out_dim, std::vector<Matrix> kraus);

  static KrausChannel identity(Index n);
  // Dephasing in the computational basis: the n diagonal rank-one projectors.
  static KrausChannel pinching(Index n);
  // Trace over the second tensor factor: keep_dim * env_dim -> keep_dim,
  // with basis ordering (first factor, second factor).
  static KrausChannel partial_trace(Index keep_dim, Index env_dim);

  Index in_dim() const { return in_dim_; }
  Index out_dim() const { return out_dim_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  // sum_s K_s X K_s* on any in_dim x in_dim matrix.
  Matrix apply_matrix(const Matrix& x) const;

  // Hilbert-Schmidt adjoint sum_s K_s* A K_s; unital by the completeness sum.
  Matrix adjoint_apply(const Matrix& a) const;

 private:
  Index in_dim_;
  Index out_dim_;
  std::vector<Matrix> kraus_;
};

// A channel output promoted back to a faithful state. Complete positivity
// keeps the raw output PSD, but eigenvalues may fall under the faithfulness
// floor; in that case the output is mixed with the identity,
// (1-delta) rho + (delta/k) I with delta = 10 * floor * k, and flagged.
// The same delta must then be applied to observables to keep any
// monotonicity comparison a statement about one composite CPTP map.
struct ChannelOutput {
  DensityMatrix state;
  bool repaired = false;
  double raw_lambda_min = 0.0;
  double mix_delta = 0.0;
};

ChannelOutput apply(const KrausChannel& ch, const DensityMatrix& d);

// Random channel from a Haar-ish isometry V : n -> k * env_dim (orthonormal
// columns of a Ginibre matrix); the env_dim row slices of V are the Kraus
// operators, so trace preservation holds by construction. Requires
// k * env_dim >= n. env_dim = 1, k = n gives a random unitary conjugation.
KrausChannel random_channel(Index n, Index k, Index env_dim, RngStream& rng);

// Metric contraction gamma_D(A,A) >= gamma_{ch(D)}(ch(A), ch(A)) for a
// traceless Hermitian direction A (NotTraceless otherwise). When the output
// needed the faithfulness repair, both sides use the repaired composite map
// and the notes record the raw margin where it is finite.
InequalityVerdict check_fisher_monotonicity(const StandardFunction& f,
                                            const KrausChannel& ch,
                                            const DensityMatrix& d,
                                            const Observable& a);

// Covariance expansion qcov_D(ch*(A), ch*(A)) <= qcov_{ch(D)}(A, A) for an
// observable A on the output space. lhs is the dominating output-state side.
InequalityVerdict check_cov_monotonicity(const StandardFunction& f,
                                         const KrausChannel& ch,
                                         const DensityMatrix& d,
                                         const Observable& a_out);

}  // namespace qig
