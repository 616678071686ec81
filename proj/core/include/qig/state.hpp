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

#include "qig/linalg.hpp"

namespace qig {

// Eigenvalues below this floor disqualify a state: every metric kernel below
// divides by means of eigenvalue pairs, so strictly positive spectra keep all
// kernels finite and conditioned.
inline constexpr double kFaithfulnessFloor = 1e-8;

// A faithful quantum state: Hermitian, trace one, eigenvalues above the
// faithfulness floor. The spectral decomposition is computed once at
// construction and cached; instances are immutable.
class DensityMatrix {
 public:
  // Validates and decomposes. Throws NotHermitian, TraceNotOne, or
  // NotFaithful; BadDims for empty input.
  explicit DensityMatrix(Matrix m);

  Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  double lambda_min() const { return spectrum_.eigenvalues(0); }

 private:
  Matrix matrix_;
  SpectralDecomposition spectrum_;
};

DensityMatrix maximally_mixed(Index n);

// A - Tr(DA) I, so the result has zero mean in the state D.
Matrix center_observable(const Matrix& a, const DensityMatrix& d);

}  // namespace qig
