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

#include "qig/state.hpp"

#include <cmath>
#include <string>

#include "qig/errors.hpp"

namespace qig {

DensityMatrix::DensityMatrix(Matrix m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw BadDims("density matrix must be square and non-empty");
  }
  require_hermitian(m, "density matrix");
  // Symmetrize away input round-off before decomposing.
  matrix_ = 0.5 * (m + m.adjoint());

  double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > 1e-12) {
    throw TraceNotOne("density matrix trace is " + std::to_string(trace));
  }

  spectrum_ = hermitian_eig(matrix_);
  if (spectrum_.eigenvalues(0) < kFaithfulnessFloor) {
    throw NotFaithful("density matrix eigenvalue " +
                      std::to_string(spectrum_.eigenvalues(0)) +
                      " is below the faithfulness floor");
  }
}

DensityMatrix maximally_mixed(Index n) {
  if (n < 1) throw BadDims("dimension must be positive");
  return DensityMatrix(Matrix::Identity(n, n) / static_cast<double>(n));
}

Matrix center_observable(const Matrix& a, const DensityMatrix& d) {
  return center_observable(a, d.matrix());
}

}  // namespace qig
