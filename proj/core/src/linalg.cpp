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

#include "qig/linalg.hpp"

#include <string>

#include "qig/errors.hpp"

namespace qig {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  double defect = max_abs(m - m.adjoint());
  return defect <= scaled_tol(rel_tol, max_abs(m));
}

void require_hermitian(const Matrix& m, const char* what) {
  if (!is_hermitian(m)) {
    throw NotHermitian(std::string(what) + " is not Hermitian within tolerance");
  }
}

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimMismatch("shape mismatch: " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
}

SpectralDecomposition hermitian_eig(const Matrix& m) {
  require_hermitian(m);
  Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed to converge");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double determinant(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw BadDims("determinant of non-square matrix");
  if (m.rows() == 0) return 1.0;
  return m.determinant();
}

Complex determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw BadDims("determinant of non-square matrix");
  if (m.rows() == 0) return Complex(1.0, 0.0);
  return m.determinant();
}

Matrix commutator(const Matrix& d, const Matrix& a) {
  require_same_shape(d, a);
  return d * a - a * d;
}

Matrix commutator_i(const Matrix& d, const Matrix& a) {
  return Complex(0.0, 1.0) * commutator(d, a);
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  return (a.adjoint() * b).trace();
}

Matrix center_observable(const Matrix& a, const Matrix& rho) {
  require_same_shape(a, rho);
  Complex mean = (rho * a).trace();
  return a - mean * Matrix::Identity(a.rows(), a.cols());
}

}  // namespace qig
