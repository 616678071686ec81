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

#include <Eigen/Dense>
#include <complex>

namespace qig {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Hermitian matrices standing in for physical observables.
using Observable = Matrix;

// Absolute floor under every scaled tolerance, so tolerances never collapse to
// zero for tiny inputs.
inline constexpr double kToleranceFloor = 1e-14;

// Relative hermiticity tolerance (times the largest |entry|).
inline constexpr double kHermTol = 1e-12;

inline double scaled_tol(double base, double scale) {
  double t = base * scale;
  return t > kToleranceFloor ? t : kToleranceFloor;
}

// Largest |entry| of m; 0 for empty matrices.
double max_abs(const Matrix& m);

bool is_hermitian(const Matrix& m, double rel_tol = kHermTol);

// Throws NotHermitian (mentioning `what`) unless is_hermitian(m).
void require_hermitian(const Matrix& m, const char* what = "matrix");

// Throws DimMismatch unless a and b have identical shapes.
void require_same_shape(const Matrix& a, const Matrix& b);

// Eigensystem of a Hermitian matrix. Eigenvalues ascending; eigenvectors are
// the matching unitary columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

// Validates hermiticity, then diagonalizes (M + M^*)/2 so roundoff in the
// input cannot leak imaginary parts into the spectrum.
SpectralDecomposition hermitian_eig(const Matrix& m);

double determinant(const RealMatrix& m);
Complex determinant(const Matrix& m);

// DA - AD.
Matrix commutator(const Matrix& d, const Matrix& a);

// i(DA - AD); Hermitian whenever D and A are.
Matrix commutator_i(const Matrix& d, const Matrix& a);

// Hilbert-Schmidt inner product Tr(A^* B), antilinear in A.
Complex hs_inner(const Matrix& a, const Matrix& b);

// A - Tr(rho A) * I, with rho a trace-one matrix. The overload taking a
// DensityMatrix lives in state.hpp.
Matrix center_observable(const Matrix& a, const Matrix& rho);

}  // namespace qig
