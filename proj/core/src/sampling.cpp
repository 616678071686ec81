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

#include "qig/sampling.hpp"

#include "qig/errors.hpp"

namespace qig {

Matrix random_ginibre(Index rows, Index cols, RngStream& rng) {
  if (rows < 1 || cols < 1) throw BadDims("ginibre dimensions must be positive");
  Matrix g(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      g(r, c) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  return g;
}

DensityMatrix random_density(Index n, RngStream& rng) {
  if (n < 2) throw BadDims("random states need dimension >= 2");
  Matrix g = random_ginibre(n, n, rng);
  Matrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();

  double lambda_min = hermitian_eig(rho).eigenvalues(0);
  if (lambda_min < kFaithfulnessFloor) {
    double delta = 10.0 * kFaithfulnessFloor * static_cast<double>(n);
    rho = (1.0 - delta) * rho +
          (delta / static_cast<double>(n)) * Matrix::Identity(n, n);
  }
  return DensityMatrix(rho);
}

Observable random_observable(Index n, RngStream& rng) {
  if (n < 2) throw BadDims("random observables need dimension >= 2");
  Matrix g = random_ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

std::vector<Observable> random_observable_tuple(Index n, int m, RngStream& rng,
                                                const DensityMatrix* centered_against) {
  if (m < 1) throw BadDims("observable tuples need m >= 1");
  std::vector<Observable> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Observable a = random_observable(n, rng);
    if (centered_against != nullptr) {
      a = center_observable(a, *centered_against);
    }
    out.push_back(std::move(a));
  }
  return out;
}

Matrix random_unitary(Index n, RngStream& rng) {
  Matrix g = random_ginibre(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Matrix r = q.adjoint() * g;
  // Normalize column phases so the distribution is Haar, not QR-convention.
  for (Index j = 0; j < n; ++j) {
    Complex d = r(j, j);
    double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

}  // namespace qig
