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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qig/metric.hpp"
#include "qig/random.hpp"
#include "qig/sampling.hpp"

using namespace qig;

namespace {

DensityMatrix qubit_state() {
  Matrix m(2, 2);
  m << 0.7, 0.0, 0.0, 0.3;
  return DensityMatrix(m);
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// textbook spectral formula, written independently of MetricContext
Complex gamma_reference(const DensityMatrix& d, const StandardFunction& f,
                        const Matrix& a, const Matrix& b) {
  const SpectralDecomposition& s = d.spectrum();
  Matrix at = s.eigenvectors.adjoint() * a * s.eigenvectors;
  Matrix bt = s.eigenvectors.adjoint() * b * s.eigenvectors;
  Complex acc(0, 0);
  for (Index i = 0; i < d.dim(); ++i) {
    for (Index j = 0; j < d.dim(); ++j) {
      acc += std::conj(at(i, j)) * bt(i, j) / mean(f, s.eigenvalues(i), s.eigenvalues(j));
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("qubit closed forms") {
  DensityMatrix d = qubit_state();

  MetricContext sld(d, StandardFunction::sld());
  CHECK(gamma(sld, pauli_x(), pauli_x()).real() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(qcov(sld, pauli_x(), pauli_x()).real() == doctest::Approx(1.0).epsilon(1e-12));

  MetricContext wy(d, StandardFunction::wy());
  double gwy = 2.0 / mean(StandardFunction::wy(), 0.7, 0.3);
  CHECK(gamma(wy, pauli_x(), pauli_x()).real() == doctest::Approx(gwy).epsilon(1e-12));

  // skew information of sigma_x against diag(0.7, 0.3): 1 - 2 sqrt(0.21)
  double expected = 1.0 - 2.0 * std::sqrt(0.21);
  CHECK(skew_information(wy, pauli_x(), pauli_x()) ==
        doctest::Approx(expected).epsilon(1e-12));

  CHECK(cov_symmetrized(d, pauli_z(), pauli_z()) == doctest::Approx(0.84).epsilon(1e-14));
}

TEST_CASE("skew information cross-checked against the square root formula") {
  // Tr D A^2 - Tr sqrt(D) A sqrt(D) A, the defining expression
  RngStream rng(4);
  for (int t = 0; t < 10; ++t) {
    DensityMatrix d = random_density(4, rng);
    Observable a = random_observable(4, rng);

    const SpectralDecomposition& s = d.spectrum();
    Matrix sqrt_d = s.eigenvectors *
                    s.eigenvalues.cwiseSqrt().asDiagonal().toDenseMatrix().cast<Complex>() *
                    s.eigenvectors.adjoint();
    double reference = ((d.matrix() * a * a).trace() - (sqrt_d * a * sqrt_d * a).trace()).real();

    MetricContext ctx(d, StandardFunction::wy());
    double skew = skew_information(ctx, a, a);
    CHECK(skew == doctest::Approx(reference).epsilon(1e-10));
  }
}

TEST_CASE("gamma matches the spectral reference on random draws") {
  RngStream rng(12);
  for (const StandardFunction& f : default_catalog()) {
    CAPTURE(f.spec());
    DensityMatrix d = random_density(3, rng);
    Matrix a = random_observable(3, rng);
    Matrix b = random_observable(3, rng);
    Complex got = gamma(MetricContext(d, f), a, b);
    Complex want = gamma_reference(d, f, a, b);
    CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("gamma is a positive sesquilinear form") {
  RngStream rng(21);
  DensityMatrix d = random_density(4, rng);
  MetricContext ctx(d, StandardFunction::kosaki(0.3));
  Matrix a = random_observable(4, rng);
  Matrix b = random_observable(4, rng);

  Complex ab = gamma(ctx, a, b);
  Complex ba = gamma(ctx, b, a);
  CHECK(std::abs(ab - std::conj(ba)) <= 1e-12 * std::max(1.0, std::abs(ab)));

  Complex aa = gamma(ctx, a, a);
  CHECK(aa.real() > 0.0);
  CHECK(std::abs(aa.imag()) <= 1e-12 * aa.real());

  // additivity in the second slot
  Complex sum = gamma(ctx, a, b + a);
  CHECK(std::abs(sum - (ab + aa)) <= 1e-10 * std::max(1.0, std::abs(sum)));
}

TEST_CASE("larger functions give smaller metrics") {
  // pointwise f <= g implies gamma_f >= gamma_g; rld <= wy <= sld
  RngStream rng(33);
  DensityMatrix d = random_density(4, rng);
  Matrix a = random_observable(4, rng);
  double g_sld = gamma(MetricContext(d, StandardFunction::sld()), a, a).real();
  double g_wy = gamma(MetricContext(d, StandardFunction::wy()), a, a).real();
  double g_rld = gamma(MetricContext(d, StandardFunction::rld()), a, a).real();
  CHECK(g_sld <= g_wy + 1e-12);
  CHECK(g_wy <= g_rld + 1e-12);
}

TEST_CASE("j_apply and its inverse cancel; diagonal action is multiplication") {
  RngStream rng(8);
  DensityMatrix d = random_density(4, rng);
  MetricContext ctx(d, StandardFunction::km());
  Matrix a = random_observable(4, rng);

  Matrix round = j_inv_apply(ctx, j_apply(ctx, a));
  CHECK(max_abs(round - a) <= 1e-12 * std::max(1.0, max_abs(a)));

  // a function of the state commutes with it: J acts as multiplication by
  // the eigenvalue because every mean M_f(x, x) = x
  Matrix dm = d.matrix();
  Matrix jd = j_apply(ctx, dm);
  Matrix d_squared = dm * dm;
  CHECK(max_abs(jd - d_squared) <= 1e-12);
}

TEST_CASE("qcov reduces to classical covariance in the commuting case") {
  // diagonal state and diagonal observables: qcov = sum p_i a_i b_i - (sum
  // p_i a_i)(sum p_i b_i) for every standard f
  Matrix m(3, 3);
  m.setZero();
  m(0, 0) = 0.5;
  m(1, 1) = 0.3;
  m(2, 2) = 0.2;
  DensityMatrix d(m);

  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = -2.0;
  a(2, 2) = 0.5;
  Matrix b = Matrix::Zero(3, 3);
  b(0, 0) = 0.4;
  b(1, 1) = 1.1;
  b(2, 2) = -3.0;

  double ea = 0.5 * 1.0 + 0.3 * -2.0 + 0.2 * 0.5;
  double eb = 0.5 * 0.4 + 0.3 * 1.1 + 0.2 * -3.0;
  double eab = 0.5 * 1.0 * 0.4 + 0.3 * -2.0 * 1.1 + 0.2 * 0.5 * -3.0;
  double classical = eab - ea * eb;

  for (const StandardFunction& f : default_catalog()) {
    CAPTURE(f.spec());
    Complex q = qcov(MetricContext(d, f), a, b);
    CHECK(q.real() == doctest::Approx(classical).epsilon(1e-12));
    CHECK(std::abs(q.imag()) <= 1e-14);
    CHECK(cov_symmetrized(d, a, b) == doctest::Approx(classical).epsilon(1e-12));
  }
}

TEST_CASE("commutator gram equals gamma of explicit commutators") {
  RngStream rng(14);
  DensityMatrix d = random_density(4, rng);
  Observable a = random_observable(4, rng);
  Observable b = random_observable(4, rng);
  for (const StandardFunction& f : {StandardFunction::wy(), StandardFunction::rld()}) {
    MetricContext ctx(d, f);
    double fast = gamma_commutators(ctx, a, b);
    Complex slow = gamma(ctx, commutator_i(d.matrix(), a), commutator_i(d.matrix(), b));
    CHECK(fast == doctest::Approx(slow.real()).epsilon(1e-10));
    // same value for [D,A] in place of i[D,A]
    Complex phase = gamma(ctx, commutator(d.matrix(), a), commutator(d.matrix(), b));
    CHECK(fast == doctest::Approx(phase.real()).epsilon(1e-10));
  }
}

TEST_CASE("skew vanishes when nothing fails to commute") {
  DensityMatrix d = qubit_state();
  MetricContext ctx(d, StandardFunction::wy());
  CHECK(skew_information(ctx, pauli_z(), pauli_z()) == 0.0);

  // functions with f(0) = 0 assign zero skew to everything
  MetricContext rld(d, StandardFunction::rld());
  CHECK(skew_information(rld, pauli_x(), pauli_x()) == 0.0);
}

TEST_CASE("decomposition identity holds on random draws") {
  RngStream rng(55);
  for (const StandardFunction& f : default_catalog()) {
    CAPTURE(f.spec());
    for (int t = 0; t < 5; ++t) {
      DensityMatrix d = random_density(3, rng);
      Observable a = random_observable(3, rng);
      Observable b = random_observable(3, rng);
      TildeIdentitySides sides = tilde_identity_sides(d, f, a, b);
      CHECK(sides.residual <= 1e-8 * sides.scale);
    }
  }
}
