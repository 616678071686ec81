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

#include "qig/errors.hpp"
#include "qig/random.hpp"
#include "qig/sampling.hpp"
#include "qig/state.hpp"

using namespace qig;

TEST_CASE("density matrix constructor validates") {
  Matrix good(2, 2);
  good << 0.7, 0.1, 0.1, 0.3;
  DensityMatrix d(good);
  CHECK(d.dim() == 2);
  CHECK(std::abs(d.matrix().trace().real() - 1.0) <= 1e-14);

  SUBCASE("trace must be one") {
    Matrix m = 0.9 * good;
    CHECK_THROWS_AS(DensityMatrix{m}, TraceNotOne);
  }
  SUBCASE("hermiticity is required") {
    Matrix m = good;
    m(0, 1) = Complex(0.3, 0.0);  // breaks symmetry with m(1,0) = 0.1
    CHECK_THROWS_AS(DensityMatrix{m}, NotHermitian);
  }
  SUBCASE("faithfulness floor") {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, 0.0;
    CHECK_THROWS_AS(DensityMatrix{m}, NotFaithful);
    Matrix nearly(2, 2);
    nearly << 1.0 - 1e-12, 0.0, 0.0, 1e-12;
    CHECK_THROWS_AS(DensityMatrix{nearly}, NotFaithful);
  }
  SUBCASE("shape") {
    CHECK_THROWS_AS(DensityMatrix{Matrix(0, 0)}, BadDims);
    CHECK_THROWS_AS(DensityMatrix{Matrix::Zero(2, 3)}, BadDims);
  }
  SUBCASE("negative eigenvalues are not faithful") {
    Matrix m(2, 2);
    m << 1.5, 0.0, 0.0, -0.5;
    CHECK_THROWS_AS(DensityMatrix{m}, NotFaithful);
  }
}

TEST_CASE("spectrum is ascending and sums to one") {
  RngStream rng(9);
  DensityMatrix d = random_density(5, rng);
  const RealVector& lam = d.spectrum().eigenvalues;
  double sum = 0.0;
  for (Index i = 0; i < 5; ++i) {
    CHECK(lam(i) >= kFaithfulnessFloor);
    if (i > 0) CHECK(lam(i) >= lam(i - 1));
    sum += lam(i);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.lambda_min() == lam(0));
}

TEST_CASE("maximally mixed state") {
  DensityMatrix d = maximally_mixed(4);
  CHECK(max_abs(d.matrix() - 0.25 * Matrix::Identity(4, 4)) <= 1e-15);
}

TEST_CASE("random draws are seed deterministic") {
  RngStream a = RngStream::substream(123, 7);
  RngStream b = RngStream::substream(123, 7);
  DensityMatrix da = random_density(4, a);
  DensityMatrix db = random_density(4, b);
  CHECK(max_abs(da.matrix() - db.matrix()) == 0.0);

  RngStream c = RngStream::substream(123, 8);
  DensityMatrix dc = random_density(4, c);
  CHECK(max_abs(da.matrix() - dc.matrix()) > 1e-3);  // different trial, different state
}

TEST_CASE("random observables are hermitian, tuples can be centered") {
  RngStream rng(31);
  Observable a = random_observable(4, rng);
  CHECK(is_hermitian(a));

  DensityMatrix d = random_density(4, rng);
  std::vector<Observable> tup = random_observable_tuple(4, 3, rng, &d);
  REQUIRE(tup.size() == 3);
  for (const Observable& x : tup) {
    CHECK(is_hermitian(x));
    CHECK(std::abs((d.matrix() * x).trace()) <= 1e-12);
  }
}

TEST_CASE("random unitary is unitary and phase fixed") {
  RngStream rng(17);
  Matrix u = random_unitary(5, rng);
  CHECK(max_abs(u.adjoint() * u - Matrix::Identity(5, 5)) <= 1e-12);

  RngStream rng2(17);
  Matrix v = random_unitary(5, rng2);
  CHECK(max_abs(u - v) == 0.0);
}

TEST_CASE("rng stream basics") {
  RngStream rng(0);
  for (int i = 0; i < 1000; ++i) {
    double x = rng.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }

  // crude moment check on the gaussian source
  RngStream g(2024);
  double sum = 0.0, sumsq = 0.0;
  const int kDraws = 20000;
  for (int i = 0; i < kDraws; ++i) {
    double x = g.gaussian();
    sum += x;
    sumsq += x * x;
  }
  double mean = sum / kDraws;
  double var = sumsq / kDraws - mean * mean;
  CHECK(std::abs(mean) < 0.03);
  CHECK(std::abs(var - 1.0) < 0.05);

  // substreams decorrelate trivially related seeds
  CHECK(RngStream::substream(1, 0).next_u64() != RngStream::substream(0, 1).next_u64());
  CHECK(RngStream::substream(5, 3).next_u64() == RngStream::substream(5, 3).next_u64());
}

TEST_CASE("repeated draws stay faithful") {
  RngStream rng(77);
  for (int t = 0; t < 20; ++t) {
    DensityMatrix d = random_density(3, rng);
    CHECK(d.lambda_min() >= kFaithfulnessFloor);
  }
}
