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
#include "qig/standard_function.hpp"

using namespace qig;

// Reference values below were frozen from a 30-digit arbitrary-precision
// evaluation of the defining formulas.

TEST_CASE("catalog point values") {
  CHECK(StandardFunction::sld().eval(3.0) == 2.0);
  CHECK(StandardFunction::rld().eval(3.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(StandardFunction::wy().eval(3.0) ==
        doctest::Approx(std::pow((1.0 + std::sqrt(3.0)) / 2.0, 2)).epsilon(1e-15));
  CHECK(StandardFunction::km().eval(3.0) ==
        doctest::Approx(1.82047845325367478722848033147).epsilon(1e-15));
  CHECK(StandardFunction::kosaki(0.5).eval(4.0) == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(StandardFunction::kosaki(0.3).eval(4.0) ==
        doctest::Approx(2.23597825504478458388381407438).epsilon(1e-15));
}

TEST_CASE("values at zero") {
  CHECK(StandardFunction::sld().at_zero() == 0.5);
  CHECK(StandardFunction::wy().at_zero() == 0.25);
  CHECK(StandardFunction::rld().at_zero() == 0.0);
  CHECK(StandardFunction::km().at_zero() == 0.0);
  CHECK(StandardFunction::kosaki(0.3).at_zero() == doctest::Approx(0.21).epsilon(1e-15));
  // f(0) for the transform: exactly 0 when f(0) > 0, exactly 1/2 otherwise
  CHECK(tilde(StandardFunction::sld()).at_zero() == 0.0);
  CHECK(tilde(StandardFunction::rld()).at_zero() == 0.5);
  CHECK(tilde(StandardFunction::wy()).at_zero() == 0.0);
  CHECK(tilde(StandardFunction::km()).at_zero() == 0.5);
}

// Cross-check the tabulated limits against a two-point Richardson
// extrapolation of the raw formulas near zero. The km case is excluded:
// x/log x approaches 0 so slowly that no fixed evaluation point resolves it.
TEST_CASE("values at zero agree with extrapolated limits") {
  auto richardson = [](const StandardFunction& f) {
    return 2.0 * f.eval(1e-9) - f.eval(2e-9);
  };
  CHECK(std::abs(richardson(StandardFunction::sld()) - 0.5) <= 1e-8);
  CHECK(std::abs(richardson(StandardFunction::rld())) <= 1e-8);
  CHECK(std::abs(richardson(StandardFunction::wy()) - 0.25) <= 1e-4);
}

TEST_CASE("transform closed forms") {
  FunctionGrid grid = FunctionGrid::standard();
  StandardFunction tsld = tilde(StandardFunction::sld());
  StandardFunction trld = tilde(StandardFunction::rld());
  StandardFunction twy = tilde(StandardFunction::wy());
  for (double x : grid.points) {
    CHECK(std::abs(tsld.eval(x) - StandardFunction::rld().eval(x)) <=
          1e-12 * std::max(1.0, std::abs(x)));
    CHECK(std::abs(trld.eval(x) - StandardFunction::sld().eval(x)) <=
          1e-12 * std::max(1.0, std::abs(x)));
    CHECK(std::abs(twy.eval(x) - std::sqrt(x)) <= 1e-12 * std::max(1.0, std::abs(x)));
  }
  CHECK(tsld.eval(3.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(twy.eval(3.0) ==
        doctest::Approx(1.73205080756887729352744634151).epsilon(1e-15));
}

TEST_CASE("kosaki at beta = 1/2 collapses to the wy function") {
  StandardFunction k = StandardFunction::kosaki(0.5);
  StandardFunction w = StandardFunction::wy();
  for (double x : FunctionGrid::standard().points) {
    CHECK(std::abs(k.eval(x) - w.eval(x)) <= 1e-12 * std::max(1.0, w.eval(x)));
  }
}

TEST_CASE("series windows join the direct formulas smoothly") {
  for (const StandardFunction& f :
       {StandardFunction::km(), StandardFunction::kosaki(0.3),
        StandardFunction::kosaki(0.7), StandardFunction::kosaki(0.5)}) {
    CAPTURE(f.spec());
    CHECK(f.eval(1.0) == 1.0);
    // straddle the switch at |x - 1| = 1e-8 from both sides
    double inside = f.eval(1.0 + 0.5e-8);
    double outside = f.eval(1.0 + 2e-8);
    CHECK(std::abs(inside - 1.0) <= 1e-7);
    CHECK(std::abs(outside - inside) <= 1e-7);
    CHECK(std::abs(f.eval(1.0 - 0.5e-8) - 1.0) <= 1e-7);
    // second-order accuracy of the window against the formula just outside it
    double u = 2e-8;
    CHECK(f.eval(1.0 + u) > f.eval(1.0 - u));  // strictly increasing through 1
  }
}

TEST_CASE("mean is symmetric, bounded, and fixes the diagonal") {
  StandardFunction fns[] = {StandardFunction::sld(), StandardFunction::wy(),
                            StandardFunction::rld(), StandardFunction::km(),
                            StandardFunction::kosaki(0.3)};
  double pairs[][2] = {{0.7, 0.3}, {1e-6, 1.0}, {2.0, 2.0}, {5.0, 0.1}};
  for (const StandardFunction& f : fns) {
    for (auto& p : pairs) {
      double ab = mean(f, p[0], p[1]);
      CHECK(ab == mean(f, p[1], p[0]));  // bitwise, by canonical argument order
      CHECK(ab >= std::min(p[0], p[1]));
      CHECK(ab <= std::max(p[0], p[1]));
    }
    CHECK(mean(f, 0.37, 0.37) == 0.37);
  }
  CHECK(mean(StandardFunction::sld(), 0.7, 0.3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mean(StandardFunction::wy(), 0.7, 0.3) ==
        doctest::Approx(0.479128784747792000329402359686).epsilon(1e-14));
  CHECK(mean(StandardFunction::km(), 0.7, 0.3) ==
        doctest::Approx(0.472089000457531467186818127775).epsilon(1e-14));
  CHECK_THROWS_AS(mean(StandardFunction::sld(), -1.0, 0.5), DomainError);
  CHECK_THROWS_AS(mean(StandardFunction::sld(), 0.5, 0.0), DomainError);
}

TEST_CASE("parse_function round trips and rejects junk") {
  const char* specs[] = {"sld", "wy",         "rld",
                         "km",  "kosaki:0.3", "tilde(wy)",
                         "tilde(tilde(kosaki:0.25))"};
  for (const char* s : specs) {
    StandardFunction f = parse_function(s);
    StandardFunction again = parse_function(f.spec());
    CHECK(again.spec() == f.spec());
    CHECK(again.eval(2.5) == f.eval(2.5));
  }
  CHECK(parse_function("  wy ").spec() == "wy");

  CHECK_THROWS_AS(parse_function("bures"), ParseError);
  CHECK_THROWS_AS(parse_function(""), ParseError);
  CHECK_THROWS_AS(parse_function("kosaki:0"), ParseError);
  CHECK_THROWS_AS(parse_function("kosaki:1"), ParseError);
  CHECK_THROWS_AS(parse_function("kosaki:0.3x"), ParseError);
  CHECK_THROWS_AS(parse_function("kosaki:"), ParseError);
  CHECK_THROWS_AS(parse_function("tilde("), ParseError);
  CHECK_THROWS_AS(parse_function("tilde()"), ParseError);
  CHECK_THROWS_AS(parse_function("tilde(wy"), ParseError);
  CHECK_THROWS_AS(StandardFunction::kosaki(1.2), DomainError);
}

TEST_CASE("catalog passes the grid axioms") {
  FunctionGrid grid = FunctionGrid::standard();
  for (const StandardFunction& f : default_catalog()) {
    CAPTURE(f.spec());
    GridReport r = check_standard_grid(f, grid);
    CHECK(r.normalized);
    CHECK(r.monotone);
    CHECK(r.max_symmetry_defect <= 1e-10);
  }
}

TEST_CASE("grid is sorted, positive, and includes the fixed point") {
  FunctionGrid grid = FunctionGrid::standard();
  REQUIRE(grid.points.size() >= 200);
  bool has_one = false;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    CHECK(grid.points[i] > 0.0);
    if (i > 0) CHECK(grid.points[i] >= grid.points[i - 1]);
    if (grid.points[i] == 1.0) has_one = true;
  }
  CHECK(has_one);
}

TEST_CASE("two by two monotonicity spot check accepts the catalog") {
  for (const StandardFunction& f : default_catalog()) {
    CAPTURE(f.spec());
    MonotoneReport r = check_matrix_monotone_2x2(f, 100, 42);
    CHECK(r.min_eigenvalue_of_gap >= -1e-10);
  }
  // x^2 is famously not matrix monotone; the spot check must catch it
  MonotoneReport bad = check_matrix_monotone_2x2([](double x) { return x * x; }, 100, 42);
  CHECK(bad.min_eigenvalue_of_gap < -1e-6);
  CHECK_THROWS_AS(check_matrix_monotone_2x2(StandardFunction::sld(), 0, 1), DomainError);
}

TEST_CASE("chord bounds hold across the catalog") {
  FunctionGrid grid = FunctionGrid::standard();
  std::vector<StandardFunction> cat = default_catalog();
  for (const StandardFunction& f : cat) {
    CAPTURE(f.spec());
    CHECK(chord_margin(f, grid) >= -1e-12);
    for (const StandardFunction& g : cat) {
      CHECK(product_chord_margin(f, g, grid) >= -1e-12);
    }
  }
}

TEST_CASE("chord margin is tight at the ends of the grid") {
  // f(x) >= f(0) |x - 1| degrades to equality as x -> 0 for functions with
  // f(0) > 0; the margin should be tiny but nonnegative there.
  FunctionGrid grid = FunctionGrid::single(1e-6);
  double m = chord_margin(StandardFunction::sld(), grid);
  CHECK(m >= 0.0);
  CHECK(m <= 2e-6);
}
