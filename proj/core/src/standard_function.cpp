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

#include "qig/standard_function.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "qig/errors.hpp"
#include "qig/linalg.hpp"
#include "qig/random.hpp"

namespace qig {

namespace {

// Switch radius for the removable singularity at x = 1 of km and kosaki.
// Inside, a second-order series; both branches agree to ~1e-12 at the edge.
constexpr double kSeriesRadius = 1e-8;

void require_positive(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("standard function argument must be a positive finite real");
  }
}

double eval_km(double x) {
  double u = x - 1.0;
  if (std::abs(u) < kSeriesRadius) {
    return 1.0 + u / 2.0 - u * u / 12.0;
  }
  return u / std::log1p(u);
}

double eval_kosaki(double beta, double x) {
  double u = x - 1.0;
  if (std::abs(u) < kSeriesRadius) {
    return 1.0 + u / 2.0 - (1.0 - beta * (1.0 - beta)) * u * u / 12.0;
  }
  // b(1-b) u^2 / ((x^b - 1)(x^(1-b) - 1)), via expm1 for accuracy near 1.
  double lx = std::log1p(u);
  double da = std::expm1(beta * lx);
  double db = std::expm1((1.0 - beta) * lx);
  return beta * (1.0 - beta) * u * u / (da * db);
}

}  // namespace

StandardFunction StandardFunction::kosaki(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("kosaki parameter must lie in (0,1)");
  }
  return StandardFunction(Tag::kKosaki, beta);
}

const StandardFunction& StandardFunction::inner() const {
  if (tag_ != Tag::kTilde || !inner_) {
    throw Error("inner() is only defined for tilde-wrapped functions");
  }
  return *inner_;
}

double StandardFunction::eval(double x) const {
  require_positive(x);
  switch (tag_) {
    case Tag::kSld:
      return 0.5 * (1.0 + x);
    case Tag::kWy: {
      double s = 0.5 * (1.0 + std::sqrt(x));
      return s * s;
    }
    case Tag::kRld:
      return 2.0 * x / (1.0 + x);
    case Tag::kKm:
      return eval_km(x);
    case Tag::kKosaki:
      return eval_kosaki(beta_, x);
    case Tag::kTilde: {
      double u = x - 1.0;
      double f0 = inner_->at_zero();
      return 0.5 * ((x + 1.0) - u * u * f0 / inner_->eval(x));
    }
  }
  throw Error("unreachable standard function tag");
}

double StandardFunction::at_zero() const {
  switch (tag_) {
    case Tag::kSld:
      return 0.5;
    case Tag::kWy:
      return 0.25;
    case Tag::kRld:
    case Tag::kKm:
      return 0.0;
    case Tag::kKosaki:
      return beta_ * (1.0 - beta_);
    case Tag::kTilde:
      // Limit of the transform at 0+ depends only on whether the wrapped
      // function vanishes there: ((0+1) - (0-1)^2 f(0)/f(0+)) / 2.
      return inner_->at_zero() > 0.0 ? 0.0 : 0.5;
  }
  throw Error("unreachable standard function tag");
}

std::string StandardFunction::spec() const {
  switch (tag_) {
    case Tag::kSld:
      return "sld";
    case Tag::kWy:
      return "wy";
    case Tag::kRld:
      return "rld";
    case Tag::kKm:
      return "km";
    case Tag::kKosaki: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "kosaki:%.15g", beta_);
      return buf;
    }
    case Tag::kTilde:
      return "tilde(" + inner_->spec() + ")";
  }
  throw Error("unreachable standard function tag");
}

StandardFunction tilde(const StandardFunction& f) {
  return StandardFunction(StandardFunction::Tag::kTilde, 0.0,
                          std::make_shared<const StandardFunction>(f));
}

double mean(const StandardFunction& f, double a, double b) {
  require_positive(a);
  require_positive(b);
  if (a == b) return a;
  // Canonical argument order makes the result exactly symmetric and keeps the
  // ratio in (0, 1].
  if (a > b) std::swap(a, b);
  return b * f.eval(a / b);
}

StandardFunction parse_function(const std::string& spec) {
  std::string s = spec;
  // Trim surrounding whitespace.
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());

  if (s == "sld") return StandardFunction::sld();
  if (s == "wy") return StandardFunction::wy();
  if (s == "rld") return StandardFunction::rld();
  if (s == "km") return StandardFunction::km();
  if (s.rfind("kosaki:", 0) == 0) {
    std::string num = s.substr(7);
    std::size_t pos = 0;
    double beta = 0.0;
    try {
      beta = std::stod(num, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad kosaki parameter in '" + spec + "'");
    }
    if (pos != num.size()) {
      throw ParseError("trailing characters after kosaki parameter in '" + spec + "'");
    }
    if (!(beta > 0.0 && beta < 1.0)) {
      throw ParseError("kosaki parameter must lie in (0,1): '" + spec + "'");
    }
    return StandardFunction::kosaki(beta);
  }
  if (s.rfind("tilde(", 0) == 0 && s.back() == ')') {
    return tilde(parse_function(s.substr(6, s.size() - 7)));
  }
  throw ParseError("unrecognized function spec '" + spec +
                   "' (expected sld|wy|rld|km|kosaki:<beta>|tilde(<spec>))");
}

std::vector<StandardFunction> default_catalog() {
  return {StandardFunction::sld(), StandardFunction::wy(),  StandardFunction::rld(),
          StandardFunction::km(),  StandardFunction::kosaki(0.3),
          StandardFunction::kosaki(0.7)};
}

FunctionGrid FunctionGrid::standard() {
  FunctionGrid grid;
  grid.points.reserve(201);
  const double lo = std::log(1e-6);
  const double hi = std::log(1e6);
  for (int i = 0; i < 200; ++i) {
    grid.points.push_back(std::exp(lo + (hi - lo) * static_cast<double>(i) / 199.0));
  }
  grid.points.push_back(1.0);
  std::sort(grid.points.begin(), grid.points.end());
  return grid;
}

FunctionGrid FunctionGrid::single(double x) {
  FunctionGrid grid;
  grid.points.push_back(x);
  return grid;
}

GridReport check_standard_grid(const ScalarFn& f, const FunctionGrid& grid) {
  GridReport report;
  report.normalized = std::abs(f(1.0) - 1.0) <= 1e-12;

  std::vector<double> xs = grid.points;
  std::sort(xs.begin(), xs.end());

  double max_value = 0.0;
  std::vector<double> values;
  values.reserve(xs.size());
  for (double x : xs) {
    double v = f(x);
    values.push_back(v);
    max_value = std::max(max_value, std::abs(v));
  }

  for (std::size_t i = 0; i < xs.size(); ++i) {
    double mirrored = xs[i] * f(1.0 / xs[i]);
    double defect = std::abs(values[i] - mirrored) /
                    std::max(std::abs(values[i]), kToleranceFloor);
    report.max_symmetry_defect = std::max(report.max_symmetry_defect, defect);
  }

  double slack = scaled_tol(1e-12, std::max(1.0, max_value));
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (values[i] < values[i - 1] - slack) {
      report.monotone = false;
      break;
    }
  }
  return report;
}

GridReport check_standard_grid(const StandardFunction& f, const FunctionGrid& grid) {
  return check_standard_grid([&f](double x) { return f.eval(x); }, grid);
}

namespace {

Matrix gaussian_2x2(RngStream& rng) {
  Matrix g(2, 2);
  for (Index r = 0; r < 2; ++r) {
    for (Index c = 0; c < 2; ++c) {
      g(r, c) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  return g;
}

// f applied through the spectral calculus of a Hermitian positive matrix.
Matrix matrix_function(const ScalarFn& f, const Matrix& m) {
  SpectralDecomposition eig = hermitian_eig(m);
  RealVector mapped(eig.eigenvalues.size());
  for (Index i = 0; i < mapped.size(); ++i) {
    mapped(i) = f(eig.eigenvalues(i));
  }
  return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

MonotoneReport check_matrix_monotone_2x2(const ScalarFn& f, int trials,
                                         std::uint64_t seed) {
  if (trials < 1) throw DomainError("monotonicity spot-check needs at least one trial");
  MonotoneReport report;
  report.min_eigenvalue_of_gap = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(t));
    Matrix g = gaussian_2x2(rng);
    Matrix b = g * g.adjoint() + 0.01 * Matrix::Identity(2, 2);
    Matrix h = gaussian_2x2(rng);
    Matrix a = b + h * h.adjoint();  // a >= b > 0 by construction
    Matrix gap = matrix_function(f, a) - matrix_function(f, b);
    double min_eig = hermitian_eig(gap).eigenvalues(0);
    report.min_eigenvalue_of_gap = std::min(report.min_eigenvalue_of_gap, min_eig);
  }
  return report;
}

MonotoneReport check_matrix_monotone_2x2(const StandardFunction& f, int trials,
                                         std::uint64_t seed) {
  return check_matrix_monotone_2x2([&f](double x) { return f.eval(x); }, trials, seed);
}

double chord_margin(const StandardFunction& f, const FunctionGrid& grid) {
  double f0 = f.at_zero();
  double margin = std::numeric_limits<double>::infinity();
  for (double x : grid.points) {
    margin = std::min(margin, f.eval(x) - f0 * std::abs(x - 1.0));
  }
  return margin;
}

double product_chord_margin(const StandardFunction& f, const StandardFunction& g,
                            const FunctionGrid& grid) {
  double c = f.at_zero() * g.at_zero();
  double margin = std::numeric_limits<double>::infinity();
  for (double x : grid.points) {
    double u = x - 1.0;
    margin = std::min(margin, f.eval(x) * g.eval(x) - c * u * u);
  }
  return margin;
}

}  // namespace qig
