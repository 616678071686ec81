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

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace qig {

// A standard function is an operator-monotone f : (0,inf) -> (0,inf) with
// f(1) = 1 and the symmetry f(t) = t f(1/t). Each member of the catalog below
// induces a matrix mean M_f(a,b) = b f(a/b) and through it one monotone metric
// and one generalized covariance.
//
// Catalog (closed forms, limits at 0):
//   sld          f(x) = (1+x)/2                                  f(0) = 1/2
//   wy           f(x) = ((1+sqrt(x))/2)^2                        f(0) = 1/4
//   rld          f(x) = 2x/(1+x)                                 f(0) = 0
//   km           f(x) = (x-1)/log(x)                             f(0) = 0
//   kosaki:b     f(x) = b(1-b)(x-1)^2/((x^b-1)(x^(1-b)-1))       f(0) = b(1-b)
//   tilde(f)     f~(x) = ((x+1) - (x-1)^2 f(0)/f(x)) / 2         f~(0) = 0 or 1/2
//
// kosaki:0.5 coincides with wy; tilde(sld) = rld, tilde(rld) = sld, and
// tilde(f) = sld whenever f(0) = 0. Values are immutable descriptors: a tag,
// an optional parameter, an optional wrapped inner function.
class StandardFunction {
 public:
  enum class Tag { kSld, kWy, kRld, kKm, kKosaki, kTilde };

  static StandardFunction sld() { return StandardFunction(Tag::kSld); }
  static StandardFunction wy() { return StandardFunction(Tag::kWy); }
  static StandardFunction rld() { return StandardFunction(Tag::kRld); }
  static StandardFunction km() { return StandardFunction(Tag::kKm); }
  // beta must lie in (0,1); throws DomainError otherwise.
  static StandardFunction kosaki(double beta);

  Tag tag() const { return tag_; }
  // Parameter of kosaki; meaningless for other tags.
  double beta() const { return beta_; }
  // Wrapped function of tilde; throws Error for other tags.
  const StandardFunction& inner() const;

  // Value at x > 0. Removable singularities at x = 1 (km, kosaki) are handled
  // by a second-order series inside |x-1| < 1e-8; the two branches agree to
  // 1e-12 at the switch radius. Throws DomainError if x <= 0 or not finite.
  double eval(double x) const;

  // Limit at 0+, in closed form per tag. tilde(f) tends to 0 when f(0) > 0
  // and to 1/2 when f(0) = 0; this is exact, so no numeric limit is taken.
  double at_zero() const;

  // Round-trips through parse_function: "sld", "kosaki:0.3", "tilde(wy)", ...
  std::string spec() const;

 private:
  explicit StandardFunction(Tag tag, double beta = 0.0,
                            std::shared_ptr<const StandardFunction> inner = nullptr)
      : tag_(tag), beta_(beta), inner_(std::move(inner)) {}

  friend StandardFunction tilde(const StandardFunction& f);

  Tag tag_;
  double beta_;
  std::shared_ptr<const StandardFunction> inner_;
};

// Symbolic wrap: the transform f~(x) = ((x+1) - (x-1)^2 f(0)/f(x)) / 2, which
// is again a standard function (verified numerically by the grid checker).
StandardFunction tilde(const StandardFunction& f);

// Matrix mean M_f(a,b) = b f(a/b) for a, b > 0. Symmetric by construction
// (evaluated in canonical argument order) and exactly a when a == b.
double mean(const StandardFunction& f, double a, double b);

// Parses a function spec: "sld" | "wy" | "rld" | "km" | "kosaki:<beta>" |
// "tilde(<spec>)". Throws ParseError on anything else.
StandardFunction parse_function(const std::string& spec);

// The six base catalog members used by default campaigns:
// sld, wy, rld, km, kosaki:0.3, kosaki:0.7.
std::vector<StandardFunction> default_catalog();

// Positive abscissas the numeric checkers run over.
struct FunctionGrid {
  std::vector<double> points;

  // 200 log-spaced points covering [1e-6, 1e6], plus 1 itself.
  static FunctionGrid standard();
  static FunctionGrid single(double x);
};

// Any positive scalar map; used to probe non-catalog functions (x^2, ...)
// through the same checkers. Probes are not trusted as standard functions.
using ScalarFn = std::function<double(double)>;

struct GridReport {
  double max_symmetry_defect = 0.0;  // max relative |f(x) - x f(1/x)| / f(x)
  bool monotone = true;              // nondecreasing along the sorted grid
  bool normalized = true;            // |f(1) - 1| <= 1e-12
};

GridReport check_standard_grid(const ScalarFn& f, const FunctionGrid& grid);
GridReport check_standard_grid(const StandardFunction& f, const FunctionGrid& grid);

struct MonotoneReport {
  double min_eigenvalue_of_gap = 0.0;
};

// Spot-check of operator monotonicity: samples random 2x2 pairs A >= B > 0
// and reports the smallest eigenvalue of f(A) - f(B) (spectral calculus) seen
// over all trials. Nonnegative up to round-off for operator monotone f;
// clearly negative for probes like x^2.
MonotoneReport check_matrix_monotone_2x2(const ScalarFn& f, int trials, std::uint64_t seed);
MonotoneReport check_matrix_monotone_2x2(const StandardFunction& f, int trials,
                                         std::uint64_t seed);

// min over the grid of f(x) - f(0)|x-1|; nonnegative for every standard f.
double chord_margin(const StandardFunction& f, const FunctionGrid& grid);

// min over the grid of f(x)g(x) - f(0)g(0)(x-1)^2, the product of the two
// chord bounds; nonnegative for standard f, g.
double product_chord_margin(const StandardFunction& f, const StandardFunction& g,
                            const FunctionGrid& grid);

}  // namespace qig
