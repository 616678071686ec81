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

#include "qig/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qig/errors.hpp"

namespace qig {

namespace {

double margin_scale(double lhs, double rhs) {
  return std::max({std::abs(lhs), std::abs(rhs), 1e-30});
}

void require_observables(const DensityMatrix& d, const std::vector<Observable>& a) {
  if (a.empty()) throw BadDims("need at least one observable");
  for (const Observable& x : a) {
    if (x.rows() != d.dim() || x.cols() != d.dim()) {
      throw DimMismatch("observable dimension does not match the state");
    }
    require_hermitian(x, "observable");
  }
}

// All ordered eigenvalue ratios of the state; the kernel comparison in the
// determinant bounds only ever sees the hypothesis at these points and at 1.
std::vector<double> eigenvalue_ratios(const DensityMatrix& d) {
  const RealVector& lambda = d.spectrum().eigenvalues;
  std::vector<double> ratios;
  ratios.reserve(static_cast<std::size_t>(lambda.size() * lambda.size()));
  for (Index i = 0; i < lambda.size(); ++i) {
    for (Index j = 0; j < lambda.size(); ++j) {
      ratios.push_back(lambda(i) / lambda(j));
    }
  }
  return ratios;
}

double condition_term(const StandardFunction& f, double c, double x) {
  if (c == 0.0) return 0.0;
  double u = x - 1.0;
  return c * u * u / f.eval(x);
}

// g(x) >= c (x-1)^2 / f(x) at every point, with per-point relative slack.
void require_variance_condition(const StandardFunction& f, const StandardFunction& g,
                                double c, const std::vector<double>& points) {
  for (double x : points) {
    double gx = g.eval(x);
    double term = condition_term(f, c, x);
    if (gx - term < -kInequalityTol * margin_scale(gx, term)) {
      throw ConditionViolated("pointwise hypothesis g >= c (x-1)^2/f fails at x = " +
                              std::to_string(x));
    }
  }
}

// c/f(x) <= d/g(x), i.e. c g(x) <= d f(x), at every point.
void require_order_condition(const StandardFunction& f, const StandardFunction& g,
                             double c, double dconst,
                             const std::vector<double>& points) {
  for (double x : points) {
    double small = c * g.eval(x);
    double big = dconst * f.eval(x);
    if (big - small < -kInequalityTol * margin_scale(big, small)) {
      throw ConditionViolated("pointwise hypothesis c/f <= d/g fails at x = " +
                              std::to_string(x));
    }
  }
}

std::vector<double> condition_points(const DensityMatrix& d) {
  std::vector<double> points = FunctionGrid::standard().points;
  std::vector<double> ratios = eigenvalue_ratios(d);
  points.insert(points.end(), ratios.begin(), ratios.end());
  return points;
}

// Builds a real symmetric matrix from a conjugate-symmetric complex entry
// functional, checking that imaginary residues are round-off only.
template <typename EntryFn>
RealMatrix real_symmetric_gram(Index m, EntryFn&& entry) {
  Matrix gram(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i; j < m; ++j) {
      Complex v = entry(i, j);
      gram(i, j) = v;
      gram(j, i) = std::conj(v);
    }
  }
  double imag_residue = gram.imag().cwiseAbs().maxCoeff();
  double scale = std::max(1.0, max_abs(gram));
  if (imag_residue > scaled_tol(kHermTol, scale)) {
    throw Error("Gram entries have a non-roundoff imaginary part (" +
                std::to_string(imag_residue) + ")");
  }
  RealMatrix real_part = gram.real();
  return 0.5 * (real_part + real_part.transpose());
}

}  // namespace

double pointwise_condition_margin(const StandardFunction& f, const StandardFunction& g,
                                  double c, const FunctionGrid& grid) {
  if (c < 0.0) throw DomainError("condition constant must be nonnegative");
  double margin = std::numeric_limits<double>::infinity();
  for (double x : grid.points) {
    margin = std::min(margin, g.eval(x) - condition_term(f, c, x));
  }
  return margin;
}

RealMatrix gram_qcov(const StandardFunction& g, const DensityMatrix& d,
                     const std::vector<Observable>& a) {
  require_observables(d, a);
  MetricContext ctx(d, g);
  return real_symmetric_gram(static_cast<Index>(a.size()), [&](Index i, Index j) {
    return qcov(ctx, a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
  });
}

RealMatrix gram_metric_commutators(const StandardFunction& f, double c,
                                   const DensityMatrix& d,
                                   const std::vector<Observable>& a) {
  require_observables(d, a);
  if (c < 0.0) throw DomainError("metric Gram constant must be nonnegative");
  Index m = static_cast<Index>(a.size());
  if (c == 0.0) return RealMatrix::Zero(m, m);
  MetricContext ctx(d, f);
  return real_symmetric_gram(m, [&](Index i, Index j) {
    return Complex(c * gamma_commutators(ctx, a[static_cast<std::size_t>(i)],
                                         a[static_cast<std::size_t>(j)]),
                   0.0);
  });
}

GramPair make_gram_pair(const StandardFunction& g, const StandardFunction& f, double c,
                        const DensityMatrix& d, const std::vector<Observable>& a) {
  GramPair pair;
  pair.covariance = gram_qcov(g, d, a);
  pair.metric = gram_metric_commutators(f, c, d, a);
  pair.det_covariance = gram_determinant(pair.covariance);
  pair.det_metric = gram_determinant(pair.metric);
  return pair;
}

RealMatrix robertson_matrix(const DensityMatrix& d, const std::vector<Observable>& a) {
  require_observables(d, a);
  Index m = static_cast<Index>(a.size());
  RealMatrix r = RealMatrix::Zero(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      // -(i/2) Tr(D [A_i, A_j]) collapses to Im Tr(D A_i A_j) for Hermitian
      // inputs; filling antisymmetrically keeps the matrix exact.
      Complex t = (d.matrix() * a[static_cast<std::size_t>(i)] *
                   a[static_cast<std::size_t>(j)])
                      .trace();
      r(i, j) = t.imag();
      r(j, i) = -t.imag();
    }
  }
  return r;
}

double gram_determinant(const RealMatrix& g) {
  if (g.rows() != g.cols()) throw BadDims("Gram determinant of non-square matrix");
  if (g.rows() == 0) return 1.0;
  RealMatrix sym = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("Gram eigendecomposition failed to converge");
  }
  const RealVector& eigs = solver.eigenvalues();
  double top = eigs.cwiseAbs().maxCoeff();
  double cutoff = kRankCutoff * top;
  double det = 1.0;
  for (Index i = 0; i < eigs.size(); ++i) {
    if (std::abs(eigs(i)) <= cutoff) return 0.0;
    det *= eigs(i);
  }
  return det;
}

bool centered_linearly_dependent(const DensityMatrix& d,
                                 const std::vector<Observable>& a) {
  require_observables(d, a);
  Index m = static_cast<Index>(a.size());
  std::vector<Matrix> centered;
  centered.reserve(a.size());
  for (const Observable& x : a) centered.push_back(center_observable(x, d));

  RealMatrix gram(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i; j < m; ++j) {
      double v = hs_inner(centered[static_cast<std::size_t>(i)],
                          centered[static_cast<std::size_t>(j)])
                     .real();
      gram(i, j) = v;
      gram(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(gram);
  double top = solver.eigenvalues().cwiseAbs().maxCoeff();
  if (top <= 0.0) return true;  // every centered observable vanished
  return solver.eigenvalues()(0) < kRankCutoff * top;
}

InequalityVerdict check_variance_bound(const StandardFunction& f,
                                       const StandardFunction& g, double c,
                                       const DensityMatrix& d, const Observable& a) {
  if (c < 0.0) throw DomainError("bound constant must be nonnegative");
  require_observables(d, {a});
  require_variance_condition(f, g, c, condition_points(d));

  MetricContext ctx_g(d, g);
  InequalityVerdict verdict;
  verdict.lhs = qcov(ctx_g, a, a).real();
  if (c > 0.0) {
    MetricContext ctx_f(d, f);
    verdict.rhs = c * gamma_commutators(ctx_f, a, a);
  }
  verdict.margin = verdict.lhs - verdict.rhs;
  verdict.holds = verdict.margin >= -kInequalityTol * margin_scale(verdict.lhs, verdict.rhs);
  verdict.equality_case = centered_linearly_dependent(d, {a});
  return verdict;
}

InequalityVerdict check_det_bound(const StandardFunction& f, const StandardFunction& g,
                                  double c, const DensityMatrix& d,
                                  const std::vector<Observable>& a) {
  if (c < 0.0) throw DomainError("bound constant must be nonnegative");
  require_observables(d, a);
  require_variance_condition(f, g, c, condition_points(d));

  GramPair pair = make_gram_pair(g, f, c, d, a);
  InequalityVerdict verdict;
  verdict.lhs = pair.det_covariance;
  verdict.rhs = pair.det_metric;
  verdict.margin = verdict.lhs - verdict.rhs;
  verdict.holds = verdict.margin >= -kInequalityTol * margin_scale(verdict.lhs, verdict.rhs);
  verdict.equality_case = centered_linearly_dependent(d, a);
  if (verdict.equality_case) {
    verdict.notes = "centered observables linearly dependent; both determinants vanish";
  }
  return verdict;
}

InequalityVerdict check_dynamical_ucp(const StandardFunction& f, const DensityMatrix& d,
                                      const std::vector<Observable>& a) {
  require_observables(d, a);

  // Internal consistency: the metric of [D,A] and of i[D,A] must agree, since
  // the commutator kernel weighs only the squared eigenvalue gap.
  {
    MetricContext ctx(d, f);
    const Observable& first = a.front();
    Matrix plain = commutator(d.matrix(), first);
    Matrix rotated = commutator_i(d.matrix(), first);
    double v1 = gamma(ctx, plain, plain).real();
    double v2 = gamma(ctx, rotated, rotated).real();
    if (std::abs(v1 - v2) > scaled_tol(1e-12, std::max(std::abs(v1), 1.0))) {
      throw Error("phase invariance of the commutator metric failed");
    }
  }

  // The hypothesis with g = sld, c = f(0)/2 holds for every standard f (its
  // margin function is tilde(f) >= 0), so no grid check is needed here.
  return check_det_bound(f, StandardFunction::sld(), 0.5 * f.at_zero(), d, a);
}

InequalityVerdict check_det_order(const StandardFunction& f, const StandardFunction& g,
                                  double c, double dconst, const DensityMatrix& d,
                                  const std::vector<Observable>& a) {
  if (c < 0.0 || dconst < 0.0) throw DomainError("order constants must be nonnegative");
  require_observables(d, a);
  require_order_condition(f, g, c, dconst, condition_points(d));

  double det_cf = gram_determinant(gram_metric_commutators(f, c, d, a));
  double det_dg = gram_determinant(gram_metric_commutators(g, dconst, d, a));

  InequalityVerdict verdict;
  verdict.lhs = det_dg;
  verdict.rhs = det_cf;
  verdict.margin = verdict.lhs - verdict.rhs;
  double scale = margin_scale(verdict.lhs, verdict.rhs);
  verdict.holds = verdict.margin >= -kInequalityTol * scale;
  verdict.equality_case = std::abs(verdict.margin) <= kInequalityTol * scale;
  verdict.notes = "lhs = det of (d,g) metric Gram, rhs = det of (c,f) metric Gram";
  return verdict;
}

InequalityVerdict check_robertson(const DensityMatrix& d,
                                  const std::vector<Observable>& a) {
  require_observables(d, a);
  Index m = static_cast<Index>(a.size());
  RealMatrix cov(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i; j < m; ++j) {
      double v = cov_symmetrized(d, a[static_cast<std::size_t>(i)],
                                 a[static_cast<std::size_t>(j)]);
      cov(i, j) = v;
      cov(j, i) = v;
    }
  }

  InequalityVerdict verdict;
  verdict.lhs = gram_determinant(cov);
  verdict.rhs = determinant(robertson_matrix(d, a));
  verdict.margin = verdict.lhs - verdict.rhs;
  verdict.holds = verdict.margin >= -kInequalityTol * margin_scale(verdict.lhs, verdict.rhs);
  verdict.equality_case = centered_linearly_dependent(d, a);
  return verdict;
}

}  // namespace qig
