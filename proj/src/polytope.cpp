// Copyright 2026 The nlco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlco/polytope.hpp"

#include <algorithm>

#include "simplex.hpp"

namespace nlco {

LinearEqualities LinearEqualities::Fiber(const IntMatrix& w,
                                         std::span<const Rational> u) {
  if (w.rows() != u.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "fiber: W has " + std::to_string(w.rows()) +
                    " rows but u has " + std::to_string(u.size()) +
                    " entries");
  }
  return {ToRational(w), RationalVector(u.begin(), u.end())};
}

Polytope Polytope::FromH(HPolytope h) {
  h.validate();
  return Polytope(std::move(h));
}

Polytope Polytope::FromPoints(std::size_t dim, std::vector<IntVector> points) {
  if (dim == 0) throw Error(ErrorKind::kInvalidArgument, "point set dimension 0");
  for (const IntVector& p : points) {
    if (p.size() != dim) {
      throw Error(ErrorKind::kInvalidArgument, "point dimension mismatch");
    }
  }
  return Polytope(PointSet{dim, std::move(points)});
}

Polytope Polytope::FromOracle(std::shared_ptr<const SeparationOracle> oracle) {
  if (!oracle) throw Error(ErrorKind::kInvalidArgument, "null oracle");
  return Polytope(std::move(oracle));
}

bool Polytope::is_oracle() const {
  return std::holds_alternative<OraclePtr>(rep_);
}

const SeparationOracle& Polytope::oracle() const {
  return *std::get<OraclePtr>(rep_);
}

std::shared_ptr<const SeparationOracle> Polytope::oracle_ptr() const {
  return std::get<OraclePtr>(rep_);
}

std::size_t Polytope::dim() const {
  if (is_h()) return h().dim();
  if (is_points()) return points().dim;
  return oracle().dim();
}

namespace {

void CheckExtra(const LinearEqualities& extra, std::size_t dim) {
  if (extra.lhs.rows() != extra.rhs.size() ||
      (extra.lhs.rows() > 0 && extra.lhs.cols() != dim)) {
    throw Error(ErrorKind::kInvalidArgument, "side constraint dimensions");
  }
}

HPolytope WithEqualities(HPolytope h, const LinearEqualities& extra) {
  for (std::size_t i = 0; i < extra.lhs.rows(); ++i) {
    h.add_equality(extra.lhs.row(i), extra.rhs[i]);
  }
  return h;
}

// max/min c.(sum_k lambda_k p_k) over lambda >= 0, sum lambda = 1,
// extra.lhs (sum lambda_k p_k) = extra.rhs.
LPResult OptimizeOverPoints(const PointSet& set, const LinearEqualities& extra,
                            std::span<const Rational> c, Sense sense) {
  LPResult result;
  const std::size_t k = set.points.size();
  if (k == 0) return result;

  internal::StandardFormLP lp;
  lp.num_vars = k;
  lp.rows.emplace_back(k, Rational(1));
  lp.rhs.emplace_back(1);
  for (std::size_t r = 0; r < extra.lhs.rows(); ++r) {
    RationalVector row(k);
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = Dot(extra.lhs.row(r), std::span<const Integer>(set.points[j]));
    }
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(extra.rhs[r]);
  }
  lp.objective.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    Rational v = Dot(c, std::span<const Integer>(set.points[j]));
    lp.objective[j] = sense == Sense::kMax ? v : Rational(-v);
  }
  internal::StandardFormResult sf = internal::SolveStandardForm(lp);
  result.status = sf.status;
  if (sf.status != LPStatus::kOptimal) return result;

  RationalVector x(set.dim, Rational(0));
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(sf.y[j]) == 0) continue;
    for (std::size_t i = 0; i < set.dim; ++i) x[i] += sf.y[j] * set.points[j][i];
  }
  result.value = Dot(c, std::span<const Rational>(x));
  result.point = std::move(x);
  return result;
}

HPolytope SideConstraints(const LinearEqualities& extra, std::size_t dim) {
  return WithEqualities(HPolytope(dim), extra);
}

void CheckOrder(std::span<const std::size_t> order, std::size_t dim) {
  std::vector<bool> seen(dim, false);
  for (std::size_t k : order) {
    if (k >= dim || seen[k]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "lex order must be a permutation of coordinates");
    }
    seen[k] = true;
  }
  if (order.size() != dim) {
    throw Error(ErrorKind::kInvalidArgument,
                "lex order must list every coordinate");
  }
}

}  // namespace

LPResult Polytope::optimize(const LinearEqualities& extra,
                            std::span<const Rational> c, Sense sense,
                            const SolveOptions& options) const {
  CheckExtra(extra, dim());
  if (c.size() != dim()) {
    throw Error(ErrorKind::kInvalidArgument, "objective dimension mismatch");
  }
  if (is_h()) return lp_solve(WithEqualities(h(), extra), c, sense);
  if (is_points()) return OptimizeOverPoints(points(), extra, c, sense);
  CuttingPlaneSolver solver(oracle(), options.max_cuts);
  return solver.solve(SideConstraints(extra, dim()), c, sense);
}

LPResult Polytope::optimize(std::span<const Rational> c, Sense sense,
                            const SolveOptions& options) const {
  return optimize(LinearEqualities::None(dim()), c, sense, options);
}

LPResult Polytope::lex_max(const LinearEqualities& extra,
                           std::span<const std::size_t> order,
                           const SolveOptions& options) const {
  const std::size_t n = dim();
  CheckExtra(extra, n);
  CheckOrder(order, n);
  if (is_h()) return nlco::lex_max(WithEqualities(h(), extra), order);

  if (is_points() && extra.lhs.rows() == 0) {
    // The lexicographic maximum of conv(points) is one of the points.
    const auto& pts = points().points;
    if (pts.empty()) {
      throw Error(ErrorKind::kInfeasible, "lex_max over an empty point set");
    }
    auto lex_less = [&](const IntVector& a, const IntVector& b) {
      for (std::size_t k : order) {
        if (a[k] != b[k]) return a[k] < b[k];
      }
      return false;
    };
    const IntVector& best = *std::max_element(pts.begin(), pts.end(), lex_less);
    LPResult r;
    r.status = LPStatus::kOptimal;
    r.point = ToRational(best);
    r.is_vertex = true;
    return r;
  }

  std::optional<CuttingPlaneSolver> solver;
  if (is_oracle()) solver.emplace(oracle(), options.max_cuts);
  LinearEqualities stages = extra;
  if (stages.lhs.rows() == 0) stages.lhs = RationalMatrix(0, n);
  LPResult last;
  RationalVector e(n, Rational(0));
  for (std::size_t k : order) {
    e[k] = 1;
    last = solver ? solver->solve(SideConstraints(stages, n), e, Sense::kMax)
                  : OptimizeOverPoints(points(), stages, e, Sense::kMax);
    if (last.status == LPStatus::kInfeasible) {
      throw Error(ErrorKind::kInfeasible, "lex_max over an empty polytope");
    }
    if (last.status == LPStatus::kUnbounded) {
      throw Error(ErrorKind::kInternal, "bounded polytope reported unbounded");
    }
    stages.lhs.append_row(e);
    stages.rhs.push_back(*last.value);
    e[k] = 0;
  }
  last.is_vertex = true;
  last.value.reset();
  return last;
}

bool Polytope::contains(std::span<const Rational> x,
                        const SolveOptions& options) const {
  if (x.size() != dim()) return false;
  if (is_h()) return h().contains(x);
  if (is_oracle()) return !oracle().separate(x).has_value();
  LinearEqualities at_x{RationalMatrix::Identity(dim()),
                        RationalVector(x.begin(), x.end())};
  RationalVector zero(dim(), Rational(0));
  return optimize(at_x, zero, Sense::kMax, options).optimal();
}

}  // namespace nlco
