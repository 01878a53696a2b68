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

#include "nlco/lp.hpp"

#include <algorithm>
#include <numeric>

#include "simplex.hpp"

namespace nlco {

bool HPolytope::is_equality(std::size_t row) const {
  return std::binary_search(eq_rows.begin(), eq_rows.end(), row);
}

HPolytope& HPolytope::add_inequality(std::span<const Rational> a,
                                     const Rational& rhs) {
  A.append_row(a);
  b.push_back(rhs);
  return *this;
}

HPolytope& HPolytope::add_equality(std::span<const Rational> a,
                                   const Rational& rhs) {
  A.append_row(a);
  b.push_back(rhs);
  eq_rows.push_back(A.rows() - 1);
  return *this;
}

bool HPolytope::contains(std::span<const Rational> x) const {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < num_rows(); ++i) {
    Rational lhs = Dot(A.row(i), x);
    if (is_equality(i) ? lhs != b[i] : lhs > b[i]) return false;
  }
  return true;
}

void HPolytope::validate() const {
  if (b.size() != A.rows()) {
    throw Error(ErrorKind::kInvalidArgument,
                "H-representation: A has " + std::to_string(A.rows()) +
                    " rows but b has " + std::to_string(b.size()));
  }
  if (A.cols() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "H-representation: dimension 0");
  }
  for (std::size_t k = 0; k < eq_rows.size(); ++k) {
    if (eq_rows[k] >= A.rows() || (k > 0 && eq_rows[k] <= eq_rows[k - 1])) {
      throw Error(ErrorKind::kInvalidArgument,
                  "H-representation: eq_rows must be sorted row indices");
    }
  }
}

HPolytope HPolytope::Box(std::span<const Rational> lower,
                         std::span<const Rational> upper) {
  const std::size_t n = lower.size();
  HPolytope box(n);
  RationalVector e(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1;
    box.add_inequality(e, upper[j]);
    e[j] = -1;
    box.add_inequality(e, -lower[j]);
    e[j] = 0;
  }
  return box;
}

std::vector<std::size_t> IdentityOrder(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

namespace {

// Moves an optimal point along null-space directions of its tight rows until
// the tight rows have full column rank. Every such direction is orthogonal to
// c at an optimum, so the objective value is unchanged. Returns false when a
// direction is unblocked both ways (the polyhedron contains a line).
bool MoveToVertex(const HPolytope& p, std::span<const Rational> c,
                  RationalVector& x) {
  const std::size_t n = p.dim();
  while (true) {
    std::vector<RationalVector> tight;
    std::vector<Rational> slack(p.num_rows());
    for (std::size_t i = 0; i < p.num_rows(); ++i) {
      slack[i] = p.b[i] - Dot(p.A.row(i), std::span<const Rational>(x));
      if (p.is_equality(i) || sgn(slack[i]) == 0) {
        tight.push_back(p.A.row_vector(i));
      }
    }
    auto direction = internal::NullSpaceVector(tight, n);
    if (!direction) return true;
    const RationalVector& dir = *direction;
    if (sgn(Dot(c, std::span<const Rational>(dir))) != 0) {
      throw Error(ErrorKind::kInternal, "simplex returned a non-optimal point");
    }
    std::optional<Rational> step_up, step_down;
    for (std::size_t i = 0; i < p.num_rows(); ++i) {
      if (p.is_equality(i) || sgn(slack[i]) == 0) continue;
      Rational rate = Dot(p.A.row(i), std::span<const Rational>(dir));
      if (sgn(rate) > 0) {
        Rational t = slack[i] / rate;
        if (!step_up || t < *step_up) step_up = t;
      } else if (sgn(rate) < 0) {
        Rational t = slack[i] / -rate;
        if (!step_down || t < *step_down) step_down = t;
      }
    }
    if (step_up) {
      for (std::size_t j = 0; j < n; ++j) x[j] += *step_up * dir[j];
    } else if (step_down) {
      for (std::size_t j = 0; j < n; ++j) x[j] -= *step_down * dir[j];
    } else {
      return false;
    }
  }
}

}  // namespace

LPResult lp_solve(const HPolytope& polytope, std::span<const Rational> c,
                  Sense sense) {
  polytope.validate();
  const std::size_t n = polytope.dim();
  if (c.size() != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "objective has " + std::to_string(c.size()) +
                    " entries, polytope dimension is " + std::to_string(n));
  }

  // x = x_plus - x_minus, one slack per inequality row.
  const std::size_t m = polytope.num_rows();
  std::size_t num_slack = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (!polytope.is_equality(i)) ++num_slack;

  internal::StandardFormLP lp;
  lp.num_vars = 2 * n + num_slack;
  lp.objective.assign(lp.num_vars, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    lp.objective[j] = sense == Sense::kMax ? c[j] : Rational(-c[j]);
    lp.objective[n + j] = -lp.objective[j];
  }
  std::size_t slack = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(lp.num_vars, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = polytope.A(i, j);
      row[n + j] = -polytope.A(i, j);
    }
    if (polytope.is_equality(i)) {
      lp.unit_column.emplace_back(std::nullopt);
    } else {
      row[slack] = 1;
      lp.unit_column.emplace_back(slack);
      ++slack;
    }
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(polytope.b[i]);
  }

  internal::StandardFormResult sf = internal::SolveStandardForm(lp);
  LPResult result;
  result.status = sf.status;
  if (sf.status != LPStatus::kOptimal) return result;

  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = sf.y[j] - sf.y[n + j];
  result.is_vertex = MoveToVertex(polytope, c, x);
  result.value = Dot(c, std::span<const Rational>(x));
  result.point = std::move(x);
  return result;
}

CuttingPlaneSolver::CuttingPlaneSolver(const SeparationOracle& oracle,
                                       std::size_t max_cuts)
    : oracle_(oracle), max_cuts_(max_cuts) {
  if (max_cuts == 0) {
    throw Error(ErrorKind::kInvalidArgument, "cut budget must be positive");
  }
}

LPResult CuttingPlaneSolver::solve(const HPolytope& side,
                                   std::span<const Rational> c, Sense sense) {
  const std::size_t n = oracle_.dim();
  const BoundingBox& box = oracle_.bounding_box();
  if (box.lower.size() != n || box.upper.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "oracle bounding box dimension");
  }
  if (side.num_rows() > 0 && side.dim() != n) {
    throw Error(ErrorKind::kInvalidArgument, "side constraints dimension");
  }
  HPolytope relaxation = HPolytope::Box(box.lower, box.upper);
  for (std::size_t i = 0; i < side.num_rows(); ++i) {
    if (side.is_equality(i)) {
      relaxation.add_equality(side.A.row(i), side.b[i]);
    } else {
      relaxation.add_inequality(side.A.row(i), side.b[i]);
    }
  }
  for (const Cut& cut : cuts_) relaxation.add_inequality(cut.normal, cut.rhs);

  std::size_t added = 0;
  while (true) {
    LPResult r = lp_solve(relaxation, c, sense);
    if (r.status == LPStatus::kUnbounded) {
      throw Error(ErrorKind::kInternal, "bounded relaxation reported unbounded");
    }
    if (!r.optimal()) return r;
    std::optional<Cut> cut = oracle_.separate(*r.point);
    if (!cut) return r;
    if (cut->normal.size() != n ||
        Dot(std::span<const Rational>(cut->normal),
            std::span<const Rational>(*r.point)) <= cut->rhs) {
      throw Error(ErrorKind::kOracleContract,
                  "oracle returned an inequality not violated by " +
                      ToString(std::span<const Rational>(*r.point)));
    }
    if (added == max_cuts_) {
      throw Error(ErrorKind::kCutBudget,
                  "cutting-plane budget of " + std::to_string(max_cuts_) +
                      " cuts exhausted");
    }
    relaxation.add_inequality(cut->normal, cut->rhs);
    cuts_.push_back(std::move(*cut));
    ++added;
  }
}

LPResult lp_solve_oracle(const SeparationOracle& oracle,
                         std::span<const Rational> c, Sense sense,
                         std::size_t max_cuts) {
  if (c.size() != oracle.dim()) {
    throw Error(ErrorKind::kInvalidArgument, "objective dimension mismatch");
  }
  CuttingPlaneSolver solver(oracle, max_cuts);
  return solver.solve(HPolytope(oracle.dim()), c, sense);
}

LPResult lex_max(const HPolytope& polytope,
                 std::span<const std::size_t> order) {
  const std::size_t n = polytope.dim();
  if (n == 0) {
    throw Error(ErrorKind::kInvalidArgument, "lex_max in dimension 0");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t k : order) {
    if (k >= n || seen[k]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "lex_max order must be a permutation of coordinates");
    }
    seen[k] = true;
  }
  if (order.size() != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "lex_max order must list every coordinate");
  }
  HPolytope current = polytope;
  LPResult last;
  RationalVector e(n, Rational(0));
  for (std::size_t k : order) {
    e[k] = 1;
    last = lp_solve(current, e, Sense::kMax);
    if (last.status == LPStatus::kInfeasible) {
      throw Error(ErrorKind::kInfeasible, "lex_max over an empty polytope");
    }
    if (last.status == LPStatus::kUnbounded) {
      throw Error(ErrorKind::kPrecondition,
                  "lex_max over an unbounded polytope");
    }
    current.add_equality(e, *last.value);
    e[k] = 0;
  }
  last.is_vertex = true;
  last.value.reset();
  return last;
}

std::size_t gaussian_rank(const RationalMatrix& m) {
  std::vector<RationalVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t gaussian_rank(const IntMatrix& m) {
  return gaussian_rank(ToRational(m));
}

Integer bigint_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kInvalidArgument,
                "determinant of a non-square " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    previous = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Integer(-a(n - 1, n - 1));
}

}  // namespace nlco
