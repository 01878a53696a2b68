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

// Exact rational linear programming: a Bland's-rule simplex over
// H-representations, a cutting-plane driver over separation oracles, and the
// exact integer linear algebra the rest of the library builds on.

#ifndef NLCO_LP_HPP_
#define NLCO_LP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nlco/arith.hpp"

namespace nlco {

enum class Sense { kMax, kMin };

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

// {x : A_i x <= b_i for i not in eq_rows, A_i x = b_i for i in eq_rows}.
struct HPolytope {
  RationalMatrix A;
  RationalVector b;
  std::vector<std::size_t> eq_rows;  // sorted, unique

  HPolytope() = default;
  explicit HPolytope(std::size_t dim) : A(0, dim) {}

  std::size_t dim() const { return A.cols(); }
  std::size_t num_rows() const { return A.rows(); }
  bool is_equality(std::size_t row) const;

  HPolytope& add_inequality(std::span<const Rational> a, const Rational& rhs);
  HPolytope& add_equality(std::span<const Rational> a, const Rational& rhs);

  bool contains(std::span<const Rational> x) const;

  // Throws kInvalidArgument when A, b and eq_rows disagree.
  void validate() const;

  // lower <= x <= upper.
  static HPolytope Box(std::span<const Rational> lower,
                       std::span<const Rational> upper);
};

struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  std::optional<RationalVector> point;
  std::optional<Rational> value;
  bool is_vertex = false;

  bool optimal() const { return status == LPStatus::kOptimal; }
};

// A valid inequality normal . y <= rhs.
struct Cut {
  RationalVector normal;
  Rational rhs;
};

struct BoundingBox {
  RationalVector lower;
  RationalVector upper;
};

// Membership/separation access to a polytope. separate() returns nullopt when
// x lies in the polytope, otherwise an inequality valid for the polytope and
// violated by x. Implementations must be deterministic.
class SeparationOracle {
 public:
  virtual ~SeparationOracle() = default;
  virtual std::size_t dim() const = 0;
  virtual std::optional<Cut> separate(std::span<const Rational> x) const = 0;
  virtual const BoundingBox& bounding_box() const = 0;
};

inline constexpr std::size_t kDefaultCutBudget = 10000;

// Exact optimum of c.x over P. An optimal point is moved to a vertex of the
// optimal face whenever P has vertices; is_vertex reports the outcome.
LPResult lp_solve(const HPolytope& polytope, std::span<const Rational> c,
                  Sense sense);

// Exact optimum over the oracle polytope by cutting planes started from the
// bounding box. Throws kCutBudget after max_cuts cuts and kOracleContract for
// cuts that do not separate the query point.
LPResult lp_solve_oracle(const SeparationOracle& oracle,
                         std::span<const Rational> c, Sense sense,
                         std::size_t max_cuts = kDefaultCutBudget);

// Cutting-plane solver that keeps its cut pool across calls, so a sequence of
// related LPs (lexicographic stages, fiber tests) reuses earlier cuts.
class CuttingPlaneSolver {
 public:
  CuttingPlaneSolver(const SeparationOracle& oracle, std::size_t max_cuts);

  // Optimizes over oracle polytope intersected with `side` (same dimension).
  LPResult solve(const HPolytope& side, std::span<const Rational> c,
                 Sense sense);

  std::size_t num_cuts() const { return cuts_.size(); }

 private:
  const SeparationOracle& oracle_;
  std::size_t max_cuts_;
  std::vector<Cut> cuts_;
};

// Lexicographically largest point of P under the coordinate order `order`
// (0-based indices): maximize x[order[0]], fix it, maximize x[order[1]], ...
// Throws kInfeasible for empty P and kPrecondition if a stage is unbounded.
LPResult lex_max(const HPolytope& polytope, std::span<const std::size_t> order);

// Identity order 0, 1, ..., n-1.
std::vector<std::size_t> IdentityOrder(std::size_t n);

std::size_t gaussian_rank(const IntMatrix& m);
std::size_t gaussian_rank(const RationalMatrix& m);

// Fraction-free (Bareiss) determinant.
Integer bigint_det(const IntMatrix& m);

}  // namespace nlco

#endif  // NLCO_LP_HPP_
