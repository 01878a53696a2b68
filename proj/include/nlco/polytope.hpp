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

#ifndef NLCO_POLYTOPE_HPP_
#define NLCO_POLYTOPE_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "nlco/arith.hpp"
#include "nlco/lp.hpp"

namespace nlco {

// Finite V-representation: conv(points).
struct PointSet {
  std::size_t dim = 0;
  std::vector<IntVector> points;
};

// Linear equality side constraints lhs * x = rhs, e.g. W x = u for a fiber.
struct LinearEqualities {
  RationalMatrix lhs;
  RationalVector rhs;

  static LinearEqualities None(std::size_t dim) { return {RationalMatrix(0, dim), {}}; }
  static LinearEqualities Fiber(const IntMatrix& w, std::span<const Rational> u);
};

struct SolveOptions {
  std::size_t max_cuts = kDefaultCutBudget;
};

// A polytope given by exactly one of: an H-representation, a point list, or
// a separation oracle. All LP access goes through optimize() and lex_max(),
// which accept extra equality constraints so that fiber problems
// max{c.x : Wx = u, x in P} work uniformly across representations.
class Polytope {
 public:
  static Polytope FromH(HPolytope h);
  static Polytope FromPoints(std::size_t dim, std::vector<IntVector> points);
  static Polytope FromOracle(std::shared_ptr<const SeparationOracle> oracle);

  std::size_t dim() const;
  bool is_h() const { return std::holds_alternative<HPolytope>(rep_); }
  bool is_points() const { return std::holds_alternative<PointSet>(rep_); }
  bool is_oracle() const;

  const HPolytope& h() const { return std::get<HPolytope>(rep_); }
  const PointSet& points() const { return std::get<PointSet>(rep_); }
  const SeparationOracle& oracle() const;
  std::shared_ptr<const SeparationOracle> oracle_ptr() const;

  // max/min c.x over P intersected with `extra`. For point lists the LP is
  // solved over convex multipliers and mapped back; is_vertex is then only
  // reported by lex_max.
  LPResult optimize(const LinearEqualities& extra, std::span<const Rational> c,
                    Sense sense, const SolveOptions& options = {}) const;
  LPResult optimize(std::span<const Rational> c, Sense sense,
                    const SolveOptions& options = {}) const;

  // Lexicographically largest point of P intersected with `extra`; always a
  // vertex of that intersection. Throws kInfeasible when it is empty.
  LPResult lex_max(const LinearEqualities& extra,
                   std::span<const std::size_t> order,
                   const SolveOptions& options = {}) const;

  bool contains(std::span<const Rational> x,
                const SolveOptions& options = {}) const;

 private:
  using OraclePtr = std::shared_ptr<const SeparationOracle>;
  explicit Polytope(std::variant<HPolytope, PointSet, OraclePtr> rep)
      : rep_(std::move(rep)) {}

  std::variant<HPolytope, PointSet, OraclePtr> rep_;
};

}  // namespace nlco

#endif  // NLCO_POLYTOPE_HPP_
