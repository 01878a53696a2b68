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

// Fibers (W^-1 u) intersected with P, and the vertices of the image W P.

#ifndef NLCO_FIBERS_HPP_
#define NLCO_FIBERS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nlco/arith.hpp"
#include "nlco/lp.hpp"
#include "nlco/polytope.hpp"
#include "nlco/weights.hpp"

namespace nlco {

// max{c.x : Wx = u, x in P}; infeasible iff the fiber of u is empty.
LPResult fiber_max(const Polytope& p, const IntMatrix& w,
                   std::span<const Rational> u, std::span<const Rational> c,
                   const SolveOptions& options = {});

// Integer point of the fiber of a vertex u of W P: the lex-max vertex of the
// fiber face under `order` (identity order when empty). Throws kInfeasible for
// an empty fiber and kPrecondition when the vertex found is fractional, which
// happens only if u is not a vertex of W P.
IntVector fiber_integer_point(const Polytope& p, const IntMatrix& w,
                              std::span<const Integer> u,
                              std::span<const std::size_t> order = {},
                              const SolveOptions& options = {});

struct FiberFace {
  IntVector u;
  std::vector<std::size_t> tight_rows;
  std::vector<std::size_t> slack_rows;
};

// Row i of P is tight iff min{A_i x : Wx = u, x in P} = b_i. Throws
// kInfeasible for an empty fiber and kPrecondition when u is not a vertex of
// W P (the face cut out by the tight rows is then larger than the fiber).
FiberFace fiber_face_description(const HPolytope& p, const IntMatrix& w,
                                 std::span<const Integer> u);

// True iff u is not in conv(points \ {u}).
bool is_vertex(std::span<const Rational> u,
               std::span<const RationalVector> points);
bool is_vertex(std::span<const Integer> u, std::span<const IntVector> points);

struct ImageVertexOptions {
  std::size_t grid_cap = kDefaultGridCap;
  std::size_t threads = 1;
  bool with_witnesses = true;
  SolveOptions solve;
};

struct ImageVertexSet {
  std::vector<IntVector> image_points;  // grid points with nonempty fiber
  std::vector<IntVector> vertices;      // vert(W P), lexicographically sorted
  std::vector<IntVector> witnesses;     // witnesses[k] maps to vertices[k]
};

// vert(W P): candidate grid, box pruning, fiber feasibility, then vertex
// filtering. Throws kInfeasible for an empty P and kCapExceeded for an
// oversized grid.
ImageVertexSet image_vertices(const Polytope& p,
                              const GeneralizedUnaryWeights& w,
                              const FeasibleMeta& meta,
                              const ImageVertexOptions& options = {});

}  // namespace nlco

#endif  // NLCO_FIBERS_HPP_
