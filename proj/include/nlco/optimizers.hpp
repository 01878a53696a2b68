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

#ifndef NLCO_OPTIMIZERS_HPP_
#define NLCO_OPTIMIZERS_HPP_

#include <cstddef>
#include <span>

#include "nlco/arith.hpp"
#include "nlco/fibers.hpp"
#include "nlco/objective.hpp"
#include "nlco/polytope.hpp"
#include "nlco/weights.hpp"

namespace nlco {

// C_lower ||u||_inf <= f(u) <= C_upper ||u||_inf.
struct NormConstants {
  Radical lower;
  Radical upper;
};

struct ApproxResult {
  IntVector x;
  IntVector u;  // W x
  ObjectiveValue value;
  Radical guarantee;  // 1 for exact results
};

// Exact maximum of a quasiconvex f(Wx): best image vertex by f (ties to the
// lexicographically smallest u), then the lex-max point of its fiber.
ApproxResult quasiconvex_max(const Polytope& p, const GeneralizedUnaryWeights& w,
                             const FeasibleMeta& meta, const ObjectiveOracle& f,
                             const ImageVertexOptions& options = {});

// (1, d^(1/p)); p = infinity gives (1, 1).
NormConstants norm_constants_pnorm(PExponent p, std::size_t d);

// Certified bounds for an arbitrary norm: C_upper = sum_i f(e_i) rounded up,
// C_lower = min of f over a grid on the infinity-norm unit sphere minus the
// worst-case gap (h/2) C_upper, rounded down. Throws kInvalidArgument when
// the grid is too coarse to give a positive lower bound.
NormConstants estimate_norm_constants(const ObjectiveOracle& f, std::size_t d,
                                      std::size_t steps);

// For each row i, a vertex maximizing W_i x (lex-max on the optimal face);
// returns the one whose image is best under f. Guarantee C_upper / C_lower.
ApproxResult norm_max_approx(const Polytope& p, const IntMatrix& w,
                             const ObjectiveOracle& f,
                             const NormConstants& consts,
                             const ImageVertexOptions& options = {});

// Minimum of f over the image vertices. Guarantee d, or d^(1/q) with
// 1/p + 1/q = 1 when f is a p-norm.
ApproxResult raycave_min_approx(const Polytope& p,
                                const GeneralizedUnaryWeights& w,
                                const FeasibleMeta& meta,
                                const ObjectiveOracle& f,
                                const ImageVertexOptions& options = {});

// Guarantee of raycave_min_approx for f in dimension d.
Radical RaycaveGuarantee(const ObjectiveOracle& f, std::size_t d);

// P intersected with {c.x = max over P of c.x}. Keeps the representation of
// P: an extra equality row, the subset of optimal points, or a wrapping
// oracle. Throws kInfeasible for empty P.
Polytope primary_objective_face(const Polytope& p, std::span<const Integer> c,
                                const SolveOptions& options = {});

// Rational bounds q <= v and q >= v, tight to roughly 2^-40 relative.
Rational RationalBelow(const ObjectiveValue& v);
Rational RationalAbove(const ObjectiveValue& v);

}  // namespace nlco

#endif  // NLCO_OPTIMIZERS_HPP_
