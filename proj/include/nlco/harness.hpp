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

// Brute-force ground truth, explicit feasible sets, and instance generators.

#ifndef NLCO_HARNESS_HPP_
#define NLCO_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nlco/arith.hpp"
#include "nlco/lp.hpp"
#include "nlco/matroid.hpp"
#include "nlco/objective.hpp"
#include "nlco/polytope.hpp"
#include "nlco/weights.hpp"

namespace nlco {

struct ExplicitFeasibleSet {
  std::vector<IntVector> points;
  FeasibleMeta meta;

  // Throws kInvariant for wrong dimensions, negative entries, coordinate sums
  // above beta, or repeated points.
  static ExplicitFeasibleSet Make(std::size_t n, Integer beta,
                                  std::vector<IntVector> points);

  Polytope polytope() const { return Polytope::FromPoints(meta.n, points); }
  bool contains(const IntVector& x) const;
  bool operator==(const ExplicitFeasibleSet&) const = default;
};

// Characteristic vectors of all common bases, beta = r.
ExplicitFeasibleSet enumerate_common_bases(const VectorialMatroidPair& pair,
                                           std::size_t cap = kDefaultBaseCap);

struct BruteForceResult {
  IntVector x;
  IntVector u;
  ObjectiveValue value;
};

// Exhaustive scan: best f, then lexicographically smallest u, then largest x.
BruteForceResult brute_force_opt(const ExplicitFeasibleSet& f_set,
                                 const IntMatrix& w, const ObjectiveOracle& f,
                                 Sense sense);

// Separation oracle for conv(F). A query x outside gets the cut g.y <= h from
// max{g.x - h : g.p <= h for p in F, -1 <= g <= 1}.
std::shared_ptr<const SeparationOracle> hull_separation(
    const ExplicitFeasibleSet& f_set);

struct Instance {
  std::variant<ExplicitFeasibleSet, VectorialMatroidPair> feasible;
  GeneralizedUnaryWeights weights;
  bool dense_weights = true;  // serialize as a plain matrix
  std::string objective = "pnorm:2";
  Sense sense = Sense::kMax;
  std::optional<IntVector> primary_objective;

  bool is_explicit() const {
    return std::holds_alternative<ExplicitFeasibleSet>(feasible);
  }
  bool is_matroid_pair() const { return !is_explicit(); }
  const ExplicitFeasibleSet& explicit_set() const {
    return std::get<ExplicitFeasibleSet>(feasible);
  }
  const VectorialMatroidPair& pair() const {
    return std::get<VectorialMatroidPair>(feasible);
  }
  std::size_t n() const;
  std::size_t d() const { return weights.d(); }

  // F itself, or the common bases of the pair.
  ExplicitFeasibleSet feasible_set() const;
  ObjectiveOracle objective_oracle() const;

  // Throws kInvariant for inconsistent dimensions or an unparsable objective.
  void validate() const;

  bool operator==(const Instance&) const = default;
};

enum class InstanceKind {
  kUniformMatroidPair,
  kGraphicLike,
  kTransversalLike,
  kPermutationMatrices,
  kRandomPoints,
};

InstanceKind ParseInstanceKind(const std::string& name);
std::string ToString(InstanceKind kind);

struct GenParams {
  std::size_t n = 6;
  std::size_t r = 2;
  std::size_t d = 2;
  std::size_t beta = 3;
  std::size_t count = 10;
  std::size_t n_prime = 3;  // permutation side length
  std::int64_t weight_min = 0;
  std::int64_t weight_max = 3;
  std::size_t layers = 1;
  std::string objective = "pnorm:2";
  Sense sense = Sense::kMax;
};

// Deterministic in (kind, params, seed). Matroid kinds retry a bounded number
// of times until a common base exists, then throw kInvariant.
Instance gen_instance(InstanceKind kind, const GenParams& params,
                      std::uint64_t seed);

}  // namespace nlco

#endif  // NLCO_HARNESS_HPP_
