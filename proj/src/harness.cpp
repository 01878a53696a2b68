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

#include "nlco/harness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nlco/random.hpp"

namespace nlco {

ExplicitFeasibleSet ExplicitFeasibleSet::Make(std::size_t n, Integer beta,
                                              std::vector<IntVector> points) {
  if (n == 0) throw Error(ErrorKind::kInvariant, "dimension n must be positive");
  if (sgn(beta) < 0) throw Error(ErrorKind::kInvariant, "beta must be nonnegative");
  std::set<IntVector> seen;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const IntVector& x = points[k];
    const std::string where = "point " + std::to_string(k);
    if (x.size() != n) {
      throw Error(ErrorKind::kInvariant,
                  where + " has " + std::to_string(x.size()) +
                      " coordinates, expected " + std::to_string(n));
    }
    Integer sum = 0;
    for (const Integer& v : x) {
      if (sgn(v) < 0) {
        throw Error(ErrorKind::kInvariant, where + " has a negative coordinate");
      }
      sum += v;
    }
    if (sum > beta) {
      throw Error(ErrorKind::kInvariant,
                  where + " has coordinate sum " + sum.get_str() +
                      " above beta = " + beta.get_str());
    }
    if (!seen.insert(x).second) {
      throw Error(ErrorKind::kInvariant, where + " repeats an earlier point");
    }
  }
  return {std::move(points), FeasibleMeta{std::move(beta), n}};
}

bool ExplicitFeasibleSet::contains(const IntVector& x) const {
  return std::find(points.begin(), points.end(), x) != points.end();
}

ExplicitFeasibleSet enumerate_common_bases(const VectorialMatroidPair& pair,
                                           std::size_t cap) {
  std::vector<IntVector> points;
  for (const auto& base : common_bases(pair, cap)) {
    points.push_back(CharacteristicVector(base, pair.n()));
  }
  return ExplicitFeasibleSet::Make(
      pair.n(), Integer(static_cast<unsigned long>(pair.r())), std::move(points));
}

BruteForceResult brute_force_opt(const ExplicitFeasibleSet& f_set,
                                 const IntMatrix& w, const ObjectiveOracle& f,
                                 Sense sense) {
  if (f_set.points.empty()) {
    throw Error(ErrorKind::kInfeasible, "feasible set is empty");
  }
  if (w.cols() != f_set.meta.n) {
    throw Error(ErrorKind::kInvalidArgument, "W and F dimensions disagree");
  }
  std::optional<BruteForceResult> best;
  for (const IntVector& x : f_set.points) {
    IntVector u = Multiply(w, x);
    ObjectiveValue value = f.evaluate(u);
    if (best) {
      std::strong_ordering c = value <=> best->value;
      if (sense == Sense::kMin) c = 0 <=> c;
      if (c < 0) continue;
      if (c == 0) {
        if (u != best->u) {
          if (!LexLess(u, best->u)) continue;
        } else if (!LexLess(best->x, x)) {
          continue;
        }
      }
    }
    best = BruteForceResult{x, std::move(u), std::move(value)};
  }
  return *best;
}

namespace {

class HullOracle final : public SeparationOracle {
 public:
  explicit HullOracle(const ExplicitFeasibleSet& f_set) : n_(f_set.meta.n) {
    box_.lower.assign(n_, Rational(0));
    box_.upper.assign(n_, Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
      box_.lower[i] = box_.upper[i] = f_set.points[0][i];
      for (const IntVector& p : f_set.points) {
        box_.lower[i] = std::min(box_.lower[i], Rational(p[i]));
        box_.upper[i] = std::max(box_.upper[i], Rational(p[i]));
      }
    }
    // Variables (g, h): g.p - h <= 0 for every p, -1 <= g_i <= 1.
    farkas_ = HPolytope(n_ + 1);
    RationalVector row(n_ + 1);
    for (const IntVector& p : f_set.points) {
      for (std::size_t i = 0; i < n_; ++i) row[i] = p[i];
      row[n_] = -1;
      farkas_.add_inequality(row, 0);
    }
    std::fill(row.begin(), row.end(), Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
      row[i] = 1;
      farkas_.add_inequality(row, 1);
      row[i] = -1;
      farkas_.add_inequality(row, 1);
      row[i] = 0;
    }
  }

  std::size_t dim() const override { return n_; }
  const BoundingBox& bounding_box() const override { return box_; }

  std::optional<Cut> separate(std::span<const Rational> x) const override {
    RationalVector c(x.begin(), x.end());
    c.push_back(-1);
    LPResult r = lp_solve(farkas_, c, Sense::kMax);
    if (!r.optimal()) {
      throw Error(ErrorKind::kInternal, "separation LP not solved to optimality");
    }
    if (sgn(*r.value) <= 0) return std::nullopt;
    Cut cut;
    cut.normal.assign(r.point->begin(), r.point->begin() + n_);
    cut.rhs = (*r.point)[n_];
    return cut;
  }

 private:
  std::size_t n_;
  BoundingBox box_;
  HPolytope farkas_;
};

IntMatrix RandomMatrix(Rng& rng, std::size_t rows, std::size_t cols,
                       std::int64_t lo, std::int64_t hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(UniformInt(rng, lo, hi));
  return m;
}

std::vector<std::int64_t> DistinctValues(Rng& rng, std::size_t count,
                                         std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  while (out.size() < count) {
    const std::int64_t v = UniformInt(rng, lo, hi);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

void RandomWeights(Rng& rng, const GenParams& params, std::size_t n,
                   Instance& inst) {
  if (params.weight_min > params.weight_max) {
    throw Error(ErrorKind::kInvalidArgument, "weight_min exceeds weight_max");
  }
  if (params.layers <= 1) {
    inst.weights = GeneralizedUnaryWeights::Unary(
        RandomMatrix(rng, params.d, n, params.weight_min, params.weight_max));
    inst.dense_weights = true;
    return;
  }
  IntVector a;
  for (std::int64_t v : DistinctValues(rng, params.layers, 1,
                                       10 * static_cast<std::int64_t>(params.layers))) {
    a.emplace_back(static_cast<long>(v));
  }
  std::vector<IntMatrix> deltas;
  for (std::size_t k = 0; k < params.layers; ++k) {
    deltas.push_back(
        RandomMatrix(rng, params.d, n, params.weight_min, params.weight_max));
  }
  inst.weights = GeneralizedUnaryWeights(std::move(a), std::move(deltas));
  inst.dense_weights = false;
}

// Columns (x^0, ..., x^(r-1)) at distinct nodes: every r columns independent.
IntMatrix VandermondeColumns(Rng& rng, std::size_t r, std::size_t n) {
  const auto nodes = DistinctValues(rng, n, 1, 4 * static_cast<std::int64_t>(n));
  IntMatrix m(r, n);
  for (std::size_t j = 0; j < n; ++j) {
    Integer p = 1;
    for (std::size_t k = 0; k < r; ++k) {
      m(k, j) = p;
      p *= static_cast<long>(nodes[j]);
    }
  }
  return m;
}

// Incidence matrix of a random multigraph on r + 1 vertices with n edges,
// last vertex row dropped.
IntMatrix GraphicColumns(Rng& rng, std::size_t r, std::size_t n) {
  IntMatrix m(r, n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto ends = DistinctValues(rng, 2, 0, static_cast<std::int64_t>(r));
    if (static_cast<std::size_t>(ends[0]) < r) m(ends[0], j) = 1;
    if (static_cast<std::size_t>(ends[1]) < r) m(ends[1], j) = -1;
  }
  return m;
}

// Generic representation of a transversal matroid: column j has random
// nonzero entries in the rows (sets) it belongs to.
IntMatrix TransversalColumns(Rng& rng, std::size_t r, std::size_t n) {
  IntMatrix m(r, n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t k = 0; k < r; ++k) {
      if (UniformBelow(rng, 2) == 1) {
        m(k, j) = static_cast<long>(UniformInt(rng, 1, 9));
        any = true;
      }
    }
    if (!any) {
      m(static_cast<std::size_t>(UniformBelow(rng, r)), j) =
          static_cast<long>(UniformInt(rng, 1, 9));
    }
  }
  return m;
}

}  // namespace

std::shared_ptr<const SeparationOracle> hull_separation(
    const ExplicitFeasibleSet& f_set) {
  if (f_set.points.empty()) {
    throw Error(ErrorKind::kInfeasible, "separation oracle for an empty set");
  }
  return std::make_shared<HullOracle>(f_set);
}

std::size_t Instance::n() const {
  return is_explicit() ? explicit_set().meta.n : pair().n();
}

ExplicitFeasibleSet Instance::feasible_set() const {
  return is_explicit() ? explicit_set() : enumerate_common_bases(pair());
}

ObjectiveOracle Instance::objective_oracle() const {
  return ParseObjective(objective, d());
}

void Instance::validate() const {
  if (weights.n() != n()) {
    throw Error(ErrorKind::kInvariant,
                "weights have " + std::to_string(weights.n()) +
                    " columns, feasible set has dimension " +
                    std::to_string(n()));
  }
  if (primary_objective && primary_objective->size() != n()) {
    throw Error(ErrorKind::kInvariant,
                "primary objective must have " + std::to_string(n()) +
                    " entries");
  }
  try {
    objective_oracle();
  } catch (const Error& e) {
    throw Error(ErrorKind::kInvariant, std::string("objective: ") + e.what());
  }
}

InstanceKind ParseInstanceKind(const std::string& name) {
  if (name == "uniform-matroid-pair") return InstanceKind::kUniformMatroidPair;
  if (name == "graphic-like") return InstanceKind::kGraphicLike;
  if (name == "transversal-like") return InstanceKind::kTransversalLike;
  if (name == "permutation-matrices") return InstanceKind::kPermutationMatrices;
  if (name == "random-points") return InstanceKind::kRandomPoints;
  throw Error(ErrorKind::kInvalidArgument, "unknown instance kind '" + name + "'");
}

std::string ToString(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kUniformMatroidPair: return "uniform-matroid-pair";
    case InstanceKind::kGraphicLike: return "graphic-like";
    case InstanceKind::kTransversalLike: return "transversal-like";
    case InstanceKind::kPermutationMatrices: return "permutation-matrices";
    case InstanceKind::kRandomPoints: return "random-points";
  }
  return "unknown";
}

Instance gen_instance(InstanceKind kind, const GenParams& params,
                      std::uint64_t seed) {
  Rng rng(seed);
  Instance inst;
  inst.objective = params.objective;
  inst.sense = params.sense;
  if (params.d == 0) throw Error(ErrorKind::kInvalidArgument, "d must be positive");

  switch (kind) {
    case InstanceKind::kRandomPoints: {
      if (params.n == 0) throw Error(ErrorKind::kInvalidArgument, "n must be positive");
      std::set<IntVector> points;
      const std::size_t attempts = 100 * params.count + 100;
      for (std::size_t t = 0; t < attempts && points.size() < params.count; ++t) {
        IntVector x(params.n, Integer(0));
        const auto total =
            UniformInt(rng, 0, static_cast<std::int64_t>(params.beta));
        for (std::int64_t k = 0; k < total; ++k) x[UniformBelow(rng, params.n)] += 1;
        points.insert(std::move(x));
      }
      if (points.size() < params.count) {
        throw Error(ErrorKind::kInvalidArgument,
                    "could not draw " + std::to_string(params.count) +
                        " distinct points");
      }
      inst.feasible = ExplicitFeasibleSet::Make(
          params.n, Integer(static_cast<unsigned long>(params.beta)),
          {points.begin(), points.end()});
      RandomWeights(rng, params, params.n, inst);
      break;
    }
    case InstanceKind::kPermutationMatrices: {
      const std::size_t m = params.n_prime;
      if (m == 0 || m > 6) {
        throw Error(ErrorKind::kCapExceeded, "permutation side must be in 1..6");
      }
      std::vector<std::size_t> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<IntVector> points;
      do {
        IntVector x(m * m, Integer(0));
        for (std::size_t i = 0; i < m; ++i) x[i * m + perm[i]] = 1;
        points.push_back(std::move(x));
      } while (std::next_permutation(perm.begin(), perm.end()));
      inst.feasible = ExplicitFeasibleSet::Make(
          m * m, Integer(static_cast<unsigned long>(m)), std::move(points));
      RandomWeights(rng, params, m * m, inst);
      break;
    }
    case InstanceKind::kUniformMatroidPair:
    case InstanceKind::kGraphicLike:
    case InstanceKind::kTransversalLike: {
      if (params.r == 0 || params.r > params.n) {
        throw Error(ErrorKind::kInvalidArgument, "need 1 <= r <= n");
      }
      constexpr int kRetries = 100;
      std::optional<VectorialMatroidPair> pair;
      for (int attempt = 0; attempt < kRetries && !pair; ++attempt) {
        IntMatrix m1, m2;
        if (kind == InstanceKind::kUniformMatroidPair) {
          // One generic matrix for both sides: every r-subset is a common base.
          m1 = VandermondeColumns(rng, params.r, params.n);
          m2 = m1;
        } else if (kind == InstanceKind::kGraphicLike) {
          m1 = GraphicColumns(rng, params.r, params.n);
          m2 = GraphicColumns(rng, params.r, params.n);
        } else {
          m1 = TransversalColumns(rng, params.r, params.n);
          m2 = TransversalColumns(rng, params.r, params.n);
        }
        try {
          pair = VectorialMatroidPair(std::move(m1), std::move(m2));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kInvariant) throw;
        }
      }
      if (!pair) {
        throw Error(ErrorKind::kInvariant,
                    "no common base after " + std::to_string(kRetries) +
                        " attempts");
      }
      inst.feasible = std::move(*pair);
      RandomWeights(rng, params, params.n, inst);
      break;
    }
  }
  inst.validate();
  return inst;
}

}  // namespace nlco
