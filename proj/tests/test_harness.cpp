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


#include <gtest/gtest.h>

#include <set>

#include "nlco/fibers.hpp"
#include "nlco/harness.hpp"
#include "nlco/instance_io.hpp"
#include "nlco/optimizers.hpp"
#include "nlco/random.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace nlco {
namespace {

using testing::IM;
using testing::IV;
using testing::Points;
using testing::RV;

std::set<IntVector> PointSetOf(const ExplicitFeasibleSet& f) {
  return {f.points.begin(), f.points.end()};
}

TEST(EnumerateCommonBases, ThreeBases) {
  const IntMatrix m = IM({{1, 0, 1}, {0, 1, 1}});
  // Minors on {1,2}, {1,3}, {2,3}: 1, 1, -1.
  EXPECT_EQ(oracle::MinorDet(m, {0, 1}), 1);
  EXPECT_EQ(oracle::MinorDet(m, {0, 2}), 1);
  EXPECT_EQ(oracle::MinorDet(m, {1, 2}), -1);
  const auto f = enumerate_common_bases(VectorialMatroidPair::Unchecked(m, m));
  EXPECT_EQ(PointSetOf(f), (std::set<IntVector>{IV({1, 1, 0}), IV({1, 0, 1}), IV({0, 1, 1})}));
  EXPECT_EQ(f.meta.beta, 2);
}

TEST(EnumerateCommonBases, DisjointSupports) {
  const auto f = enumerate_common_bases(VectorialMatroidPair::Unchecked(IM({{1, 0}}), IM({{0, 1}})));
  EXPECT_TRUE(f.points.empty());
}

TEST(EnumerateCommonBases, UniqueBase) {
  const IntMatrix id = IntMatrix::Identity(2);
  const auto f = enumerate_common_bases(VectorialMatroidPair(id, id));
  EXPECT_EQ(f.points, (std::vector<IntVector>{IV({1, 1})}));
}

TEST(EnumerateCommonBases, CapExceeded) {
  Instance inst = gen_instance(InstanceKind::kUniformMatroidPair, {.n = 8, .r = 4}, 1);
  try {
    enumerate_common_bases(inst.pair(), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
}

TEST(EnumerateCommonBasesProperty, SymmetricInThePair) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const char* kinds[] = {"uniform-matroid-pair", "graphic-like", "transversal-like"};
    GenParams params;
    params.n = 6;
    params.r = 1 + seed % 3;
    Instance inst = gen_instance(ParseInstanceKind(kinds[seed % 3]), params, seed);
    const auto& p = inst.pair();
    EXPECT_EQ(PointSetOf(enumerate_common_bases(p)),
              PointSetOf(enumerate_common_bases(VectorialMatroidPair::Unchecked(p.m2(), p.m1()))));
  }
}

TEST(BruteForceOpt, Examples) {
  const auto f = ExplicitFeasibleSet::Make(2, 2, Points({{1, 0}, {0, 1}, {1, 1}}));
  BruteForceResult r =
      brute_force_opt(f, IM({{1, 1}, {1, 0}}), ObjectiveOracle::SquaredTwoNorm(), Sense::kMax);
  EXPECT_EQ(r.x, IV({1, 1}));
  EXPECT_EQ(r.u, IV({2, 1}));

  const auto one = ExplicitFeasibleSet::Make(2, 9, Points({{4, 5}}));
  EXPECT_EQ(brute_force_opt(one, IM({{1, -1}}), ObjectiveOracle::MinCoordinate(), Sense::kMin).x,
            IV({4, 5}));
  EXPECT_THROW(brute_force_opt(ExplicitFeasibleSet::Make(2, 1, {}), IM({{1, 1}}),
                               ObjectiveOracle::MinCoordinate(), Sense::kMax),
               Error);
}

TEST(BruteForceOpt, TieBreaksOnImageThenPoint) {
  // Images (1,0) and (0,1) tie under the inf-norm; the smaller image wins.
  const auto f = ExplicitFeasibleSet::Make(3, 2, Points({{1, 1, 0}, {0, 1, 1}}));
  BruteForceResult r = brute_force_opt(f, IM({{1, 0, 0}, {0, 0, 1}}),
                                       ObjectiveOracle::PNorm(PExponent::Infinity()), Sense::kMax);
  EXPECT_EQ(r.u, IV({0, 1}));
  // Equal images: the lex-largest point wins.
  const auto g = ExplicitFeasibleSet::Make(2, 1, Points({{1, 0}, {0, 1}}));
  EXPECT_EQ(brute_force_opt(g, IM({{1, 1}}), ObjectiveOracle::MaxCoordinate(), Sense::kMax).x,
            IV({1, 0}));
}

TEST(BruteForceOptProperty, LinearAgreesWithLp) {
  Rng rng(9);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Instance inst = gen_instance(InstanceKind::kRandomPoints, {.n = 4, .d = 1, .beta = 4, .count = 15}, seed);
    const auto& f = inst.explicit_set();
    const IntMatrix w = IntMatrix::Identity(4);
    RationalVector c(4);
    for (auto& x : c) x = UniformInt(rng, -3, 3);
    BruteForceResult b = brute_force_opt(f, w, ObjectiveOracle::Linear(c), Sense::kMax);
    LPResult lp = f.polytope().optimize(c, Sense::kMax);
    ASSERT_TRUE(lp.optimal());
    EXPECT_EQ(b.value, ObjectiveValue::Exact(*lp.value));
  }
}

TEST(HullSeparation, Examples) {
  auto simplex = hull_separation(ExplicitFeasibleSet::Make(2, 1, Points({{0, 0}, {1, 0}, {0, 1}})));
  const RationalVector centroid{Rational(1, 3), Rational(1, 3)};
  EXPECT_FALSE(simplex->separate(centroid).has_value());
  EXPECT_FALSE(simplex->separate(RV({1, 0})).has_value());

  auto seg = hull_separation(ExplicitFeasibleSet::Make(2, 1, Points({{1, 0}, {0, 1}})));
  std::optional<Cut> cut = seg->separate(RV({1, 1}));
  ASSERT_TRUE(cut.has_value());
  // Violated at (1,1), valid on both points.
  const auto x = RV({1, 1});
  EXPECT_GT(Dot(std::span<const Rational>(cut->normal), std::span<const Rational>(x)), cut->rhs);
  for (auto p : {RV({1, 0}), RV({0, 1})}) {
    EXPECT_LE(Dot(std::span<const Rational>(cut->normal), std::span<const Rational>(p)), cut->rhs);
  }
  // For this query the certificate is a positive multiple of x1 + x2 <= 1.
  EXPECT_EQ(cut->normal[0], cut->normal[1]);
  EXPECT_GT(cut->normal[0], 0);
  EXPECT_EQ(cut->rhs, cut->normal[0]);
  EXPECT_EQ(seg->bounding_box().lower, RV({0, 0}));
  EXPECT_EQ(seg->bounding_box().upper, RV({1, 1}));
}

TEST(HullSeparationProperty, CutsAreValidAndViolated) {
  Rng rng(10);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Instance inst = gen_instance(InstanceKind::kRandomPoints, {.n = 3, .beta = 3, .count = 8}, seed);
    const auto& f = inst.explicit_set();
    auto oracle = hull_separation(f);
    for (int q = 0; q < 10; ++q) {
      RationalVector x(3);
      for (auto& v : x) v = Rational(UniformInt(rng, -1, 7), 2);
      std::optional<Cut> cut = oracle->separate(x);
      std::vector<IntVector> with_x;
      bool member;
      {
        // Independent membership: x in conv(F) iff F's hull LP has max/min
        // bracketing x in every direction; use the point-list LP along x.
        LPResult r = f.polytope().optimize(LinearEqualities{RationalMatrix::Identity(3), x},
                                           RV({0, 0, 0}), Sense::kMax);
        member = r.optimal();
      }
      EXPECT_EQ(!cut.has_value(), member);
      if (cut) {
        EXPECT_GT(Dot(std::span<const Rational>(cut->normal), std::span<const Rational>(x)), cut->rhs);
        for (const IntVector& p : f.points) {
          EXPECT_LE(Dot(std::span<const Rational>(cut->normal), std::span<const Integer>(p)), cut->rhs);
        }
      }
    }
  }
}

TEST(GenInstance, PermutationMatrices) {
  Instance inst = gen_instance(InstanceKind::kPermutationMatrices, {.n_prime = 3}, 0);
  const auto& f = inst.explicit_set();
  EXPECT_EQ(f.points.size(), 6u);
  EXPECT_EQ(f.meta.n, 9u);
  for (const IntVector& x : f.points) {
    for (std::size_t i = 0; i < 3; ++i) {
      Integer row = 0, col = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        row += x[3 * i + j];
        col += x[3 * j + i];
      }
      EXPECT_EQ(row, 1);
      EXPECT_EQ(col, 1);
    }
  }
}

TEST(GenInstance, UniformPairHasAllPairs) {
  Instance inst = gen_instance(InstanceKind::kUniformMatroidPair, {.n = 4, .r = 2}, 5);
  const auto& p = inst.pair();
  EXPECT_EQ(p.m1(), p.m2());
  std::size_t nonzero = 0;
  for (const auto& s : oracle::Subsets(4, 2)) nonzero += sgn(oracle::MinorDet(p.m1(), s)) != 0;
  EXPECT_EQ(nonzero, 6u);
  EXPECT_EQ(enumerate_common_bases(p).points.size(), 6u);
}

TEST(GenInstance, RandomPoints) {
  Instance inst = gen_instance(InstanceKind::kRandomPoints, {.n = 5, .beta = 3, .count = 20}, 7);
  const auto& f = inst.explicit_set();
  EXPECT_EQ(f.points.size(), 20u);
  EXPECT_EQ(PointSetOf(f).size(), 20u);
  for (const IntVector& x : f.points) {
    Integer sum = 0;
    for (const Integer& v : x) {
      EXPECT_GE(v, 0);
      sum += v;
    }
    EXPECT_LE(sum, 3);
  }
}

TEST(GenInstance, AllKindsAreValidAndDeterministic) {
  for (const char* kind : {"uniform-matroid-pair", "graphic-like", "transversal-like",
                           "permutation-matrices", "random-points"}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      GenParams params;
      Instance a = gen_instance(ParseInstanceKind(kind), params, seed);
      Instance b = gen_instance(ParseInstanceKind(kind), params, seed);
      EXPECT_EQ(serialize_instance(a), serialize_instance(b)) << kind;
      EXPECT_NO_THROW(a.validate());
      EXPECT_FALSE(a.feasible_set().points.empty()) << kind;
      EXPECT_EQ(ToString(ParseInstanceKind(kind)), kind);
    }
  }
  EXPECT_THROW(ParseInstanceKind("nope"), Error);
}

TEST(GenInstance, PermutationConvexMaxMatchesBruteForce) {
  for (std::size_t np = 2; np <= 4; ++np) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      GenParams params;
      params.n_prime = np;
      params.d = 1 + seed % 2;
      params.weight_min = 0;
      params.weight_max = 2;
      Instance inst = gen_instance(InstanceKind::kPermutationMatrices, params, seed);
      const auto& f = inst.explicit_set();
      const ObjectiveOracle obj = ObjectiveOracle::PNorm(PExponent::Finite(2));
      ApproxResult r = quasiconvex_max(f.polytope(), inst.weights, f.meta, obj);
      EXPECT_EQ(r.value, brute_force_opt(f, materialize(inst.weights), obj, Sense::kMax).value);
    }
  }
}

}  // namespace
}  // namespace nlco
