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
#include "nlco/random.hpp"
#include "nlco/weights.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace nlco {
namespace {

using testing::IM;
using testing::IV;
using testing::Points;
using testing::RV;
using testing::UnitCube;

HPolytope Triangle() {
  HPolytope h(2);
  h.add_inequality(RV({-1, 0}), 0);
  h.add_inequality(RV({0, -1}), 0);
  h.add_inequality(RV({1, 1}), 1);
  return h;
}

// The same triangle in all three representations.
std::vector<Polytope> TriangleReps() {
  const auto f = ExplicitFeasibleSet::Make(2, 1, Points({{0, 0}, {1, 0}, {0, 1}}));
  return {Polytope::FromH(Triangle()), f.polytope(),
          Polytope::FromOracle(hull_separation(f))};
}

std::vector<oracle::P3> ToP3(const std::vector<IntVector>& pts) {
  std::vector<oracle::P3> out;
  for (const auto& p : pts) {
    oracle::P3 q;
    for (const Integer& x : p) q.push_back(x.get_si());
    out.push_back(q);
  }
  return out;
}

TEST(FiberMax, SingletonFiber) {
  for (const Polytope& p : TriangleReps()) {
    LPResult r = fiber_max(p, IM({{1, 2}}), RV({2}), RV({1, 0}));
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(*r.point, RV({0, 1}));
    EXPECT_EQ(*r.value, 0);
  }
}

TEST(FiberMax, EmptyFiber) {
  for (const Polytope& p : TriangleReps()) {
    EXPECT_EQ(fiber_max(p, IM({{1, 2}}), RV({3}), RV({1, 0})).status, LPStatus::kInfeasible);
  }
}

TEST(FiberMax, SegmentFiberMatchesEndpoints) {
  // Fiber endpoints (1,0) and (0,1/2); c = (1,0) picks the larger first coordinate.
  const RationalVector ends[] = {RV({1, 0}), {Rational(0), Rational(1, 2)}};
  const Rational best = std::max(ends[0][0], ends[1][0]);
  for (const Polytope& p : TriangleReps()) {
    LPResult r = fiber_max(p, IM({{1, 2}}), RV({1}), RV({1, 0}));
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(*r.value, best);
    EXPECT_EQ(*r.point, RV({1, 0}));
  }
}

TEST(FiberIntegerPoint, SingletonFiber) {
  for (const Polytope& p : TriangleReps()) {
    EXPECT_EQ(fiber_integer_point(p, IM({{1, 2}}), IV({2})), IV({0, 1}));
  }
}

TEST(FiberIntegerPoint, UnitSquareMaxCorner) {
  EXPECT_EQ(fiber_integer_point(Polytope::FromH(UnitCube(2)), IM({{1, 1}}), IV({2})),
            IV({1, 1}));
}

TEST(FiberIntegerPoint, LexPicksFirstUnitVector) {
  const auto f = ExplicitFeasibleSet::Make(3, 1, Points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const std::vector<std::size_t> order{0, 1, 2};
  EXPECT_EQ(fiber_integer_point(f.polytope(), IM({{1, 1, 0}}), IV({1}), order),
            IV({1, 0, 0}));
  const std::vector<std::size_t> reversed{1, 0, 2};
  EXPECT_EQ(fiber_integer_point(f.polytope(), IM({{1, 1, 0}}), IV({1}), reversed),
            IV({0, 1, 0}));
}

TEST(FiberIntegerPoint, FractionalVertexIsReported) {
  // u = 1 under W = [[1,2]] is not a vertex of W P = [0,2]; with order (2,1)
  // the lex-max fiber vertex is (0,1/2).
  const std::vector<std::size_t> order{1, 0};
  try {
    fiber_integer_point(Polytope::FromH(Triangle()), IM({{1, 2}}), IV({1}), order);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
}

TEST(FiberIntegerPoint, EmptyFiberIsReported) {
  EXPECT_THROW(fiber_integer_point(Polytope::FromH(Triangle()), IM({{1, 2}}), IV({5})),
               Error);
}

TEST(FiberFace, UnitSquareTopCorner) {
  // Rows: 0: -x1<=0, 1: -x2<=0, 2: x1<=1, 3: x2<=1.
  FiberFace face = fiber_face_description(UnitCube(2), IM({{1, 1}}), IV({2}));
  EXPECT_EQ(face.tight_rows, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(face.slack_rows, (std::vector<std::size_t>{0, 1}));
}

TEST(FiberFace, UnitSquareOrigin) {
  FiberFace face = fiber_face_description(UnitCube(2), IM({{1, 1}}), IV({0}));
  EXPECT_EQ(face.tight_rows, (std::vector<std::size_t>{0, 1}));
}

TEST(FiberFace, SegmentEndpoint) {
  HPolytope seg(2);
  seg.add_inequality(RV({-1, 0}), 0);
  seg.add_inequality(RV({1, 0}), 1);
  seg.add_equality(RV({0, 1}), 0);
  FiberFace face = fiber_face_description(seg, IM({{1, 0}}), IV({1}));
  EXPECT_EQ(face.tight_rows, (std::vector<std::size_t>{1, 2}));
  // The tight rows pin exactly (1,0).
  HPolytope pinned(2);
  for (std::size_t i : face.tight_rows) pinned.add_equality(seg.A.row(i), seg.b[i]);
  const std::vector<std::size_t> order{0, 1};
  EXPECT_EQ(*lex_max(pinned, order).point, RV({1, 0}));
  EXPECT_EQ(*lp_solve(pinned, RV({-1, -1}), Sense::kMax).point, RV({1, 0}));
}

TEST(FiberFace, NonVertexIsRejected) {
  try {
    fiber_face_description(UnitCube(2), IM({{1, 1}}), IV({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
  EXPECT_THROW(fiber_face_description(UnitCube(2), IM({{1, 1}}), IV({3})), Error);
}

// Box [0,k]^n cut by 1.x <= beta; the constraint matrix is totally
// unimodular so conv of its integer points is the polytope itself.
HPolytope CappedBox(std::size_t n, long k, long beta) {
  HPolytope h = HPolytope::Box(RationalVector(n, Rational(0)), RationalVector(n, Rational(k)));
  h.add_inequality(RationalVector(n, Rational(1)), beta);
  return h;
}

std::vector<IntVector> IntegerPoints(const HPolytope& h, long k) {
  std::vector<IntVector> out;
  const std::size_t n = h.dim();
  IntVector x(n, Integer(0));
  while (true) {
    if (h.contains(ToRational(x))) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == k) x[i++] = 0;
    if (i == n) break;
    x[i] += 1;
  }
  return out;
}

TEST(FiberFaceProperty, TightRowsCutOutTheFiber) {
  Rng rng(21);
  int faces = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 3, d = 1 + trial % 2;
    const HPolytope h = CappedBox(n, 2, 3);
    const auto f = IntegerPoints(h, 2);
    IntMatrix w(d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) w(i, j) = static_cast<long>(UniformInt(rng, -2, 2));
    ImageVertexSet iv = image_vertices(Polytope::FromH(h), GeneralizedUnaryWeights::Unary(w),
                                       FeasibleMeta{6, n});
    for (const IntVector& u : iv.vertices) {
      FiberFace face = fiber_face_description(h, w, u);
      ++faces;
      for (const IntVector& x : f) {
        const RationalVector xr = ToRational(x);
        bool on_face = true;
        for (std::size_t i : face.tight_rows) {
          on_face = on_face && Dot(h.A.row(i), std::span<const Rational>(xr)) == h.b[i];
        }
        EXPECT_EQ(on_face, Multiply(w, std::span<const Integer>(x)) == u);
      }
    }
  }
  EXPECT_GT(faces, 20);
}

TEST(IsVertex, Examples) {
  EXPECT_FALSE(is_vertex(std::span<const Integer>(IV({1, 0})),
                         std::span<const IntVector>(Points({{0, 0}, {1, 0}, {2, 0}}))));
  EXPECT_TRUE(is_vertex(std::span<const Integer>(IV({0, 0})),
                        std::span<const IntVector>(Points({{0, 0}, {1, 0}, {0, 1}}))));
  EXPECT_FALSE(is_vertex(std::span<const Integer>(IV({1, 1})),
                         std::span<const IntVector>(Points({{0, 0}, {2, 0}, {0, 2}, {1, 1}}))));
}

TEST(IsVertex, DuplicatesDoNotHideAVertex) {
  EXPECT_TRUE(is_vertex(std::span<const Integer>(IV({2})),
                        std::span<const IntVector>(Points({{0}, {2}, {2}}))));
}

TEST(ImageVertices, ThreeNonCollinearImages) {
  const auto f = ExplicitFeasibleSet::Make(2, 2, Points({{1, 0}, {0, 1}, {1, 1}}));
  const auto w = GeneralizedUnaryWeights::Unary(IM({{1, 1}, {1, 0}}));
  ImageVertexSet iv = image_vertices(f.polytope(), w, f.meta);
  std::set<IntVector> expected{IV({1, 1}), IV({1, 0}), IV({2, 1})};
  EXPECT_EQ(std::set<IntVector>(iv.vertices.begin(), iv.vertices.end()), expected);
  ASSERT_EQ(iv.witnesses.size(), iv.vertices.size());
  for (std::size_t k = 0; k < iv.vertices.size(); ++k) {
    EXPECT_TRUE(f.contains(iv.witnesses[k]));
    EXPECT_EQ(Multiply(materialize(w), std::span<const Integer>(iv.witnesses[k])),
              iv.vertices[k]);
  }
}

TEST(ImageVertices, SinglePoint) {
  const auto f = ExplicitFeasibleSet::Make(2, 0, Points({{0, 0}}));
  ImageVertexSet iv =
      image_vertices(f.polytope(), GeneralizedUnaryWeights::Unary(IM({{3, -1}, {2, 2}})), f.meta);
  EXPECT_EQ(iv.vertices, (std::vector<IntVector>{IV({0, 0})}));
}

TEST(ImageVertices, CollinearInteriorDropped) {
  const auto f = ExplicitFeasibleSet::Make(2, 2, Points({{0, 0}, {1, 0}, {2, 0}}));
  ImageVertexSet iv =
      image_vertices(f.polytope(), GeneralizedUnaryWeights::Unary(IM({{1, 0}})), f.meta);
  EXPECT_EQ(iv.image_points, (std::vector<IntVector>{IV({0}), IV({1}), IV({2})}));
  EXPECT_EQ(iv.vertices, (std::vector<IntVector>{IV({0}), IV({2})}));
}

TEST(ImageVertices, EmptyFeasibleSet) {
  const auto f = ExplicitFeasibleSet::Make(2, 2, {});
  try {
    image_vertices(f.polytope(), GeneralizedUnaryWeights::Unary(IM({{1, 0}})), f.meta);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
}

TEST(ImageVertices, HRepresentationAgreesWithPointList) {
  const HPolytope h = CappedBox(3, 2, 3);
  const auto pts = IntegerPoints(h, 2);
  const auto f = ExplicitFeasibleSet::Make(3, 6, pts);
  const auto w = GeneralizedUnaryWeights::Unary(IM({{1, -1, 2}, {0, 1, 1}}));
  ImageVertexSet a = image_vertices(Polytope::FromH(h), w, f.meta);
  ImageVertexSet b = image_vertices(f.polytope(), w, f.meta);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.image_points, b.image_points);
}

TEST(ImageVertices, OracleAgreesWithPointList) {
  const auto f = ExplicitFeasibleSet::Make(2, 3, Points({{0, 0}, {3, 0}, {0, 3}, {1, 1}, {2, 1}}));
  const auto w = GeneralizedUnaryWeights::Unary(IM({{1, 2}}));
  ImageVertexSet a = image_vertices(Polytope::FromOracle(hull_separation(f)), w, f.meta);
  ImageVertexSet b = image_vertices(f.polytope(), w, f.meta);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.image_points, b.image_points);
  EXPECT_EQ(a.witnesses, b.witnesses);
}

struct RandomCase {
  ExplicitFeasibleSet f;
  GeneralizedUnaryWeights w;
};

RandomCase MakeCase(std::uint64_t seed, std::size_t d) {
  GenParams params;
  params.n = 4;
  params.d = d;
  params.beta = d == 3 ? 2 : 3;
  params.count = 15;
  params.weight_min = -1;
  params.weight_max = d == 3 ? 1 : 2;
  Instance inst = gen_instance(InstanceKind::kRandomPoints, params, seed);
  return {inst.explicit_set(), inst.weights};
}

TEST(ImageVerticesProperty, MatchesBruteForceHull) {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      RandomCase c = MakeCase(seed, d);
      const IntMatrix w = materialize(c.w);
      std::vector<IntVector> images;
      for (const IntVector& x : c.f.points) images.push_back(Multiply(w, std::span<const Integer>(x)));
      const auto expected = oracle::HullVertices(ToP3(images));
      ImageVertexSet iv = image_vertices(c.f.polytope(), c.w, c.f.meta);
      const auto got = ToP3(iv.vertices);
      EXPECT_EQ(std::set<oracle::P3>(got.begin(), got.end()), expected)
          << "d=" << d << " seed=" << seed;
      for (std::size_t k = 0; k < iv.vertices.size(); ++k) {
        EXPECT_TRUE(c.f.contains(iv.witnesses[k]));
        EXPECT_EQ(Multiply(w, std::span<const Integer>(iv.witnesses[k])), iv.vertices[k]);
      }
    }
  }
}

TEST(ImageVerticesProperty, FiberFeasibilityMatchesHullMembership) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    RandomCase c = MakeCase(seed, 2);
    const IntMatrix w = materialize(c.w);
    std::vector<IntVector> images;
    for (const IntVector& x : c.f.points) images.push_back(Multiply(w, std::span<const Integer>(x)));
    const Polytope vrep = c.f.polytope();
    const Polytope orep = Polytope::FromOracle(hull_separation(c.f));
    const RationalVector zero(c.f.meta.n, Rational(0));
    for (const IntVector& u : candidate_image_grid(c.w, c.f.meta)) {
      // u in conv(images) iff u is not a vertex of images + {u} or is an image.
      std::vector<IntVector> with_u = images;
      with_u.push_back(u);
      const bool member = std::find(images.begin(), images.end(), u) != images.end() ||
                          !is_vertex(std::span<const Integer>(u), std::span<const IntVector>(with_u));
      const RationalVector ur = ToRational(u);
      EXPECT_EQ(fiber_max(vrep, w, ur, zero).optimal(), member);
      EXPECT_EQ(fiber_max(orep, w, ur, zero).optimal(), member);
    }
  }
}

TEST(ImageVertices, ThreadCountDoesNotChangeResult) {
  RandomCase c = MakeCase(3, 2);
  ImageVertexOptions one, four;
  four.threads = 4;
  ImageVertexSet a = image_vertices(c.f.polytope(), c.w, c.f.meta, one);
  ImageVertexSet b = image_vertices(c.f.polytope(), c.w, c.f.meta, four);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(a.image_points, b.image_points);
}

}  // namespace
}  // namespace nlco
