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

#include "nlco/fibers.hpp"

#include <algorithm>
#include <set>

#include "nlco/parallel.hpp"
#include "simplex.hpp"

namespace nlco {

namespace {

// Feasibility of  sum_k lambda_k q_k = u, sum lambda = 1, lambda >= 0.
bool InConvexHull(std::span<const Rational> u,
                  const std::vector<const RationalVector*>& points) {
  if (points.empty()) return false;
  internal::StandardFormLP lp;
  lp.num_vars = points.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    RationalVector row(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) row[k] = (*points[k])[i];
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(u[i]);
  }
  lp.rows.emplace_back(points.size(), Rational(1));
  lp.rhs.emplace_back(1);
  lp.objective.assign(points.size(), Rational(0));
  return internal::SolveStandardForm(lp).status == LPStatus::kOptimal;
}

void CheckFiberShapes(const Polytope& p, const IntMatrix& w, std::size_t u_size) {
  if (w.cols() != p.dim() || w.rows() != u_size) {
    throw Error(ErrorKind::kInvalidArgument,
                "fiber: W is " + std::to_string(w.rows()) + "x" +
                    std::to_string(w.cols()) + ", P has dimension " +
                    std::to_string(p.dim()) + ", u has " +
                    std::to_string(u_size) + " entries");
  }
}

}  // namespace

LPResult fiber_max(const Polytope& p, const IntMatrix& w,
                   std::span<const Rational> u, std::span<const Rational> c,
                   const SolveOptions& options) {
  CheckFiberShapes(p, w, u.size());
  return p.optimize(LinearEqualities::Fiber(w, u), c, Sense::kMax, options);
}

IntVector fiber_integer_point(const Polytope& p, const IntMatrix& w,
                              std::span<const Integer> u,
                              std::span<const std::size_t> order,
                              const SolveOptions& options) {
  CheckFiberShapes(p, w, u.size());
  const RationalVector uq = ToRational(u);
  const std::vector<std::size_t> identity = IdentityOrder(p.dim());
  if (order.empty()) order = identity;
  LPResult r = p.lex_max(LinearEqualities::Fiber(w, uq), order, options);
  if (!IsIntegral(*r.point)) {
    throw Error(ErrorKind::kPrecondition,
                "fiber of " + ToString(u) + " has fractional vertex " +
                    ToString(std::span<const Rational>(*r.point)) +
                    "; u is not a vertex of the image");
  }
  return ToInteger(*r.point);
}

FiberFace fiber_face_description(const HPolytope& p, const IntMatrix& w,
                                 std::span<const Integer> u) {
  p.validate();
  if (w.cols() != p.dim() || w.rows() != u.size()) {
    throw Error(ErrorKind::kInvalidArgument, "fiber face: shape mismatch");
  }
  HPolytope fiber = p;
  const RationalMatrix wq = ToRational(w);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    fiber.add_equality(wq.row(i), Rational(u[i]));
  }

  FiberFace face;
  face.u.assign(u.begin(), u.end());
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if (p.is_equality(i)) {
      face.tight_rows.push_back(i);
      continue;
    }
    LPResult z = lp_solve(fiber, p.A.row(i), Sense::kMin);
    if (z.status == LPStatus::kInfeasible) {
      throw Error(ErrorKind::kInfeasible, "fiber of " + ToString(u) + " is empty");
    }
    if (z.status == LPStatus::kUnbounded) {
      throw Error(ErrorKind::kPrecondition, "fiber face needs a bounded P");
    }
    (*z.value == p.b[i] ? face.tight_rows : face.slack_rows).push_back(i);
  }

  // The face cut out by the tight rows must map to u alone.
  HPolytope cut(p.dim());
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    const bool tight = std::binary_search(face.tight_rows.begin(),
                                          face.tight_rows.end(), i);
    if (tight) {
      cut.add_equality(p.A.row(i), p.b[i]);
    } else {
      cut.add_inequality(p.A.row(i), p.b[i]);
    }
  }
  for (std::size_t k = 0; k < w.rows(); ++k) {
    for (Sense sense : {Sense::kMax, Sense::kMin}) {
      LPResult r = lp_solve(cut, wq.row(k), sense);
      if (!r.optimal() || *r.value != u[k]) {
        throw Error(ErrorKind::kPrecondition,
                    ToString(u) + " is not a vertex of the image: the tight "
                                  "face is larger than the fiber");
      }
    }
  }
  return face;
}

bool is_vertex(std::span<const Rational> u,
               std::span<const RationalVector> points) {
  std::vector<const RationalVector*> others;
  for (const RationalVector& q : points) {
    if (q.size() != u.size()) {
      throw Error(ErrorKind::kInvalidArgument, "is_vertex: dimension mismatch");
    }
    if (!std::equal(q.begin(), q.end(), u.begin())) others.push_back(&q);
  }
  return !InConvexHull(u, others);
}

bool is_vertex(std::span<const Integer> u, std::span<const IntVector> points) {
  std::vector<RationalVector> q;
  q.reserve(points.size());
  for (const IntVector& v : points) q.push_back(ToRational(v));
  return is_vertex(ToRational(u), q);
}

namespace {

// Nonzero v in {-k..k}^d with first nonzero entry positive; k shrinks as d
// grows, down to the unit axes.
std::vector<IntVector> SmallDirections(std::size_t d) {
  std::vector<IntVector> out;
  if (d > 6) {
    for (std::size_t i = 0; i < d; ++i) {
      IntVector v(d, Integer(0));
      v[i] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  const long k = d <= 3 ? 2 : 1;
  const std::size_t side = 2 * k + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= side;
  for (std::size_t code = 0; code < total; ++code) {
    IntVector v(d);
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = static_cast<long>(c % side) - k;
      c /= side;
    }
    auto first = std::find_if(v.begin(), v.end(),
                              [](const Integer& x) { return x != 0; });
    if (first != v.end() && *first > 0) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ImageVertexSet image_vertices(const Polytope& p,
                              const GeneralizedUnaryWeights& w,
                              const FeasibleMeta& meta,
                              const ImageVertexOptions& options) {
  const IntMatrix wm = materialize(w);
  if (wm.cols() != p.dim() || (meta.n != 0 && meta.n != p.dim())) {
    throw Error(ErrorKind::kInvalidArgument,
                "weights, metadata and polytope dimensions disagree");
  }
  const std::size_t d = wm.rows();
  const std::vector<IntVector> grid =
      candidate_image_grid(w, meta, options.grid_cap);

  // Bounding box of W P. For point lists the fiber test becomes membership in
  // conv(W F), which is the same set and a much smaller LP.
  RationalVector lo(d), hi(d);
  std::optional<Polytope> image_hull;
  if (p.is_points()) {
    const auto& pts = p.points().points;
    if (pts.empty()) throw Error(ErrorKind::kInfeasible, "feasible set is empty");
    std::vector<IntVector> images;
    for (const IntVector& x : pts) images.push_back(Multiply(wm, x));
    std::sort(images.begin(), images.end(), LexLess);
    images.erase(std::unique(images.begin(), images.end()), images.end());
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = hi[i] = images[0][i];
      for (const IntVector& v : images) {
        lo[i] = std::min(lo[i], Rational(v[i]));
        hi[i] = std::max(hi[i], Rational(v[i]));
      }
    }
    image_hull = Polytope::FromPoints(d, std::move(images));
  } else {
    const RationalMatrix wq = ToRational(wm);
    for (std::size_t i = 0; i < d; ++i) {
      for (Sense sense : {Sense::kMax, Sense::kMin}) {
        LPResult r = p.optimize(wq.row(i), sense, options.solve);
        if (r.status == LPStatus::kInfeasible) {
          throw Error(ErrorKind::kInfeasible, "feasible set is empty");
        }
        if (r.status == LPStatus::kUnbounded) {
          throw Error(ErrorKind::kPrecondition, "polytope is unbounded");
        }
        (sense == Sense::kMax ? hi[i] : lo[i]) = *r.value;
      }
    }
  }

  std::vector<const IntVector*> candidates;
  for (const IntVector& u : grid) {
    bool inside = true;
    for (std::size_t i = 0; i < d && inside; ++i) {
      inside = lo[i] <= u[i] && u[i] <= hi[i];
    }
    if (inside) candidates.push_back(&u);
  }

  std::vector<char> feasible(candidates.size(), 0);
  const RationalVector zero(p.dim(), Rational(0));
  parallel_for(candidates.size(), options.threads, [&](std::size_t k) {
    if (image_hull && std::binary_search(image_hull->points().points.begin(),
                                         image_hull->points().points.end(),
                                         *candidates[k], LexLess)) {
      feasible[k] = 1;
      return;
    }
    const RationalVector u = ToRational(*candidates[k]);
    feasible[k] = image_hull
                      ? image_hull->contains(u)
                      : fiber_max(p, wm, u, zero, options.solve).optimal();
  });

  ImageVertexSet out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (feasible[k]) out.image_points.push_back(*candidates[k]);
  }

  // A midpoint of two other image points is never a vertex. Dropping those
  // first leaves a set with the same hull, so the LPs below shrink too.
  std::vector<const IntVector*> maybe;
  {
    const std::set<IntVector, decltype(&LexLess)> present(
        out.image_points.begin(), out.image_points.end(), &LexLess);
    const std::vector<IntVector> dirs = SmallDirections(d);
    for (const IntVector& u : out.image_points) {
      bool midpoint = false;
      IntVector a(d), b(d);
      for (const IntVector& v : dirs) {
        for (std::size_t i = 0; i < d; ++i) {
          a[i] = u[i] + v[i];
          b[i] = u[i] - v[i];
        }
        if (present.count(a) && present.count(b)) {
          midpoint = true;
          break;
        }
      }
      if (!midpoint) maybe.push_back(&u);
    }
  }
  std::vector<RationalVector> uq;
  uq.reserve(maybe.size());
  for (const IntVector* u : maybe) uq.push_back(ToRational(*u));
  std::vector<char> vertex(uq.size(), 0);
  parallel_for(uq.size(), options.threads,
               [&](std::size_t k) { vertex[k] = is_vertex(uq[k], uq); });
  for (std::size_t k = 0; k < uq.size(); ++k) {
    if (vertex[k]) out.vertices.push_back(*maybe[k]);
  }

  if (options.with_witnesses) {
    out.witnesses.resize(out.vertices.size());
    parallel_for(out.vertices.size(), options.threads, [&](std::size_t k) {
      out.witnesses[k] =
          fiber_integer_point(p, wm, out.vertices[k], {}, options.solve);
    });
  }
  return out;
}

}  // namespace nlco
