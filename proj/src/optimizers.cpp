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

#include "nlco/optimizers.hpp"

#include <cmath>
#include <memory>

#include "nlco/parallel.hpp"

namespace nlco {

namespace {

void RequireNonnegative(const IntMatrix& w) {
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (const Integer& x : w.row(i))
      if (sgn(x) < 0) {
        throw Error(ErrorKind::kPrecondition,
                    "weight matrix must be entrywise nonnegative");
      }
}

// Is candidate (fc at uc, xc) better than the incumbent for maximization?
// Ties go to the smaller u, then to the larger x.
bool Better(std::strong_ordering by_f, const IntVector& uc, const IntVector& xc,
            const ApproxResult& best) {
  if (by_f != std::strong_ordering::equal) return by_f > 0;
  if (uc != best.u) return LexLess(uc, best.u);
  return LexLess(best.x, xc);
}

ApproxResult BestVertex(const ImageVertexSet& set, const ObjectiveOracle& f,
                        Sense sense) {
  if (set.vertices.empty()) {
    throw Error(ErrorKind::kInfeasible, "feasible set is empty");
  }
  ApproxResult best;
  for (std::size_t k = 0; k < set.vertices.size(); ++k) {
    const IntVector& u = set.vertices[k];
    ObjectiveValue value = f.evaluate(u);
    if (k > 0) {
      std::strong_ordering c = value <=> best.value;
      if (sense == Sense::kMin) c = 0 <=> c;
      if (!Better(c, u, set.witnesses[k], best)) continue;
    }
    best.u = u;
    best.x = set.witnesses[k];
    best.value = std::move(value);
  }
  return best;
}

ImageVertexOptions WithWitnesses(ImageVertexOptions options) {
  options.with_witnesses = true;
  return options;
}

class FaceOracle final : public SeparationOracle {
 public:
  FaceOracle(std::shared_ptr<const SeparationOracle> base, RationalVector c,
             Rational z)
      : base_(std::move(base)), c_(std::move(c)), z_(std::move(z)) {}

  std::size_t dim() const override { return base_->dim(); }
  const BoundingBox& bounding_box() const override {
    return base_->bounding_box();
  }
  std::optional<Cut> separate(std::span<const Rational> x) const override {
    const Rational cx = Dot(std::span<const Rational>(c_), x);
    if (cx > z_) return Cut{c_, z_};
    if (cx < z_) {
      RationalVector neg(c_.size());
      for (std::size_t i = 0; i < c_.size(); ++i) neg[i] = -c_[i];
      return Cut{std::move(neg), Rational(-z_)};
    }
    return base_->separate(x);
  }

 private:
  std::shared_ptr<const SeparationOracle> base_;
  RationalVector c_;
  Rational z_;
};

}  // namespace

ApproxResult quasiconvex_max(const Polytope& p, const GeneralizedUnaryWeights& w,
                             const FeasibleMeta& meta, const ObjectiveOracle& f,
                             const ImageVertexOptions& options) {
  ImageVertexSet set = image_vertices(p, w, meta, WithWitnesses(options));
  ApproxResult r = BestVertex(set, f, Sense::kMax);
  r.guarantee = Radical::Of(1);
  return r;
}

NormConstants norm_constants_pnorm(PExponent p, std::size_t d) {
  if (d == 0) throw Error(ErrorKind::kInvalidArgument, "dimension must be positive");
  if (!p.infinite && p.value < 1) {
    throw Error(ErrorKind::kInvalidArgument, "p must be at least 1");
  }
  NormConstants c;
  c.lower = Radical::Of(1);
  c.upper = p.infinite ? Radical::Of(1)
                       : Radical{Rational(static_cast<unsigned long>(d)), p.value};
  return c;
}

Rational RationalBelow(const ObjectiveValue& v) {
  if (v.is_rational()) return v.rational_part();
  const double a = v.approx();
  int exp = 0;
  std::frexp(a, &exp);
  Rational step = 1;
  mpq_div_2exp(step.get_mpq_t(), step.get_mpq_t(), static_cast<unsigned long>(std::max(0, 40 - exp)));
  Rational q(a);
  q -= step;
  while (ObjectiveValue::Exact(q) > v) {
    step *= 2;
    q -= step;
  }
  return q;
}

Rational RationalAbove(const ObjectiveValue& v) {
  if (v.is_rational()) return v.rational_part();
  const double a = v.approx();
  int exp = 0;
  std::frexp(a, &exp);
  Rational step = 1;
  mpq_div_2exp(step.get_mpq_t(), step.get_mpq_t(), static_cast<unsigned long>(std::max(0, 40 - exp)));
  Rational q(a);
  q += step;
  while (ObjectiveValue::Exact(q) < v) {
    step *= 2;
    q += step;
  }
  return q;
}

NormConstants estimate_norm_constants(const ObjectiveOracle& f, std::size_t d,
                                      std::size_t steps) {
  if (d == 0 || steps == 0) {
    throw Error(ErrorKind::kInvalidArgument, "estimator needs d, steps >= 1");
  }
  Rational upper = 0;
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector e(d, Rational(0));
    e[i] = 1;
    upper += RationalAbove(f.evaluate(e));
  }

  // Grid {-1, -1 + h, ..., 1}^d restricted to the sphere ||g||_inf = 1. Every
  // sphere point is within h/2 of a grid point, and |f(u) - f(v)| <= C_upper
  // ||u - v||_inf for a norm.
  const Rational h(2, static_cast<unsigned long>(steps));
  std::optional<ObjectiveValue> min_value;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    RationalVector g(d);
    bool on_sphere = false;
    for (std::size_t i = 0; i < d; ++i) {
      g[i] = Rational(-1) + h * static_cast<unsigned long>(idx[i]);
      on_sphere |= idx[i] == 0 || idx[i] == steps;
    }
    if (on_sphere) {
      ObjectiveValue v = f.evaluate(g);
      if (!min_value || v < *min_value) min_value = std::move(v);
    }
    std::size_t i = d;
    while (i > 0 && ++idx[i - 1] > steps) idx[--i] = 0;
    if (i == 0) break;
  }
  const Rational lower = RationalBelow(*min_value) - h / 2 * upper;
  if (sgn(lower) <= 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "grid too coarse for a positive lower norm constant");
  }
  return {Radical::Of(lower), Radical::Of(upper)};
}

ApproxResult norm_max_approx(const Polytope& p, const IntMatrix& w,
                             const ObjectiveOracle& f,
                             const NormConstants& consts,
                             const ImageVertexOptions& options) {
  RequireNonnegative(w);
  if (w.cols() != p.dim() || w.rows() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "W and P dimensions disagree");
  }
  Radical guarantee;
  if (consts.lower.degree == 1) {
    guarantee = consts.upper / consts.lower.radicand;
  } else if (consts.lower.degree == consts.upper.degree) {
    guarantee = {consts.upper.radicand / consts.lower.radicand,
                 consts.upper.degree};
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unsupported norm constants");
  }

  const std::size_t d = w.rows();
  const RationalMatrix wq = ToRational(w);
  const std::vector<std::size_t> order = IdentityOrder(p.dim());
  std::vector<IntVector> xs(d);
  parallel_for(d, options.threads, [&](std::size_t i) {
    LPResult top = p.optimize(wq.row(i), Sense::kMax, options.solve);
    if (top.status == LPStatus::kInfeasible) {
      throw Error(ErrorKind::kInfeasible, "feasible set is empty");
    }
    if (top.status == LPStatus::kUnbounded) {
      throw Error(ErrorKind::kPrecondition, "polytope is unbounded");
    }
    LinearEqualities face{RationalMatrix::FromRows({wq.row_vector(i)}),
                          {*top.value}};
    LPResult v = p.lex_max(face, order, options.solve);
    if (!IsIntegral(*v.point)) {
      throw Error(ErrorKind::kPrecondition,
                  "polytope has a fractional vertex; expected conv of integer points");
    }
    xs[i] = ToInteger(*v.point);
  });

  ApproxResult best;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector u = Multiply(w, xs[i]);
    ObjectiveValue value = f.evaluate(u);
    if (i > 0 && !Better(value <=> best.value, u, xs[i], best)) continue;
    best.x = xs[i];
    best.u = std::move(u);
    best.value = std::move(value);
  }
  best.guarantee = guarantee;
  return best;
}

Radical RaycaveGuarantee(const ObjectiveOracle& f, std::size_t d) {
  const Rational dq(static_cast<unsigned long>(d));
  if (f.kind() != ObjectiveKind::kPNorm) return Radical::Of(dq);
  const PExponent p = *f.p();
  if (p.infinite) return Radical::Of(dq);
  // d^(1/q) = d^((p-1)/p) = (d^(p-1))^(1/p).
  Rational radicand = 1;
  for (unsigned k = 1; k < p.value; ++k) radicand *= dq;
  if (p.value == 1) return Radical::Of(1);
  return Radical{radicand, p.value};
}

ApproxResult raycave_min_approx(const Polytope& p,
                                const GeneralizedUnaryWeights& w,
                                const FeasibleMeta& meta,
                                const ObjectiveOracle& f,
                                const ImageVertexOptions& options) {
  RequireNonnegative(materialize(w));
  ImageVertexSet set = image_vertices(p, w, meta, WithWitnesses(options));
  ApproxResult r = BestVertex(set, f, Sense::kMin);
  r.guarantee = RaycaveGuarantee(f, w.d());
  return r;
}

Polytope primary_objective_face(const Polytope& p, std::span<const Integer> c,
                                const SolveOptions& options) {
  if (c.size() != p.dim()) {
    throw Error(ErrorKind::kInvalidArgument,
                "primary objective has " + std::to_string(c.size()) +
                    " entries, polytope dimension is " +
                    std::to_string(p.dim()));
  }
  const RationalVector cq = ToRational(c);
  LPResult top = p.optimize(cq, Sense::kMax, options);
  if (top.status == LPStatus::kInfeasible) {
    throw Error(ErrorKind::kInfeasible, "feasible set is empty");
  }
  if (top.status == LPStatus::kUnbounded) {
    throw Error(ErrorKind::kPrecondition, "polytope is unbounded");
  }
  const Rational z = *top.value;
  if (std::all_of(c.begin(), c.end(), [](const Integer& v) { return sgn(v) == 0; })) {
    return p;
  }
  if (p.is_h()) {
    HPolytope h = p.h();
    h.add_equality(cq, z);
    return Polytope::FromH(std::move(h));
  }
  if (p.is_points()) {
    std::vector<IntVector> kept;
    for (const IntVector& x : p.points().points) {
      if (Dot(c, std::span<const Integer>(x)) == z) kept.push_back(x);
    }
    return Polytope::FromPoints(p.dim(), std::move(kept));
  }
  return Polytope::FromOracle(std::make_shared<FaceOracle>(p.oracle_ptr(), cq, z));
}

}  // namespace nlco
