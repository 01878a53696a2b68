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


// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "nlco/cli.hpp"
#include "nlco/fibers.hpp"
#include "nlco/harness.hpp"
#include "nlco/instance_io.hpp"
#include "nlco/matroid.hpp"
#include "nlco/optimizers.hpp"
#include "nlco/rand_intersect.hpp"
#include "nlco/random.hpp"
#include "nlco/weights.hpp"
#include "oracles.hpp"

namespace nlco {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

IntVector Image(const IntMatrix& w, const IntVector& x) {
  return Multiply(w, std::span<const Integer>(x));
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

// ---------------------------------------------------------------- suite 1

struct ExactCase {
  ExplicitFeasibleSet f;
  GeneralizedUnaryWeights w;
  std::string objective;
};

std::vector<ExactCase> Suite1() {
  std::vector<ExactCase> cases;
  Rng rng(20260101);
  const char* norms[] = {"pnorm:1", "pnorm:2", "pnorm:inf", "linear", "max-coordinate"};
  for (std::uint64_t k = 0; k < 240; ++k) {
    const std::size_t d = 1 + k % 3;
    GenParams params;
    params.d = d;
    params.n = 3 + UniformBelow(rng, 6);  // 3..8
    if (d == 1) {
      params.beta = 2 + UniformBelow(rng, 7);  // <= 8
      params.weight_min = -3;
      params.weight_max = 3;
      params.layers = 1 + k % 2;
    } else if (d == 2) {
      const bool wide = k % 2 == 0;
      params.beta = wide ? 4 : 8;
      params.weight_min = wide ? -2 : -1;
      params.weight_max = wide ? 2 : 1;
    } else {
      const bool wide = k % 2 == 0;
      params.beta = wide ? 2 : 4;
      params.weight_min = wide ? -2 : -1;
      params.weight_max = wide ? 2 : 1;
    }
    std::string obj = norms[(k / 3) % 5];
    if (obj == "linear") {
      obj = "linear:";
      for (std::size_t i = 0; i < d; ++i) {
        obj += (i ? "," : "") + std::to_string(UniformInt(rng, -3, 3));
      }
    }
    params.count = 5 + UniformBelow(rng, d == 1 ? 120 : 40);
    ExactCase c;
    if (k % 10 == 9) {
      // Common bases of a generated matroid pair as the explicit set.
      GenParams mp;
      mp.n = 6;
      mp.r = 2 + k % 2;
      Instance pair = gen_instance(InstanceKind::kTransversalLike, mp, k);
      c.f = enumerate_common_bases(pair.pair());
      params.n = 6;
      params.count = 1;
      Instance inst = gen_instance(InstanceKind::kRandomPoints, params, k);
      c.w = inst.weights;
    } else {
      try {
        Instance inst = gen_instance(InstanceKind::kRandomPoints, params, k);
        c.f = inst.explicit_set();
        c.w = inst.weights;
      } catch (const Error&) {
        params.count = 8;
        Instance inst = gen_instance(InstanceKind::kRandomPoints, params, k);
        c.f = inst.explicit_set();
        c.w = inst.weights;
      }
    }
    c.objective = obj;
    cases.push_back(std::move(c));
  }
  return cases;
}

struct Suite1Results {
  Outcome c1, c2, c3;
};

Suite1Results RunSuite1() {
  Suite1Results out;
  const auto start = Clock::now();
  const auto cases = Suite1();
  std::size_t vertices_checked = 0, max_points = 0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const ExactCase& c = cases[k];
    const IntMatrix w = materialize(c.w);
    const ObjectiveOracle f = ParseObjective(c.objective, w.rows());
    const Polytope p = c.f.polytope();
    max_points = std::max(max_points, c.f.points.size());
    const std::string tag = "case " + std::to_string(k) + " (" + c.objective + ")";

    ApproxResult r = quasiconvex_max(p, c.w, c.f.meta, f);
    BruteForceResult b = brute_force_opt(c.f, w, f, Sense::kMax);
    if (!(r.value == b.value)) out.c1.fail(tag + ": " + r.value.to_string() + " != " + b.value.to_string());
    if (!c.f.contains(r.x) || Image(w, r.x) != r.u) out.c1.fail(tag + ": bad result point");

    ImageVertexOptions opts;
    opts.with_witnesses = false;
    ImageVertexSet iv = image_vertices(p, c.w, c.f.meta, opts);
    for (const IntVector& u : iv.vertices) {
      ++vertices_checked;
      try {
        const IntVector x = fiber_integer_point(p, w, u);
        if (!c.f.contains(x) || Image(w, x) != u) out.c2.fail(tag + ": witness outside F");
      } catch (const Error& e) {
        out.c2.fail(tag + ": " + e.what());
      }
    }
    std::vector<IntVector> images;
    for (const IntVector& x : c.f.points) images.push_back(Image(w, x));
    const auto expected = oracle::HullVertices(ToP3(images));
    const auto got_vec = ToP3(iv.vertices);
    if (std::set<oracle::P3>(got_vec.begin(), got_vec.end()) != expected) {
      out.c3.fail(tag + ": vertex sets differ");
    }
  }
  const double secs = Seconds(start);
  if (secs >= 120) out.c1.fail("runtime " + std::to_string(secs) + " s exceeds 120 s");
  std::ostringstream d1, d2, d3;
  d1 << cases.size() << " instances, max |F| = " << max_points << ", " << secs << " s";
  d2 << vertices_checked << " vertex fibers, all integer members of F";
  d3 << cases.size() << " vertex sets equal to the direct hull";
  if (out.c1.pass) out.c1.detail = d1.str();
  if (out.c2.pass) out.c2.detail = d2.str();
  if (out.c3.pass) out.c3.detail = d3.str();
  return out;
}

// ---------------------------------------------------------------- 4 and 5

ExplicitFeasibleSet Pts(std::size_t n, long beta, std::vector<std::vector<long>> rows) {
  std::vector<IntVector> pts;
  for (const auto& r : rows) {
    IntVector x;
    for (long v : r) x.emplace_back(v);
    pts.push_back(x);
  }
  return ExplicitFeasibleSet::Make(n, beta, pts);
}

Outcome Criterion4() {
  Outcome out;
  const char* specs[] = {"pnorm:1", "pnorm:2", "pnorm:inf"};
  std::size_t count = 0, gaps = 0;
  auto check = [&](const ExplicitFeasibleSet& f, const IntMatrix& w, const std::string& spec,
                   const std::string& tag) {
    const ObjectiveOracle obj = ParseObjective(spec, w.rows());
    const NormConstants consts = norm_constants_pnorm(*obj.p(), w.rows());
    ApproxResult r = norm_max_approx(f.polytope(), w, obj, consts);
    BruteForceResult b = brute_force_opt(f, w, obj, Sense::kMax);
    ++count;
    // d^(1/p) * f(W x_returned), compared exactly in p-th powers.
    if (b.value > r.value.scaled(consts.upper)) out.fail(tag + ": ratio bound violated");
    if (!f.contains(r.x)) out.fail(tag + ": result outside F");
    if (r.value < b.value) ++gaps;
  };
  for (std::uint64_t k = 0; k < 210; ++k) {
    GenParams params;
    params.n = 3 + k % 5;
    params.d = 1 + k % 4;
    params.beta = 2 + k % 3;
    params.count = 6 + k % 15;
    params.weight_min = 0;
    params.weight_max = 3;
    Instance inst;
    try {
      inst = gen_instance(InstanceKind::kRandomPoints, params, 4000 + k);
    } catch (const Error&) {
      params.count = 5;
      inst = gen_instance(InstanceKind::kRandomPoints, params, 4000 + k);
    }
    check(inst.explicit_set(), materialize(inst.weights), specs[k % 3], "case " + std::to_string(k));
  }
  // Gap family: row LPs pick the unit images (4t, 0) and (0, 4t); the
  // balanced point maps to (3t, 3t).
  for (long t = 1; t <= 5; ++t) {
    IntMatrix w(2, 3);
    w(0, 0) = 4 * t; w(0, 2) = 3 * t;
    w(1, 1) = 4 * t; w(1, 2) = 3 * t;
    const auto f = Pts(3, 1, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    for (const char* spec : {"pnorm:2", "pnorm:1"}) check(f, w, spec, "gap " + std::to_string(t));
  }
  if (gaps == 0) out.fail("no instance with ratio > 1");
  if (count < 200) out.fail("too few instances");
  if (out.pass) {
    out.detail = std::to_string(count) + " instances, " + std::to_string(gaps) +
                 " with a strict gap, bound d^(1/p) held on all";
  }
  return out;
}

Outcome Criterion5() {
  Outcome out;
  const char* specs[] = {"min-coordinate", "l1-minus-lp:inf", "pnorm:1", "pnorm:2", "pnorm:3", "pnorm:inf"};
  std::size_t count = 0, exact_p1 = 0;
  for (std::uint64_t k = 0; k < 240; ++k) {
    GenParams params;
    params.n = 3 + k % 5;
    params.d = 1 + (k / 6) % 3;
    params.beta = 2 + k % 3;
    params.count = 6 + k % 15;
    params.weight_min = 0;
    params.weight_max = 3;
    std::string spec = specs[k % 6];
    if (spec == "l1-minus-lp:inf" && params.d != 2) spec = "min-coordinate";
    Instance inst;
    try {
      inst = gen_instance(InstanceKind::kRandomPoints, params, 9000 + k);
    } catch (const Error&) {
      params.count = 5;
      inst = gen_instance(InstanceKind::kRandomPoints, params, 9000 + k);
    }
    const auto& f = inst.explicit_set();
    const IntMatrix w = materialize(inst.weights);
    const ObjectiveOracle obj = ParseObjective(spec, params.d);
    ApproxResult r = raycave_min_approx(f.polytope(), inst.weights, f.meta, obj);
    BruteForceResult b = brute_force_opt(f, w, obj, Sense::kMin);
    ++count;
    const std::string tag = "case " + std::to_string(k) + " (" + spec + ")";
    const Radical d_ratio = Radical::Of(Rational(static_cast<unsigned long>(params.d)));
    if (r.value > b.value.scaled(d_ratio)) out.fail(tag + ": d bound violated");
    if (obj.kind() == ObjectiveKind::kPNorm) {
      if (r.value > b.value.scaled(RaycaveGuarantee(obj, params.d))) {
        out.fail(tag + ": d^(1/q) bound violated");
      }
      if (!obj.p()->infinite && obj.p()->value == 1) {
        ++exact_p1;
        if (!(r.value == b.value)) out.fail(tag + ": p = 1 result not optimal");
      }
    }
  }
  // Tight witness: returned value 2, optimum sqrt(2), ratio^2 = 2.
  const auto f = Pts(2, 2, {{2, 0}, {0, 2}, {1, 1}});
  const ObjectiveOracle p2 = ParseObjective("pnorm:2", 2);
  ApproxResult r = raycave_min_approx(f.polytope(), GeneralizedUnaryWeights::Unary(IntMatrix::Identity(2)),
                                      f.meta, p2);
  BruteForceResult b = brute_force_opt(f, IntMatrix::Identity(2), p2, Sense::kMin);
  const bool tight = r.value == ObjectiveValue::Exact(2) && b.value == ObjectiveValue::WithRoot(0, 1, 2, 2) &&
                     r.value == b.value.scaled(Radical{2, 2});
  if (!tight) out.fail("tight witness did not reach ratio sqrt(2)");
  if (out.pass) {
    out.detail = std::to_string(count) + " instances (" + std::to_string(exact_p1) +
                 " with p = 1, all exact), tight witness ratio^2 = 2";
  }
  return out;
}

// ---------------------------------------------------------------- 6

VectorialMatroidPair RandomPair(Rng& rng, std::size_t r, std::size_t n) {
  while (true) {
    IntMatrix m1(r, n), m2(r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m1(i, j) = static_cast<long>(UniformInt(rng, -2, 2));
        m2(i, j) = static_cast<long>(UniformInt(rng, -2, 2));
      }
    try {
      return VectorialMatroidPair(m1, m2);
    } catch (const Error&) {
    }
  }
}

Outcome Criterion6() {
  Outcome out;
  const auto start = Clock::now();
  Rng rng(606);
  std::size_t instances = 0, substitutions = 0, coefficients = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t r = 1; r <= std::min<std::size_t>(3, n); ++r) {
      for (std::size_t d = 1; d <= 2; ++d) {
        for (long max_w = 1; max_w <= 3; ++max_w) {
          const VectorialMatroidPair pair = RandomPair(rng, r, n);
          IntMatrix w(d, n);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) w(i, j) = static_cast<long>(UniformInt(rng, 0, max_w));
          w(0, 0) = max_w;
          ++instances;
          const std::size_t total = static_cast<std::size_t>(std::pow(3, n));
          for (std::size_t s = 0; s < total; ++s) {
            IntVector a(n);
            std::size_t code = s;
            for (auto& x : a) {
              x = static_cast<long>(code % 3 + 1);
              code /= 3;
            }
            ++substitutions;
            const auto g = oracle::BruteSupport(pair.m1(), pair.m2(), w, a);
            const SupportPolynomial poly = interpolate_support(pair, w, a);
            for (std::size_t k = 0; k < poly.coefficients.size(); ++k) {
              ++coefficients;
              auto it = g.find(poly.point(k));
              const Integer want = it == g.end() ? Integer(0) : it->second;
              if (poly.coefficients[k] != want) {
                out.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " d=" +
                         std::to_string(d) + ": coefficient mismatch");
              }
            }
            // The determinant identity itself at t = 2.
            Integer expected = 0;
            for (const auto& [u, coeff] : g) {
              std::size_t exponent = 0, base = 1;
              for (std::size_t i = 0; i < d; ++i) {
                exponent += u[i].get_ui() * base;
                base *= r * max_w + 1;
              }
              Integer power;
              mpz_ui_pow_ui(power.get_mpz_t(), 2, exponent);
              expected += coeff * power;
            }
            if (gamma_subst_det(pair, w, a, 2) != expected) out.fail("determinant identity failed");
          }
        }
      }
    }
  }
  const double secs = Seconds(start);
  if (secs >= 300) out.fail("runtime " + std::to_string(secs) + " s exceeds 300 s");
  if (out.pass) {
    std::ostringstream s;
    s << instances << " instances, " << substitutions << " substitutions, " << coefficients
      << " coefficients exact, " << secs << " s";
    out.detail = s.str();
  }
  return out;
}

// ---------------------------------------------------------------- 7

VectorialMatroidPair CancellationPair(std::size_t pad) {
  IntMatrix m1(1, 2 + pad, Integer(0)), m2(1, 2 + pad, Integer(0));
  m1(0, 0) = 1; m1(0, 1) = 1;
  m2(0, 0) = 1; m2(0, 1) = -1;
  return VectorialMatroidPair(m1, m2);
}

Outcome Criterion7() {
  Outcome out;
  std::ostringstream detail;
  const ObjectiveOracle f = ParseObjective("identity", 1);
  for (std::size_t pad = 0; pad <= 2; ++pad) {
    const VectorialMatroidPair pair = CancellationPair(pad);
    const std::size_t n = pair.n();
    const IntMatrix w(1, n, Integer(0));
    const std::uint64_t s = DefaultRange(1, n);
    // Exhaustive over {1..s}^n.
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < n; ++j) total *= s;
    std::uint64_t misses = 0;
    IntVector a(n);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (auto& x : a) {
        x = static_cast<unsigned long>(c % s + 1);
        c /= s;
      }
      misses += interpolate_support(pair, w, a).support().empty();
    }
    const Rational exact(static_cast<unsigned long>(misses), static_cast<unsigned long>(total));
    if (exact > Rational(1, static_cast<unsigned long>(s))) out.fail("exhaustive miss rate above r/s");
    // 10,000 seeded draws.
    const std::size_t runs = 10000;
    std::size_t sampled = 0;
    for (std::uint64_t seed = 0; seed < runs; ++seed) {
      sampled += !random_image_optimum(pair, w, f, Sense::kMax, 77000 + seed).outcome.has_value();
    }
    const double p = exact.get_d();
    const double sd = std::sqrt(p * (1 - p) / runs);
    const double rate = static_cast<double>(sampled) / runs;
    if (std::abs(rate - p) > 3 * sd) out.fail("sampled rate outside 3 standard deviations");
    detail << (pad ? "; " : "") << "n=" << n << ": " << exact.get_str() << " <= 1/" << s << ", sampled " << rate;
  }
  if (out.pass) out.detail = detail.str();
  return out;
}

// ---------------------------------------------------------------- 8

Outcome Criterion8() {
  Outcome out;
  const auto start = Clock::now();
  const char* kinds[] = {"transversal-like", "graphic-like", "uniform-matroid-pair"};
  const char* objectives[] = {"pnorm:2", "pnorm:1", "min-coordinate", "linear", "pnorm:inf"};
  double worst = 1.0;
  std::size_t instances = 0;
  Rng pair_rng(808);
  for (std::uint64_t k = 0; k < 24; ++k) {
    GenParams params;
    params.n = 4 + k % 3;
    params.r = 1 + k % 3;
    params.d = 1 + (k / 3) % 2;
    params.weight_min = 0;
    params.weight_max = 1;
    Instance inst = gen_instance(ParseInstanceKind(kinds[k % 3]), params, 800 + k);
    // Every other instance swaps in an unrelated generic pair, where
    // cancellation in the support polynomial can actually happen.
    VectorialMatroidPair pair = inst.pair();
    while (k % 2) {
      pair = RandomPair(pair_rng, params.r, params.n);
      if (!enumerate_common_bases(pair).points.empty()) break;
    }
    const IntMatrix w = materialize(inst.weights);
    const ObjectiveOracle f = ParseObjective(objectives[k % 5], params.d);
    const Sense sense = k % 4 == 3 ? Sense::kMin : Sense::kMax;
    const BruteForceResult best = brute_force_opt(enumerate_common_bases(pair), w, f, sense);
    ++instances;
    std::size_t optimal = 0;
    const std::size_t runs = 500;
    for (std::uint64_t seed = 0; seed < runs; ++seed) {
      try {
        CommonBaseOptions opts;
        opts.seed = seed * 7919 + k;
        CommonBaseResult r = optimal_common_base(pair, w, f, sense, opts);
        optimal += r.value == best.value;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kRandomizedFailure) throw;
      }
    }
    const double rate = static_cast<double>(optimal) / runs;
    worst = std::min(worst, rate);
    if (rate < 0.45) out.fail("instance " + std::to_string(k) + ": rate " + std::to_string(rate));
    CommonBaseResult det = optimal_common_base_deterministic(pair, w, f, sense);
    if (!(det.value == best.value)) out.fail("deterministic variant wrong on instance " + std::to_string(k));
  }
  if (out.pass) {
    std::ostringstream s;
    s << instances << " instances x 500 runs, worst success rate " << worst
      << ", deterministic variant 100%, " << Seconds(start) << " s";
    out.detail = s.str();
  }
  return out;
}

// ---------------------------------------------------------------- 9

Outcome Criterion9() {
  Outcome out;
  Rng rng(909);
  const char* algorithms[] = {"exact-max", "norm-max", "raycave-min"};
  std::size_t count = 0;
  for (std::uint64_t k = 0; k < 60; ++k) {
    GenParams params;
    params.n = 4 + k % 3;
    params.d = 1 + k % 2;
    params.beta = 3;
    params.count = 10 + k % 10;
    params.weight_min = 0;
    params.weight_max = 2;
    Instance inst = gen_instance(InstanceKind::kRandomPoints, params, 1900 + k);
    const auto& f = inst.explicit_set();
    const IntMatrix w = materialize(inst.weights);
    IntVector c(params.n);
    for (auto& x : c) x = static_cast<long>(UniformInt(rng, -2, 2));
    Integer z = 0;
    bool first = true;
    for (const auto& x : f.points) {
      const Integer v = Dot(std::span<const Integer>(c), std::span<const Integer>(x)).get_num();
      if (first || v > z) z = v;
      first = false;
    }
    std::vector<IntVector> best;
    for (const auto& x : f.points) {
      if (Dot(std::span<const Integer>(c), std::span<const Integer>(x)) == z) best.push_back(x);
    }
    const auto sub = ExplicitFeasibleSet::Make(params.n, params.beta, best);
    const Polytope face = primary_objective_face(f.polytope(), c);
    const std::string algo = algorithms[k % 3];
    const ObjectiveOracle obj = ParseObjective(k % 2 ? "pnorm:1" : "pnorm:2", params.d);
    ApproxResult r;
    bool ok = true;
    if (algo == "exact-max") {
      r = quasiconvex_max(face, inst.weights, f.meta, obj);
      ok = r.value == brute_force_opt(sub, w, obj, Sense::kMax).value;
    } else if (algo == "norm-max") {
      r = norm_max_approx(face, w, obj, norm_constants_pnorm(*obj.p(), params.d));
      ok = !(brute_force_opt(sub, w, obj, Sense::kMax).value > r.value.scaled(r.guarantee));
    } else {
      r = raycave_min_approx(face, inst.weights, f.meta, obj);
      ok = !(r.value > brute_force_opt(sub, w, obj, Sense::kMin).value.scaled(r.guarantee));
    }
    ++count;
    const std::string tag = "case " + std::to_string(k) + " (" + algo + ")";
    if (Dot(std::span<const Integer>(c), std::span<const Integer>(r.x)) != z) out.fail(tag + ": c.x != z*");
    if (!sub.contains(r.x)) out.fail(tag + ": result outside the c-optimal subset");
    if (!ok) out.fail(tag + ": inner guarantee violated");
  }
  if (out.pass) out.detail = std::to_string(count) + " instances over three algorithms";
  return out;
}

// ---------------------------------------------------------------- 10

struct CliOut {
  int code;
  std::string out;
};

CliOut RunCliCapture(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str() + err.str()};
}

Outcome Criterion10() {
  Outcome out;
  const auto dir = std::filesystem::temp_directory_path() / "nlco_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t reports = 0;
  auto gen = [&](const std::vector<std::string>& args, const std::string& name) {
    const std::string path = (dir / name).string();
    std::vector<std::string> full = {"gen"};
    full.insert(full.end(), args.begin(), args.end());
    full.insert(full.end(), {"--out", path});
    if (RunCliCapture(full).code != 0) out.fail("gen failed for " + name);
    return path;
  };
  const std::string pts = gen({"--kind", "random-points", "--n", "5", "--d", "2", "--count", "15",
                               "--weight-min", "0", "--weight-max", "2", "--seed", "5"},
                              "points.json");
  const std::string perm = gen({"--kind", "permutation-matrices", "--n-prime", "3", "--d", "2",
                                "--weight-min", "0", "--seed", "6"},
                               "perm.json");
  const std::string pair = gen({"--kind", "graphic-like", "--n", "6", "--r", "3", "--d", "2",
                                "--weight-max", "2", "--seed", "7"},
                               "pair.json");
  std::vector<std::vector<std::string>> commands;
  for (const std::string& inst : {pts, perm}) {
    for (const char* algo : {"exact-max", "norm-max", "raycave-min"}) {
      commands.push_back({"solve", "--instance", inst, "--algorithm", algo});
      commands.push_back({"verify", "--instance", inst, "--algorithm", algo});
    }
    commands.push_back({"fibers", "--instance", inst});
  }
  commands.push_back({"solve", "--instance", pts, "--primary-objective", "1,0,-1,0,1"});
  commands.push_back({"solve", "--instance", perm, "--primary-objective", "1,0,0,0,1,0,0,0,1"});
  for (const char* seed : {"1", "2", "99"}) {
    commands.push_back({"solve", "--instance", pair, "--algorithm", "matroid-random", "--seed", seed,
                        "--repeats", "3"});
  }
  commands.push_back({"verify", "--instance", pair, "--algorithm", "matroid-random", "--seed", "4"});
  commands.push_back({"support", "--instance", pair, "--a", "1,2,3,1,2,3"});
  for (const auto& cmd : commands) {
    std::vector<std::string> one = cmd, many = cmd;
    one.insert(one.end(), {"--threads", "1"});
    many.insert(many.end(), {"--threads", "4"});
    const CliOut a = RunCliCapture(one), b = RunCliCapture(one), c = RunCliCapture(many);
    ++reports;
    const std::string what = cmd[0] + " " + cmd[2];
    if (a.code != 0) {
      out.fail(what + " exited " + std::to_string(a.code) + ": " + a.out);
      continue;
    }
    if (a.out != b.out) out.fail(what + ": reports differ between runs");
    const auto ja = nlohmann::json::parse(a.out), jc = nlohmann::json::parse(c.out);
    for (const char* key : {"result", "vertices", "witnesses", "coefficients", "verification"}) {
      if (ja.contains(key) && ja[key] != jc[key]) out.fail(what + ": '" + key + "' depends on threads");
    }
  }
  std::filesystem::remove_all(dir);
  if (out.pass) {
    out.detail = std::to_string(reports) +
                 " reports bit-identical at 1 thread, values identical at 4 threads";
  }
  return out;
}

}  // namespace
}  // namespace nlco

int main() {
  using nlco::Outcome;
  bool all = true;
  auto report = [&](int id, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail
              << std::endl;
  };
  nlco::Suite1Results s1;
  try {
    s1 = nlco::RunSuite1();
  } catch (const std::exception& e) {
    s1.c1.fail(std::string("exception: ") + e.what());
    s1.c2.fail("suite 1 aborted");
    s1.c3.fail("suite 1 aborted");
  }
  report(1, [&] { return s1.c1; });
  report(2, [&] { return s1.c2; });
  report(3, [&] { return s1.c3; });
  report(4, nlco::Criterion4);
  report(5, nlco::Criterion5);
  report(6, nlco::Criterion6);
  report(7, nlco::Criterion7);
  report(8, nlco::Criterion8);
  report(9, nlco::Criterion9);
  report(10, nlco::Criterion10);
  return all ? 0 : 1;
}
