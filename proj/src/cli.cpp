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

#include "nlco/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlco/fibers.hpp"
#include "nlco/harness.hpp"
#include "nlco/instance_io.hpp"
#include "nlco/optimizers.hpp"
#include "nlco/rand_intersect.hpp"

namespace nlco {

namespace {

using Json = nlohmann::json;

struct Flags {
  std::string instance;
  std::string algorithm;
  std::string objective;
  std::uint64_t seed = 0;
  std::size_t repeats = 1;
  std::string primary_objective;
  std::size_t threads = 1;
  std::string out;
  bool verify = false;
  bool timing = false;
  std::size_t grid_cap = kDefaultGridCap;
  std::size_t norm_steps = 16;
  std::string a;
  // gen
  std::string kind;
  GenParams gen;
  std::string sense = "max";
};

std::string Approx(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Json VectorJson(std::span<const Integer> v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(x.get_str());
  return out;
}

Json ValueJson(const ObjectiveValue& v) {
  Json out;
  out["exact"] = v.to_string();
  out["rational_part"] = v.rational_part().get_str();
  if (!v.is_rational()) {
    out["root"] = {{"sign", v.root_sign()},
                   {"radicand", v.radicand().get_str()},
                   {"degree", v.degree()}};
  }
  out["approximate_decimal"] = Approx(v.approx());
  return out;
}

Json RadicalJson(const Radical& r) {
  return {{"exact", r.to_string()},
          {"radicand", r.radicand.get_str()},
          {"degree", r.degree},
          {"approximate_decimal", Approx(r.approx())}};
}

std::string SenseName(Sense s) { return s == Sense::kMax ? "max" : "min"; }

void Emit(const Json& report, const Flags& flags, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (flags.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out);
  if (!file) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + flags.out + "'");
  file << text;
}

// Adds report_digest over everything except timing.
void Seal(Json& report, std::optional<double> elapsed_ms) {
  report["report_digest"] = HexDigest(Fnv1a64(report.dump()));
  if (elapsed_ms) report["timing_ms"] = Approx(*elapsed_ms);
}

Json BaseReport(const std::string& command, const Instance& inst) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  r["instance_digest"] = HexDigest(Fnv1a64(serialize_instance(inst)));
  return r;
}

std::optional<IntVector> PrimaryObjective(const Flags& flags, const Instance& inst) {
  if (!flags.primary_objective.empty()) return ParseIntegerList(flags.primary_objective);
  return inst.primary_objective;
}

// Points of F attaining max c.x.
ExplicitFeasibleSet RestrictToFace(const ExplicitFeasibleSet& f, const IntVector& c) {
  std::optional<Integer> best;
  for (const IntVector& x : f.points) {
    Integer v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v += c[i] * x[i];
    if (!best || v > *best) best = v;
  }
  std::vector<IntVector> kept;
  for (const IntVector& x : f.points) {
    Integer v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v += c[i] * x[i];
    if (v == *best) kept.push_back(x);
  }
  return {std::move(kept), f.meta};
}

int Solve(const Flags& flags, bool force_verify, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  Instance inst = parse_instance(flags.instance);
  if (!flags.objective.empty()) {
    inst.objective = flags.objective;
    inst.validate();
  }
  const ObjectiveOracle f = inst.objective_oracle();
  const std::string algorithm =
      !flags.algorithm.empty() ? flags.algorithm
                               : (inst.is_matroid_pair() ? "matroid-random" : "exact-max");
  const std::optional<IntVector> c = PrimaryObjective(flags, inst);
  if (c && c->size() != inst.n()) {
    throw Error(ErrorKind::kInvalidArgument, "primary objective length must equal n");
  }
  const bool verify = flags.verify || force_verify;

  ImageVertexOptions options;
  options.grid_cap = flags.grid_cap;
  options.threads = flags.threads;
  const IntMatrix wm = materialize(inst.weights);

  ExplicitFeasibleSet fset = inst.feasible_set();
  Polytope p = fset.polytope();
  if (c) {
    p = primary_objective_face(p, *c, options.solve);
    fset = RestrictToFace(fset, *c);
  }

  Sense sense = inst.sense;
  ApproxResult result;
  Json extra;
  if (algorithm == "exact-max") {
    sense = Sense::kMax;
    result = quasiconvex_max(p, inst.weights, fset.meta, f, options);
  } else if (algorithm == "norm-max") {
    sense = Sense::kMax;
    NormConstants consts =
        f.kind() == ObjectiveKind::kPNorm
            ? norm_constants_pnorm(*f.p(), inst.d())
            : estimate_norm_constants(f, inst.d(), flags.norm_steps);
    extra["norm_constants"] = {{"lower", RadicalJson(consts.lower)},
                               {"upper", RadicalJson(consts.upper)}};
    result = norm_max_approx(p, wm, f, consts, options);
  } else if (algorithm == "raycave-min") {
    sense = Sense::kMin;
    result = raycave_min_approx(p, inst.weights, fset.meta, f, options);
  } else if (algorithm == "matroid-random") {
    if (!inst.is_matroid_pair()) {
      throw Error(ErrorKind::kInvalidArgument, "matroid-random needs a matroid-pair instance");
    }
    if (c) {
      throw Error(ErrorKind::kInvalidArgument,
                  "matroid-random does not support a primary objective");
    }
    CommonBaseOptions cb;
    cb.seed = flags.seed;
    cb.repeats = flags.repeats;
    cb.interpolation.threads = flags.threads;
    CommonBaseResult r = optimal_common_base(inst.pair(), wm, f, sense, cb);
    result.x = r.x;
    result.u = r.u;
    result.value = r.value;
    result.guarantee = Radical::Of(1);
    Json base = Json::array();
    for (std::size_t j : r.base) base.push_back(j);
    extra["base"] = std::move(base);
    extra["selected_seed"] = std::to_string(r.seed);
    extra["valid_repeats"] = r.valid_repeats;
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown algorithm '" + algorithm + "'");
  }

  Json report = BaseReport("solve", inst);
  report["algorithm"] = algorithm;
  Json params;
  params["objective"] = inst.objective;
  params["sense"] = SenseName(sense);
  if (algorithm == "matroid-random") {
    params["seed"] = std::to_string(flags.seed);
    params["repeats"] = flags.repeats;
  }
  if (c) params["primary_objective"] = VectorJson(*c);
  report["parameters"] = std::move(params);

  Json res;
  res["x"] = VectorJson(result.x);
  res["u"] = VectorJson(result.u);
  res["value"] = ValueJson(result.value);
  res["guarantee"] = RadicalJson(result.guarantee);
  for (auto& [k, v] : extra.items()) res[k] = v;
  report["result"] = std::move(res);

  bool mismatch = false;
  if (verify) {
    const BruteForceResult brute = brute_force_opt(fset, wm, f, sense);
    bool ok = false;
    if (algorithm == "exact-max" || algorithm == "matroid-random") {
      ok = brute.value == result.value;
    } else if (algorithm == "norm-max") {
      ok = brute.value <= result.value.scaled(result.guarantee);
    } else {
      ok = result.value <= brute.value.scaled(result.guarantee);
    }
    ok = ok && fset.contains(result.x) && Multiply(wm, result.x) == result.u;
    Json v;
    v["oracle_x"] = VectorJson(brute.x);
    v["oracle_u"] = VectorJson(brute.u);
    v["oracle_value"] = ValueJson(brute.value);
    v["agrees"] = ok;
    const double denom = sense == Sense::kMax ? result.value.approx() : brute.value.approx();
    const double num = sense == Sense::kMax ? brute.value.approx() : result.value.approx();
    v["ratio_approximate"] = denom != 0 ? Approx(num / denom) : "undefined";
    report["verification"] = std::move(v);
    mismatch = !ok;
  }

  std::optional<double> elapsed;
  if (flags.timing) {
    elapsed = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start).count();
  }
  Seal(report, elapsed);
  Emit(report, flags, out);
  return mismatch ? kExitVerifyMismatch : kExitOk;
}

int Fibers(const Flags& flags, std::ostream& out) {
  const Instance inst = parse_instance(flags.instance);
  ImageVertexOptions options;
  options.grid_cap = flags.grid_cap;
  options.threads = flags.threads;
  const ExplicitFeasibleSet fset = inst.feasible_set();
  const ImageVertexSet set =
      image_vertices(fset.polytope(), inst.weights, fset.meta, options);
  Json report = BaseReport("fibers", inst);
  Json images = Json::array(), vertices = Json::array(), witnesses = Json::array();
  for (const IntVector& u : set.image_points) images.push_back(VectorJson(u));
  for (std::size_t k = 0; k < set.vertices.size(); ++k) {
    vertices.push_back(VectorJson(set.vertices[k]));
    witnesses.push_back({{"u", VectorJson(set.vertices[k])},
                         {"x", VectorJson(set.witnesses[k])}});
  }
  report["image_points"] = std::move(images);
  report["vertices"] = std::move(vertices);
  report["witnesses"] = std::move(witnesses);
  Seal(report, std::nullopt);
  Emit(report, flags, out);
  return kExitOk;
}

int Support(const Flags& flags, std::ostream& out) {
  const Instance inst = parse_instance(flags.instance);
  if (!inst.is_matroid_pair()) {
    throw Error(ErrorKind::kInvalidArgument, "support needs a matroid-pair instance");
  }
  const VectorialMatroidPair& pair = inst.pair();
  const IntVector a = flags.a.empty() ? IntVector(pair.n(), Integer(1))
                                      : ParseIntegerList(flags.a);
  const ShiftedProblem shifted = nonneg_shift(
      materialize(inst.weights), Integer(static_cast<unsigned long>(pair.r())),
      inst.objective_oracle());
  InterpolationOptions options;
  options.threads = flags.threads;
  const SupportPolynomial poly = interpolate_support(pair, shifted.w, a, options);

  Json report = BaseReport("support", inst);
  report["a"] = VectorJson(a);
  report["shift"] = shifted.v.get_str();
  report["z"] = poly.z;
  report["d"] = poly.d;
  Json coeffs = Json::array();
  for (std::size_t k = 0; k < poly.coefficients.size(); ++k) {
    if (sgn(poly.coefficients[k]) == 0) continue;
    coeffs.push_back({{"u", VectorJson(poly.point(k))},
                      {"g", poly.coefficients[k].get_str()}});
  }
  report["coefficients"] = std::move(coeffs);
  Json support = Json::array();
  for (const IntVector& u : poly.support()) support.push_back(VectorJson(u));
  report["support"] = std::move(support);
  Seal(report, std::nullopt);
  Emit(report, flags, out);
  return kExitOk;
}

int Gen(const Flags& flags, std::ostream& out) {
  GenParams params = flags.gen;
  if (flags.sense == "max") {
    params.sense = Sense::kMax;
  } else if (flags.sense == "min") {
    params.sense = Sense::kMin;
  } else {
    throw Error(ErrorKind::kInvalidArgument, "sense must be max or min");
  }
  if (!flags.objective.empty()) params.objective = flags.objective;
  const Instance inst = gen_instance(ParseInstanceKind(flags.kind), params, flags.seed);
  const std::string text = serialize_instance(inst);
  if (flags.out.empty()) {
    out << text;
  } else {
    std::ofstream file(flags.out);
    if (!file) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + flags.out + "'");
    file << text;
  }
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kInvariant:
    case ErrorKind::kPrecondition:
      return kExitParse;
    case ErrorKind::kInfeasible: return kExitInfeasible;
    case ErrorKind::kCapExceeded: return kExitCapExceeded;
    case ErrorKind::kVerifyMismatch: return kExitVerifyMismatch;
    case ErrorKind::kCutBudget:
    case ErrorKind::kOracleContract:
      return kExitCutBudget;
    case ErrorKind::kRandomizedFailure: return kExitRandomizedFailure;
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kInternal:
      return kExitUsage;
  }
  return kExitUsage;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Flags flags;
  CLI::App app{"Exact nonlinear combinatorial optimization over f(Wx)", "nlco"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--instance", flags.instance, "Instance JSON file")->required();
    sub->add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", flags.out, "Write the report here instead of stdout");
    sub->add_option("--grid-cap", flags.grid_cap, "Candidate grid size cap");
  };
  auto add_solve = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--algorithm", flags.algorithm)
        ->check(CLI::IsMember({"exact-max", "norm-max", "raycave-min", "matroid-random"}));
    sub->add_option("--objective", flags.objective, "Override the instance objective");
    sub->add_option("--seed", flags.seed);
    sub->add_option("--repeats", flags.repeats)->check(CLI::PositiveNumber);
    sub->add_option("--primary-objective", flags.primary_objective,
                    "Comma-separated c; optimize over the face max c.x");
    sub->add_option("--norm-steps", flags.norm_steps,
                    "Grid steps for estimated norm constants");
    sub->add_flag("--timing", flags.timing, "Include wall time (not digested)");
  };

  CLI::App* solve = app.add_subcommand("solve", "Run an optimization algorithm");
  add_solve(solve);
  solve->add_flag("--verify", flags.verify, "Compare against brute force");
  CLI::App* verify = app.add_subcommand("verify", "Solve and compare with brute force");
  add_solve(verify);
  CLI::App* fibers = app.add_subcommand("fibers", "Image points, image vertices, witnesses");
  add_common(fibers);
  CLI::App* support = app.add_subcommand("support", "Dump the support polynomial");
  add_common(support);
  support->add_option("--a", flags.a, "Comma-separated substitution a");

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--kind", flags.kind)->required()->check(CLI::IsMember(
      {"uniform-matroid-pair", "graphic-like", "transversal-like",
       "permutation-matrices", "random-points"}));
  gen->add_option("--seed", flags.seed);
  gen->add_option("--n", flags.gen.n);
  gen->add_option("--r", flags.gen.r);
  gen->add_option("--d", flags.gen.d);
  gen->add_option("--beta", flags.gen.beta);
  gen->add_option("--count", flags.gen.count);
  gen->add_option("--n-prime", flags.gen.n_prime);
  gen->add_option("--weight-min", flags.gen.weight_min);
  gen->add_option("--weight-max", flags.gen.weight_max);
  gen->add_option("--layers", flags.gen.layers);
  gen->add_option("--objective", flags.objective);
  gen->add_option("--sense", flags.sense)->check(CLI::IsMember({"max", "min"}));
  gen->add_option("--out", flags.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, error;
    const int code = app.exit(e, help, error);
    out << help.str();
    err << error.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return Solve(flags, false, out);
    if (verify->parsed()) return Solve(flags, true, out);
    if (fibers->parsed()) return Fibers(flags, out);
    if (support->parsed()) return Support(flags, out);
    if (gen->parsed()) return Gen(flags, out);
  } catch (const Error& e) {
    err << "error (" << ToString(e.kind()) << "): " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "error (internal): " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nlco
