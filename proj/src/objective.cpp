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

#include "nlco/objective.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "nlco/random.hpp"

namespace nlco {
namespace {

// Largest supported bracketing precision in bits; reaching it means the
// algebraic tie analysis missed a case.
constexpr unsigned long kMaxPrecisionBits = 1u << 22;

Integer PowInt(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational PowRat(const Rational& base, unsigned long exp) {
  Rational out(PowInt(base.get_num(), exp), PowInt(base.get_den(), exp));
  out.canonicalize();
  return out;
}

// q^(1/degree) when it is rational.
std::optional<Rational> ExactRoot(const Rational& q, unsigned degree) {
  if (sgn(q) < 0) {
    throw Error(ErrorKind::kInvalidArgument, "root of a negative number");
  }
  if (degree == 1) return q;
  Integer num, den;
  bool exact_num =
      mpz_root(num.get_mpz_t(), q.get_num().get_mpz_t(), degree) != 0;
  bool exact_den =
      mpz_root(den.get_mpz_t(), q.get_den().get_mpz_t(), degree) != 0;
  if (!exact_num || !exact_den) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// floor(q^(1/degree) * 2^bits).
Integer ScaledFloorRoot(const Rational& q, unsigned degree, unsigned long bits) {
  Integer scaled = q.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits * degree);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Integer root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), degree);
  return root;
}

Rational Abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

std::string RadicalString(const Rational& radicand, unsigned degree) {
  std::string r = radicand.get_str();
  if (r.find('/') != std::string::npos) r = "(" + r + ")";
  return r + "^(1/" + std::to_string(degree) + ")";
}

}  // namespace

double Radical::approx() const {
  return std::pow(radicand.get_d(), 1.0 / static_cast<double>(degree));
}

std::string Radical::to_string() const {
  if (auto exact = ExactRoot(radicand, degree)) return exact->get_str();
  return RadicalString(radicand, degree);
}

Radical Radical::operator/(const Rational& divisor) const {
  if (sgn(divisor) <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "division by a non-positive value");
  }
  return {radicand / PowRat(divisor, degree), degree};
}

std::string PExponent::to_string() const {
  return infinite ? "inf" : std::to_string(value);
}

int SignOfRadicalSum(const Rational& alpha, std::span<const int> signs,
                     std::span<const Rational> radicands, unsigned degree) {
  if (signs.size() != radicands.size() || degree == 0) {
    throw Error(ErrorKind::kInvalidArgument, "radical sum shape");
  }
  Rational constant = alpha;
  // Irrational radicals grouped so that no two groups have a rational ratio;
  // group k contributes coeffs[k] * bases[k]^(1/degree).
  std::vector<Rational> bases, coeffs;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] == 0 || sgn(radicands[k]) == 0) continue;
    if (auto exact = ExactRoot(radicands[k], degree)) {
      constant += signs[k] * *exact;
      continue;
    }
    bool merged = false;
    for (std::size_t g = 0; g < bases.size() && !merged; ++g) {
      if (auto ratio = ExactRoot(radicands[k] / bases[g], degree)) {
        coeffs[g] += signs[k] * *ratio;
        merged = true;
      }
    }
    if (!merged) {
      bases.push_back(radicands[k]);
      coeffs.emplace_back(signs[k]);
    }
  }
  bool any_radical = false;
  for (const Rational& c : coeffs) any_radical = any_radical || sgn(c) != 0;
  if (!any_radical) return sgn(constant);

  // 1 and the remaining radicals are linearly independent over the
  // rationals, so the sum is nonzero and bracketing terminates.
  for (unsigned long bits = 64; bits <= kMaxPrecisionBits; bits *= 2) {
    Rational lower = constant, upper = constant;
    Integer scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
    for (std::size_t g = 0; g < bases.size(); ++g) {
      if (sgn(coeffs[g]) == 0) continue;
      Integer floor_root = ScaledFloorRoot(bases[g], degree, bits);
      Rational lo(floor_root, scale), hi(floor_root + 1, scale);
      lo.canonicalize();
      hi.canonicalize();
      if (sgn(coeffs[g]) > 0) {
        lower += coeffs[g] * lo;
        upper += coeffs[g] * hi;
      } else {
        lower += coeffs[g] * hi;
        upper += coeffs[g] * lo;
      }
    }
    if (sgn(lower) > 0) return 1;
    if (sgn(upper) < 0) return -1;
  }
  throw Error(ErrorKind::kInternal, "radical comparison did not converge");
}

ObjectiveValue ObjectiveValue::Exact(Rational q) {
  ObjectiveValue v;
  v.rational_ = std::move(q);
  return v;
}

ObjectiveValue ObjectiveValue::WithRoot(Rational rational_part, int sign,
                                        Rational radicand, unsigned degree) {
  if (degree == 0) throw Error(ErrorKind::kInvalidArgument, "root degree 0");
  if (sgn(radicand) < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative radicand");
  }
  if (sign == 0 || sgn(radicand) == 0) return Exact(std::move(rational_part));
  if (auto exact = ExactRoot(radicand, degree)) {
    return Exact(rational_part + (sign > 0 ? *exact : Rational(-*exact)));
  }
  ObjectiveValue v;
  v.rational_ = std::move(rational_part);
  v.sign_ = sign > 0 ? 1 : -1;
  v.radicand_ = std::move(radicand);
  v.degree_ = degree;
  return v;
}

ObjectiveValue ObjectiveValue::scaled(const Radical& factor) const {
  if (sgn(factor.radicand) < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative scale factor");
  }
  if (auto f = ExactRoot(factor.radicand, factor.degree)) {
    if (is_rational()) return Exact(rational_ * *f);
    return WithRoot(rational_ * *f, sign_, radicand_ * PowRat(*f, degree_),
                    degree_);
  }
  if (is_rational()) {
    int s = sgn(rational_);
    return WithRoot(0, s, PowRat(Abs(rational_), factor.degree) * factor.radicand,
                    factor.degree);
  }
  if (sgn(rational_) == 0 && degree_ == factor.degree) {
    return WithRoot(0, sign_, radicand_ * factor.radicand, degree_);
  }
  throw Error(ErrorKind::kInvalidArgument,
              "cannot scale " + to_string() + " by " + factor.to_string());
}

double ObjectiveValue::approx() const {
  double v = rational_.get_d();
  if (sign_ != 0) {
    v += sign_ * std::pow(radicand_.get_d(), 1.0 / static_cast<double>(degree_));
  }
  return v;
}

std::string ObjectiveValue::to_string() const {
  if (sign_ == 0) return rational_.get_str();
  std::string root = RadicalString(radicand_, degree_);
  if (sgn(rational_) == 0) return (sign_ < 0 ? "-" : "") + root;
  return rational_.get_str() + (sign_ > 0 ? " + " : " - ") + root;
}

std::strong_ordering operator<=>(const ObjectiveValue& a,
                                 const ObjectiveValue& b) {
  if (a.sign_ != 0 && b.sign_ != 0 && a.degree_ != b.degree_) {
    throw Error(ErrorKind::kInvalidArgument,
                "comparing roots of different degrees");
  }
  const unsigned degree = a.sign_ != 0 ? a.degree_ : b.degree_;
  const int signs[2] = {a.sign_, -b.sign_};
  const Rational radicands[2] = {a.radicand_, b.radicand_};
  int s = SignOfRadicalSum(a.rational_ - b.rational_, signs, radicands, degree);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

Rational PowerSum(std::span<const Rational> u, unsigned p) {
  Rational s = 0;
  for (const Rational& x : u) s += PowRat(Abs(x), p);
  return s;
}

Rational AbsSum(std::span<const Rational> u) {
  Rational s = 0;
  for (const Rational& x : u) s += Abs(x);
  return s;
}

Rational AbsMax(std::span<const Rational> u) {
  Rational m = 0;
  for (const Rational& x : u) m = std::max(m, Abs(x));
  return m;
}

void RequireNonEmpty(std::span<const Rational> u) {
  if (u.empty()) throw Error(ErrorKind::kInvalidArgument, "empty image vector");
}

}  // namespace

ObjectiveOracle ObjectiveOracle::PNorm(PExponent p) {
  if (!p.infinite && p.value < 1) {
    throw Error(ErrorKind::kInvalidArgument, "p-norm requires p >= 1");
  }
  Evaluator eval = [p](std::span<const Rational> u) {
    RequireNonEmpty(u);
    if (p.infinite) return ObjectiveValue::Exact(AbsMax(u));
    if (p.value == 1) return ObjectiveValue::Exact(AbsSum(u));
    return ObjectiveValue::WithRoot(0, 1, PowerSum(u, p.value), p.value);
  };
  return ObjectiveOracle(ObjectiveKind::kPNorm, "pnorm:" + p.to_string(),
                         std::move(eval), p);
}

ObjectiveOracle ObjectiveOracle::SquaredTwoNorm() {
  return ObjectiveOracle(ObjectiveKind::kSquaredTwoNorm, "custom:squared-2norm",
                         [](std::span<const Rational> u) {
                           return ObjectiveValue::Exact(PowerSum(u, 2));
                         });
}

ObjectiveOracle ObjectiveOracle::Linear(RationalVector weights) {
  std::string name = "linear:";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    name += (i ? "," : "") + weights[i].get_str();
  }
  Evaluator eval = [w = std::move(weights)](std::span<const Rational> u) {
    if (u.size() != w.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "linear objective has " + std::to_string(w.size()) +
                      " weights for a " + std::to_string(u.size()) +
                      "-dimensional image");
    }
    return ObjectiveValue::Exact(Dot(std::span<const Rational>(w), u));
  };
  return ObjectiveOracle(ObjectiveKind::kLinear, std::move(name),
                         std::move(eval));
}

ObjectiveOracle ObjectiveOracle::MaxCoordinate() {
  return ObjectiveOracle(ObjectiveKind::kMaxCoordinate, "custom:max-coordinate",
                         [](std::span<const Rational> u) {
                           RequireNonEmpty(u);
                           return ObjectiveValue::Exact(
                               *std::max_element(u.begin(), u.end()));
                         });
}

ObjectiveOracle ObjectiveOracle::MinCoordinate() {
  return ObjectiveOracle(ObjectiveKind::kMinCoordinate, "custom:min-coordinate",
                         [](std::span<const Rational> u) {
                           RequireNonEmpty(u);
                           return ObjectiveValue::Exact(
                               *std::min_element(u.begin(), u.end()));
                         });
}

ObjectiveOracle ObjectiveOracle::L1MinusLp(PExponent p) {
  if (!p.infinite && p.value < 1) {
    throw Error(ErrorKind::kInvalidArgument, "l1-minus-lp requires p >= 1");
  }
  Evaluator eval = [p](std::span<const Rational> u) {
    RequireNonEmpty(u);
    Rational l1 = AbsSum(u);
    if (p.infinite) return ObjectiveValue::Exact(l1 - AbsMax(u));
    if (p.value == 1) return ObjectiveValue::Exact(0);
    return ObjectiveValue::WithRoot(l1, -1, PowerSum(u, p.value), p.value);
  };
  return ObjectiveOracle(ObjectiveKind::kL1MinusLp,
                         "l1-minus-lp:" + p.to_string(), std::move(eval));
}

ObjectiveOracle ObjectiveOracle::Custom(std::string name, Evaluator evaluator) {
  if (!evaluator) throw Error(ErrorKind::kInvalidArgument, "empty evaluator");
  return ObjectiveOracle(ObjectiveKind::kCustom, "custom:" + name,
                         std::move(evaluator));
}

ObjectiveValue ObjectiveOracle::evaluate(std::span<const Rational> u) const {
  return evaluator_(u);
}

ObjectiveValue ObjectiveOracle::evaluate(std::span<const Integer> u) const {
  RationalVector q = ToRational(u);
  return evaluator_(q);
}

std::strong_ordering ObjectiveOracle::compare(
    std::span<const Rational> u, std::span<const Rational> v) const {
  return evaluate(u) <=> evaluate(v);
}

std::strong_ordering ObjectiveOracle::compare(std::span<const Integer> u,
                                              std::span<const Integer> v) const {
  return evaluate(u) <=> evaluate(v);
}

ObjectiveOracle ObjectiveOracle::shifted(const Rational& offset) const {
  if (sgn(offset) == 0) return *this;
  Evaluator inner = evaluator_;
  Evaluator eval = [inner, offset](std::span<const Rational> u) {
    RationalVector moved(u.begin(), u.end());
    for (Rational& x : moved) x -= offset;
    return inner(moved);
  };
  return ObjectiveOracle(ObjectiveKind::kCustom,
                         "shift(" + name_ + "," + offset.get_str() + ")",
                         std::move(eval));
}

PExponent ParsePExponent(std::string_view text) {
  if (text == "inf" || text == "infinity") return PExponent::Infinity();
  Integer p = ParseInteger(text);
  if (p < 1 || p > 1000000) {
    throw Error(ErrorKind::kInvalidArgument,
                "p must be a positive integer or inf, got " + std::string(text));
  }
  return PExponent::Finite(static_cast<unsigned>(p.get_ui()));
}

ObjectiveOracle ParseObjective(std::string_view spec, std::size_t d) {
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view arg =
      colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);
  if (head == "pnorm") return ObjectiveOracle::PNorm(ParsePExponent(arg));
  if (head == "l1-minus-lp") {
    return ObjectiveOracle::L1MinusLp(ParsePExponent(arg));
  }
  if (head == "linear") {
    RationalVector w;
    if (arg.empty()) {
      w.assign(d, Rational(1));
    } else {
      for (const Integer& x : ParseIntegerList(arg)) w.emplace_back(x);
    }
    if (w.size() != d) {
      throw Error(ErrorKind::kInvalidArgument,
                  "linear objective needs " + std::to_string(d) + " weights");
    }
    return ObjectiveOracle::Linear(std::move(w));
  }
  std::string_view name = head == "custom" ? arg : spec;
  if (name == "max-coordinate") return ObjectiveOracle::MaxCoordinate();
  if (name == "min-coordinate") return ObjectiveOracle::MinCoordinate();
  if (name == "squared-2norm") return ObjectiveOracle::SquaredTwoNorm();
  if (name == "identity" || name == "negation") {
    if (d != 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(name) + " objective requires d = 1");
    }
    return ObjectiveOracle::Linear({Rational(name == "identity" ? 1 : -1)});
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown objective '" + std::string(spec) + "'");
}

std::size_t SampleRayConcavity(const ObjectiveOracle& f, std::size_t d,
                               std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  auto draw = [&](std::uint64_t bound) { return UniformBelow(rng, bound); };
  std::size_t violations = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector u(d), bigger(d), scaled(d);
    const Rational lambda(static_cast<long>(draw(11)), 10);
    for (std::size_t i = 0; i < d; ++i) {
      u[i] = Rational(static_cast<long>(draw(41)), static_cast<long>(1 + draw(4)));
      u[i].canonicalize();
      bigger[i] = u[i] + static_cast<long>(draw(5));
      scaled[i] = lambda * u[i];
    }
    const ObjectiveValue fu = f.evaluate(u);
    if (fu.scaled(Radical::Of(lambda)) > f.evaluate(scaled)) ++violations;
    if (fu > f.evaluate(bigger)) ++violations;
  }
  return violations;
}

}  // namespace nlco
