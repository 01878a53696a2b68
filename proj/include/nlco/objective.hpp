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

#ifndef NLCO_OBJECTIVE_HPP_
#define NLCO_OBJECTIVE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "nlco/arith.hpp"

namespace nlco {

// radicand^(1/degree) with radicand >= 0 and degree >= 1.
struct Radical {
  Rational radicand = 1;
  unsigned degree = 1;

  static Radical Of(const Rational& q) { return {q, 1}; }
  double approx() const;
  std::string to_string() const;
  Radical operator/(const Rational& divisor) const;  // divisor > 0
};

// p in [1, infinity], integer when finite.
struct PExponent {
  unsigned value = 2;
  bool infinite = false;

  static PExponent Finite(unsigned p) { return {p, false}; }
  static PExponent Infinity() { return {0, true}; }
  std::string to_string() const;
  bool operator==(const PExponent&) const = default;
};

// An exact real of the form  rational + sign * radicand^(1/degree).
// Comparisons are exact: they bracket the roots with integer roots at growing
// precision, and resolve every tie algebraically before refining.
class ObjectiveValue {
 public:
  ObjectiveValue() = default;
  static ObjectiveValue Exact(Rational q);
  static ObjectiveValue WithRoot(Rational rational_part, int sign,
                                 Rational radicand, unsigned degree);

  const Rational& rational_part() const { return rational_; }
  int root_sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  unsigned degree() const { return degree_; }
  bool is_rational() const { return sign_ == 0; }

  // factor * value for factor >= 0. Supported when factor is rational, when
  // the value is rational, or when both are roots of the same degree and the
  // value has no rational part. Throws kInvalidArgument otherwise.
  ObjectiveValue scaled(const Radical& factor) const;

  double approx() const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const ObjectiveValue& a,
                                          const ObjectiveValue& b);
  friend bool operator==(const ObjectiveValue& a, const ObjectiveValue& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Rational rational_ = 0;
  int sign_ = 0;
  Rational radicand_ = 0;
  unsigned degree_ = 1;
};

// Exact sign of  alpha + sum_k signs[k] * radicands[k]^(1/degree).
int SignOfRadicalSum(const Rational& alpha, std::span<const int> signs,
                     std::span<const Rational> radicands, unsigned degree);

enum class ObjectiveKind {
  kPNorm,
  kSquaredTwoNorm,
  kLinear,
  kMaxCoordinate,
  kMinCoordinate,
  kL1MinusLp,
  kCustom,
};

// Comparison-oracle view of f: R^d -> R. Algorithms only ever call
// compare(); evaluate() exposes the exact value for reports and ratio checks.
class ObjectiveOracle {
 public:
  using Evaluator = std::function<ObjectiveValue(std::span<const Rational>)>;

  static ObjectiveOracle PNorm(PExponent p);
  static ObjectiveOracle SquaredTwoNorm();
  static ObjectiveOracle Linear(RationalVector weights);
  static ObjectiveOracle MaxCoordinate();
  static ObjectiveOracle MinCoordinate();
  static ObjectiveOracle L1MinusLp(PExponent p);
  static ObjectiveOracle Custom(std::string name, Evaluator evaluator);

  ObjectiveValue evaluate(std::span<const Rational> u) const;
  ObjectiveValue evaluate(std::span<const Integer> u) const;
  std::strong_ordering compare(std::span<const Rational> u,
                               std::span<const Rational> v) const;
  std::strong_ordering compare(std::span<const Integer> u,
                               std::span<const Integer> v) const;

  ObjectiveKind kind() const { return kind_; }
  // Set only for kPNorm.
  const std::optional<PExponent>& p() const { return p_; }
  const std::string& name() const { return name_; }

  // u -> f(u - offset * 1).
  ObjectiveOracle shifted(const Rational& offset) const;

 private:
  ObjectiveOracle(ObjectiveKind kind, std::string name, Evaluator evaluator,
                  std::optional<PExponent> p = std::nullopt)
      : kind_(kind), name_(std::move(name)), evaluator_(std::move(evaluator)),
        p_(p) {}

  ObjectiveKind kind_;
  std::string name_;
  Evaluator evaluator_;
  std::optional<PExponent> p_;
};

// Parses objective specifications:
//   pnorm:<p>  (p a positive integer or "inf")
//   linear, linear:<w1,w2,...>
//   l1-minus-lp:<p>
//   custom:<name> for name in {max-coordinate, min-coordinate, squared-2norm,
//                              identity, negation}
// `d` is the image dimension (used by "linear" without weights).
ObjectiveOracle ParseObjective(std::string_view spec, std::size_t d);

PExponent ParsePExponent(std::string_view text);

// Checks the ray-concavity lambda f(u) <= f(lambda u) and monotonicity
// f(u) <= f(u') for u <= u' on `samples` seeded nonnegative rational points.
// Returns the number of violations found.
std::size_t SampleRayConcavity(const ObjectiveOracle& f, std::size_t d,
                               std::size_t samples, std::uint64_t seed);

}  // namespace nlco

#endif  // NLCO_OBJECTIVE_HPP_
