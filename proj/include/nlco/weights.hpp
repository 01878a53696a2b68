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

#ifndef NLCO_WEIGHTS_HPP_
#define NLCO_WEIGHTS_HPP_

#include <cstddef>
#include <vector>

#include "nlco/arith.hpp"
#include "nlco/objective.hpp"

namespace nlco {

// W = sum_k a_k * delta^k with small ("unary") layers delta^k and distinct
// positive multipliers a_k.
class GeneralizedUnaryWeights {
 public:
  GeneralizedUnaryWeights() = default;
  // Throws kInvariant when a_k <= 0, a_k repeat, or layer shapes differ.
  GeneralizedUnaryWeights(IntVector a, std::vector<IntMatrix> deltas);

  // The p = 1, a = (1) encoding of a dense matrix.
  static GeneralizedUnaryWeights Unary(IntMatrix w);

  std::size_t layers() const { return a_.size(); }
  std::size_t d() const { return deltas_.empty() ? 0 : deltas_.front().rows(); }
  std::size_t n() const { return deltas_.empty() ? 0 : deltas_.front().cols(); }
  const IntVector& a() const { return a_; }
  const std::vector<IntMatrix>& deltas() const { return deltas_; }

  // max |delta^k_ij|.
  Integer omega() const;

  bool operator==(const GeneralizedUnaryWeights&) const = default;

 private:
  IntVector a_;
  std::vector<IntMatrix> deltas_;
};

IntMatrix materialize(const GeneralizedUnaryWeights& w);

// Every feasible x is a nonnegative integer vector with 1.x <= beta.
struct FeasibleMeta {
  Integer beta = 0;
  std::size_t n = 0;

  bool operator==(const FeasibleMeta&) const = default;
};

inline constexpr std::size_t kDefaultGridCap = 1000000;

// All sum_k a_k * h^k with h^k in {-omega*beta, ..., omega*beta}^d, merged and
// sorted lexicographically. Contains Wx for every feasible x. Throws
// kCapExceeded when (2*omega*beta + 1)^(p*d) > cap.
std::vector<IntVector> candidate_image_grid(const GeneralizedUnaryWeights& w,
                                            const FeasibleMeta& meta,
                                            std::size_t cap = kDefaultGridCap);

struct ShiftedProblem {
  IntMatrix w;        // W + v * ones, entrywise nonnegative
  Integer v;          // max(0, -min W_ij)
  ObjectiveOracle f;  // u -> f(u - r * v * 1)
};

// For x with exactly r unit entries, shifted.f(shifted.w x) == f(W x).
ShiftedProblem nonneg_shift(const IntMatrix& w, const Integer& r,
                            const ObjectiveOracle& f);

// Lexicographic order on integer vectors.
bool LexLess(const IntVector& a, const IntVector& b);

}  // namespace nlco

#endif  // NLCO_WEIGHTS_HPP_
