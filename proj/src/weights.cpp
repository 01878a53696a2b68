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

#include "nlco/weights.hpp"

#include <algorithm>
#include <set>

namespace nlco {

GeneralizedUnaryWeights::GeneralizedUnaryWeights(IntVector a,
                                                 std::vector<IntMatrix> deltas)
    : a_(std::move(a)), deltas_(std::move(deltas)) {
  if (a_.empty()) {
    throw Error(ErrorKind::kInvariant, "weights need at least one layer");
  }
  if (a_.size() != deltas_.size()) {
    throw Error(ErrorKind::kInvariant,
                "weights: " + std::to_string(a_.size()) + " multipliers for " +
                    std::to_string(deltas_.size()) + " layers");
  }
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (sgn(a_[k]) <= 0) {
      throw Error(ErrorKind::kInvariant, "a_k must be positive");
    }
    for (std::size_t l = 0; l < k; ++l) {
      if (a_[l] == a_[k]) {
        throw Error(ErrorKind::kInvariant, "a_k must be pairwise distinct");
      }
    }
    if (deltas_[k].rows() != deltas_[0].rows() ||
        deltas_[k].cols() != deltas_[0].cols()) {
      throw Error(ErrorKind::kInvariant, "all layers must share one shape");
    }
  }
  if (deltas_[0].rows() == 0 || deltas_[0].cols() == 0) {
    throw Error(ErrorKind::kInvariant, "weight layers must be non-empty");
  }
}

GeneralizedUnaryWeights GeneralizedUnaryWeights::Unary(IntMatrix w) {
  std::vector<IntMatrix> layers;
  layers.push_back(std::move(w));
  return GeneralizedUnaryWeights({Integer(1)}, std::move(layers));
}

Integer GeneralizedUnaryWeights::omega() const {
  Integer omega = 0;
  for (const IntMatrix& delta : deltas_)
    for (std::size_t i = 0; i < delta.rows(); ++i)
      for (const Integer& x : delta.row(i)) omega = std::max(omega, Integer(abs(x)));
  return omega;
}

IntMatrix materialize(const GeneralizedUnaryWeights& w) {
  IntMatrix out(w.d(), w.n(), Integer(0));
  for (std::size_t k = 0; k < w.layers(); ++k) {
    const IntMatrix& delta = w.deltas()[k];
    for (std::size_t i = 0; i < w.d(); ++i)
      for (std::size_t j = 0; j < w.n(); ++j) out(i, j) += w.a()[k] * delta(i, j);
  }
  return out;
}

bool LexLess(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<IntVector> candidate_image_grid(const GeneralizedUnaryWeights& w,
                                            const FeasibleMeta& meta,
                                            std::size_t cap) {
  if (sgn(meta.beta) < 0) {
    throw Error(ErrorKind::kInvariant, "beta must be nonnegative");
  }
  const Integer radius = w.omega() * meta.beta;
  const Integer side = 2 * radius + 1;
  Integer count;
  mpz_pow_ui(count.get_mpz_t(), side.get_mpz_t(), w.layers() * w.d());
  if (count > Integer(static_cast<unsigned long>(cap))) {
    throw Error(ErrorKind::kCapExceeded,
                "candidate grid has " + count.get_str() +
                    " points, cap is " + std::to_string(cap));
  }

  // Coordinates decouple: u_i = sum_k a_k h^k_i, so the grid is S^d with
  // S = {sum_k a_k h_k : |h_k| <= omega * beta}.
  std::set<Integer> values{Integer(0)};
  for (const Integer& a : w.a()) {
    std::set<Integer> next;
    for (const Integer& base : values)
      for (Integer h = -radius; h <= radius; ++h) next.insert(base + a * h);
    values = std::move(next);
  }
  const std::vector<Integer> axis(values.begin(), values.end());

  std::vector<IntVector> grid;
  std::vector<std::size_t> index(w.d(), 0);
  while (true) {
    IntVector u(w.d());
    for (std::size_t i = 0; i < w.d(); ++i) u[i] = axis[index[i]];
    grid.push_back(std::move(u));
    std::size_t i = w.d();
    while (i > 0 && ++index[i - 1] == axis.size()) index[--i] = 0;
    if (i == 0) break;
  }
  return grid;
}

ShiftedProblem nonneg_shift(const IntMatrix& w, const Integer& r,
                            const ObjectiveOracle& f) {
  if (sgn(r) <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "support size r must be positive");
  }
  Integer min_entry = 0;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (const Integer& x : w.row(i)) min_entry = std::min(min_entry, x);
  Integer v = -min_entry;
  IntMatrix shifted = w;
  if (sgn(v) > 0) {
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (Integer& x : shifted.row(i)) x += v;
  }
  return {std::move(shifted), v, f.shifted(Rational(r * v))};
}

}  // namespace nlco
