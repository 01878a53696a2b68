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

#include "nlco/matroid.hpp"

#include <algorithm>

#include "nlco/lp.hpp"

namespace nlco {

namespace {

Integer Binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

VectorialMatroidPair VectorialMatroidPair::Unchecked(IntMatrix m1, IntMatrix m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) {
    throw Error(ErrorKind::kInvariant, "matroid matrices must share one shape");
  }
  if (m1.rows() == 0 || m1.cols() == 0) {
    throw Error(ErrorKind::kInvariant, "matroid matrices must be non-empty");
  }
  VectorialMatroidPair pair;
  pair.m1_ = std::move(m1);
  pair.m2_ = std::move(m2);
  return pair;
}

VectorialMatroidPair::VectorialMatroidPair(IntMatrix m1, IntMatrix m2,
                                           std::size_t base_cap) {
  *this = Unchecked(std::move(m1), std::move(m2));
  const std::size_t r1 = gaussian_rank(m1_);
  const std::size_t r2 = gaussian_rank(m2_);
  if (r1 != r2) {
    throw Error(ErrorKind::kInvariant,
                "common rank required: rank(M1) = " + std::to_string(r1) +
                    ", rank(M2) = " + std::to_string(r2));
  }
  if (r1 != r()) {
    throw Error(ErrorKind::kInvariant,
                "matroid matrices must have full row rank " +
                    std::to_string(r()) + ", got " + std::to_string(r1));
  }
  if (common_bases(*this, base_cap).empty()) {
    throw Error(ErrorKind::kInvariant, "no common base");
  }
}

Restriction restrict(const VectorialMatroidPair& pair,
                     std::span<const std::size_t> subset) {
  std::vector<std::size_t> cols(subset.begin(), subset.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.empty() || cols.back() >= pair.n()) {
    throw Error(ErrorKind::kInvalidArgument,
                "restriction needs a non-empty subset of the ground set");
  }
  return {VectorialMatroidPair::Unchecked(pair.m1().select_columns(cols),
                                          pair.m2().select_columns(cols)),
          std::move(cols)};
}

bool is_common_base(const VectorialMatroidPair& pair,
                    std::span<const std::size_t> subset) {
  if (subset.size() != pair.r()) return false;
  return sgn(bigint_det(pair.m1().select_columns(subset))) != 0 &&
         sgn(bigint_det(pair.m2().select_columns(subset))) != 0;
}

std::vector<std::vector<std::size_t>> common_bases(
    const VectorialMatroidPair& pair, std::size_t cap) {
  const std::size_t n = pair.n(), r = pair.r();
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  if (Binomial(n, r) > Integer(static_cast<unsigned long>(cap))) {
    throw Error(ErrorKind::kCapExceeded,
                "binomial(" + std::to_string(n) + ", " + std::to_string(r) +
                    ") subsets exceed the cap " + std::to_string(cap));
  }
  std::vector<std::size_t> subset(r);
  for (std::size_t i = 0; i < r; ++i) subset[i] = i;
  while (true) {
    if (is_common_base(pair, subset)) out.push_back(subset);
    // Next r-subset in lexicographic order.
    std::size_t i = r;
    while (i > 0 && subset[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t k = i; k < r; ++k) subset[k] = subset[k - 1] + 1;
  }
  return out;
}

IntVector CharacteristicVector(std::span<const std::size_t> subset,
                               std::size_t n) {
  IntVector x(n, Integer(0));
  for (std::size_t j : subset) x.at(j) = 1;
  return x;
}

}  // namespace nlco
