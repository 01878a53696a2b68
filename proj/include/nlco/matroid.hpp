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

#ifndef NLCO_MATROID_HPP_
#define NLCO_MATROID_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "nlco/arith.hpp"

namespace nlco {

inline constexpr std::size_t kDefaultBaseCap = 1000000;

// Two r x n integer matrices whose column matroids share the ground set
// {0, ..., n-1}.
class VectorialMatroidPair {
 public:
  VectorialMatroidPair() = default;

  // Validates equal shapes, rank(M1) = rank(M2) = r (the row count) and the
  // existence of a common base (brute force, at most `base_cap` subsets).
  // Throws kInvariant with the failing condition.
  VectorialMatroidPair(IntMatrix m1, IntMatrix m2,
                       std::size_t base_cap = kDefaultBaseCap);

  // Shape checks only; used for restrictions.
  static VectorialMatroidPair Unchecked(IntMatrix m1, IntMatrix m2);

  const IntMatrix& m1() const { return m1_; }
  const IntMatrix& m2() const { return m2_; }
  std::size_t r() const { return m1_.rows(); }
  std::size_t n() const { return m1_.cols(); }

  bool operator==(const VectorialMatroidPair&) const = default;

 private:
  IntMatrix m1_;
  IntMatrix m2_;
};

struct Restriction {
  VectorialMatroidPair pair;       // columns `columns` of both matrices
  std::vector<std::size_t> columns;  // index map back to the ground set
};

// Column restriction to `subset` (sorted into ground-set order; ranks are not
// revalidated). Throws kInvalidArgument for an empty or out-of-range subset.
Restriction restrict(const VectorialMatroidPair& pair,
                     std::span<const std::size_t> subset);

// Sorted r-subsets B with det(M1[:, B]) != 0 and det(M2[:, B]) != 0, in
// lexicographic order. Throws kCapExceeded when binomial(n, r) > cap.
std::vector<std::vector<std::size_t>> common_bases(
    const VectorialMatroidPair& pair, std::size_t cap = kDefaultBaseCap);

// True iff `subset` is a common base.
bool is_common_base(const VectorialMatroidPair& pair,
                    std::span<const std::size_t> subset);

// 0/1 characteristic vector of a subset of {0, ..., n-1}.
IntVector CharacteristicVector(std::span<const std::size_t> subset,
                               std::size_t n);

}  // namespace nlco

#endif  // NLCO_MATROID_HPP_
