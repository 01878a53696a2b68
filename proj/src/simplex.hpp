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

#ifndef NLCO_SRC_SIMPLEX_HPP_
#define NLCO_SRC_SIMPLEX_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "nlco/arith.hpp"
#include "nlco/lp.hpp"

namespace nlco::internal {

// max objective . y  s.t.  rows * y = rhs,  y >= 0.
struct StandardFormLP {
  std::size_t num_vars = 0;
  std::vector<RationalVector> rows;
  RationalVector rhs;
  RationalVector objective;
  // Per row, optionally a column that is the unit vector of that row (for
  // instance a slack); used as the starting basis when rhs >= 0.
  std::vector<std::optional<std::size_t>> unit_column;
};

struct StandardFormResult {
  LPStatus status = LPStatus::kInfeasible;
  RationalVector y;
  Rational value;
};

// Two-phase primal simplex with Bland's rule; exact and cycle-free.
StandardFormResult SolveStandardForm(const StandardFormLP& lp);

// Null-space vector of the given rows (nullopt when the rows have full column
// rank). Deterministic: the free column with the smallest index is set to 1.
std::optional<RationalVector> NullSpaceVector(
    const std::vector<RationalVector>& rows, std::size_t num_cols);

}  // namespace nlco::internal

#endif  // NLCO_SRC_SIMPLEX_HPP_
