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

#include "simplex.hpp"

#include <limits>

namespace nlco::internal {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau. Each row holds the column coefficients followed by the
// right-hand side. The z-row stores -(reduced cost) per column and the current
// objective value in its last entry, so a column may enter while its z-row
// entry is negative.
class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, std::vector<std::size_t> basis,
          std::size_t num_cols)
      : rows_(std::move(rows)),
        basis_(std::move(basis)),
        num_cols_(num_cols),
        zrow_(num_cols + 1, Rational(0)) {}

  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& rhs(std::size_t i) const { return rows_[i][num_cols_]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& value() const { return zrow_[num_cols_]; }

  // Installs `costs` (maximization) and prices out the basic columns.
  void SetObjective(const RationalVector& costs) {
    for (std::size_t j = 0; j < num_cols_; ++j) zrow_[j] = -costs[j];
    zrow_[num_cols_] = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational factor = zrow_[basis_[i]];
      if (sgn(factor) == 0) continue;
      for (std::size_t j = 0; j <= num_cols_; ++j) {
        if (sgn(rows_[i][j]) != 0) zrow_[j] -= factor * rows_[i][j];
      }
    }
  }

  // Runs Bland's rule over columns [0, limit). Returns false when unbounded.
  bool Optimize(std::size_t limit) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(zrow_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][num_cols_] / rows_[i][enter];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(std::size_t r, std::size_t q) {
    RationalVector& pivot_row = rows_[r];
    const Rational inv = 1 / pivot_row[q];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j <= num_cols_; ++j) {
      if (sgn(pivot_row[j]) != 0) {
        pivot_row[j] *= inv;
        support.push_back(j);
      }
    }
    auto eliminate = [&](RationalVector& row) {
      if (sgn(row[q]) == 0) return;
      const Rational factor = row[q];
      for (std::size_t j : support) row[j] -= factor * pivot_row[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(zrow_);
    basis_[r] = q;
  }

  void EraseRow(std::size_t i) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

 private:
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
  std::size_t num_cols_;
  RationalVector zrow_;
};

}  // namespace

StandardFormResult SolveStandardForm(const StandardFormLP& lp) {
  const std::size_t n = lp.num_vars;
  const std::size_t m = lp.rows.size();
  if (lp.rhs.size() != m || lp.objective.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "standard form size mismatch");
  }

  // Decide the starting basis: a usable unit column, else an artificial.
  std::vector<std::size_t> basis(m, kNone);
  std::vector<bool> negate(m, false);
  std::size_t num_artificial = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rows[i].size() != n) {
      throw Error(ErrorKind::kInvalidArgument, "standard form row length");
    }
    negate[i] = sgn(lp.rhs[i]) < 0;
    if (!negate[i] && i < lp.unit_column.size() && lp.unit_column[i]) {
      basis[i] = *lp.unit_column[i];
    } else {
      basis[i] = n + num_artificial++;
    }
  }

  const std::size_t cols = n + num_artificial;
  std::vector<RationalVector> rows(m, RationalVector(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = negate[i] ? -lp.rows[i][j] : lp.rows[i][j];
    }
    rows[i][cols] = negate[i] ? -lp.rhs[i] : lp.rhs[i];
    if (basis[i] >= n) rows[i][basis[i]] = 1;
  }
  Tableau tableau(std::move(rows), basis, cols);

  StandardFormResult result;
  if (num_artificial > 0) {
    RationalVector phase1(cols, Rational(0));
    for (std::size_t j = n; j < cols; ++j) phase1[j] = -1;
    tableau.SetObjective(phase1);
    tableau.Optimize(cols);  // bounded above by 0
    if (sgn(tableau.value()) < 0) {
      result.status = LPStatus::kInfeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = tableau.num_rows(); i-- > 0;) {
      if (tableau.basis()[i] < n) continue;
      std::size_t replacement = kNone;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(tableau.at(i, j)) != 0) {
          replacement = j;
          break;
        }
      }
      if (replacement == kNone) {
        tableau.EraseRow(i);
      } else {
        tableau.Pivot(i, replacement);
      }
    }
  }

  RationalVector costs(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) costs[j] = lp.objective[j];
  tableau.SetObjective(costs);
  if (!tableau.Optimize(n)) {
    result.status = LPStatus::kUnbounded;
    return result;
  }
  result.status = LPStatus::kOptimal;
  result.y.assign(n, Rational(0));
  for (std::size_t i = 0; i < tableau.num_rows(); ++i) {
    result.y[tableau.basis()[i]] = tableau.rhs(i);
  }
  result.value = tableau.value();
  return result;
}

std::optional<RationalVector> NullSpaceVector(
    const std::vector<RationalVector>& rows, std::size_t num_cols) {
  std::vector<RationalVector> m = rows;
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < num_cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < num_cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < num_cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  if (r == num_cols) return std::nullopt;
  std::vector<bool> is_pivot(num_cols, false);
  for (std::size_t c : pivot_col_of_row) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  RationalVector v(num_cols, Rational(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < r; ++i) v[pivot_col_of_row[i]] = -m[i][free_col];
  return v;
}

}  // namespace nlco::internal
