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

#ifndef NLCO_ARITH_HPP_
#define NLCO_ARITH_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlco/error.hpp"

namespace nlco {

// Arbitrary-precision integers and rationals. mpq_class keeps every value in
// lowest terms with a positive denominator after each arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Builds a matrix from row vectors; all rows must share `cols` entries.
  static Matrix FromRows(const std::vector<std::vector<T>>& rows,
                         std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw Error(ErrorKind::kInvalidArgument, "ragged matrix rows");
      }
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }
  static Matrix FromRows(const std::vector<std::vector<T>>& rows) {
    return FromRows(rows, rows.empty() ? 0 : rows.front().size());
  }
  static Matrix Identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) {
    return std::span<T>(data_.data() + i * cols_, cols_);
  }
  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_.data() + i * cols_, cols_);
  }
  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return std::vector<T>(r.begin(), r.end());
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) {
      throw Error(ErrorKind::kInvalidArgument, "row length mismatch");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Columns `indices` in the given order.
  Matrix select_columns(std::span<const std::size_t> indices) const {
    Matrix out(rows_, indices.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < indices.size(); ++k)
        out(i, k) = (*this)(i, indices[k]);
    return out;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalVector ToRational(std::span<const Integer> v);
RationalMatrix ToRational(const IntMatrix& m);

// Exact integer vector if every entry has denominator 1.
bool IsIntegral(std::span<const Rational> v);
IntVector ToInteger(std::span<const Rational> v);

template <typename A, typename B>
Rational Dot(std::span<const A> a, std::span<const B> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * Rational(b[i]);
  return s;
}

// W * x for an integer matrix and a rational or integer vector.
RationalVector Multiply(const IntMatrix& w, std::span<const Rational> x);
IntVector Multiply(const IntMatrix& w, std::span<const Integer> x);

// Parses a decimal integer ("-12") or rational ("3/4"); throws kParse.
Integer ParseInteger(std::string_view text);
Rational ParseRational(std::string_view text);

std::string ToString(const Integer& v);
std::string ToString(const Rational& v);
std::string ToString(std::span<const Integer> v);  // "(1, -2, 3)"
std::string ToString(std::span<const Rational> v);

// Comma separated integers, e.g. "1,-2,3".
IntVector ParseIntegerList(std::string_view csv);

}  // namespace nlco

#endif  // NLCO_ARITH_HPP_
