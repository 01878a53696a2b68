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

#include "nlco/arith.hpp"

#include <cctype>

namespace nlco {

const char* ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kInvariant: return "invariant violation";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kCapExceeded: return "cap exceeded";
    case ErrorKind::kCutBudget: return "cut budget exhausted";
    case ErrorKind::kOracleContract: return "oracle contract breach";
    case ErrorKind::kPrecondition: return "precondition violated";
    case ErrorKind::kRandomizedFailure: return "randomized failure";
    case ErrorKind::kVerifyMismatch: return "oracle mismatch";
    case ErrorKind::kInternal: return "internal error";
  }
  return "unknown";
}

RationalVector ToRational(std::span<const Integer> v) {
  return RationalVector(v.begin(), v.end());
}

RationalMatrix ToRational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

bool IsIntegral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

IntVector ToInteger(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const Rational& q : v) {
    if (q.get_den() != 1) {
      throw Error(ErrorKind::kPrecondition,
                  "non-integral value " + ToString(q));
    }
    out.push_back(q.get_num());
  }
  return out;
}

RationalVector Multiply(const IntMatrix& w, std::span<const Rational> x) {
  if (w.cols() != x.size()) {
    throw Error(ErrorKind::kInvalidArgument, "matrix-vector size mismatch");
  }
  RationalVector out(w.rows(), Rational(0));
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (sgn(w(i, j)) != 0 && sgn(x[j]) != 0) out[i] += w(i, j) * x[j];
  return out;
}

IntVector Multiply(const IntMatrix& w, std::span<const Integer> x) {
  if (w.cols() != x.size()) {
    throw Error(ErrorKind::kInvalidArgument, "matrix-vector size mismatch");
  }
  IntVector out(w.rows(), Integer(0));
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) out[i] += w(i, j) * x[j];
  return out;
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool IsDecimalInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

}  // namespace

Integer ParseInteger(std::string_view text) {
  std::string_view s = Trim(text);
  if (!IsDecimalInteger(s)) {
    throw Error(ErrorKind::kParse,
                "expected decimal integer, got '" + std::string(text) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Rational ParseRational(std::string_view text) {
  std::string_view s = Trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(s));
  Integer num = ParseInteger(s.substr(0, slash));
  Integer den = ParseInteger(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::kParse, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string ToString(const Integer& v) { return v.get_str(); }
std::string ToString(const Rational& v) { return v.get_str(); }

std::string ToString(std::span<const Integer> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

std::string ToString(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

IntVector ParseIntegerList(std::string_view csv) {
  IntVector out;
  std::string_view rest = Trim(csv);
  if (rest.empty()) return out;
  while (true) {
    auto comma = rest.find(',');
    out.push_back(ParseInteger(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace nlco
