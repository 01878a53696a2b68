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

#ifndef NLCO_ERROR_HPP_
#define NLCO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nlco {

enum class ErrorKind {
  kInvalidArgument,   // malformed call: dimension mismatch, bad parameter
  kParse,             // input text could not be parsed
  kInvariant,         // parsed input violates a domain invariant
  kInfeasible,        // empty feasible set, empty fiber, no common base
  kCapExceeded,       // size guard tripped (grid, digits, enumeration)
  kCutBudget,         // cutting-plane loop ran out of cuts
  kOracleContract,    // separation oracle returned a non-violated cut
  kPrecondition,      // caller-guaranteed precondition found to be false
  kRandomizedFailure, // randomized algorithm produced no common base
  kVerifyMismatch,    // algorithm disagrees with its brute-force oracle
  kInternal,
};

const char* ToString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nlco

#endif  // NLCO_ERROR_HPP_
