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

// JSON instance files. Integers are decimal strings (plain JSON integers are
// accepted on input). Schema:
//
//   {"schema": "nlco-instance/1",
//    "feasible": {"type": "explicit", "n": 2, "beta": "2",
//                 "points": [["1", "0"], ["0", "1"]]}
//              | {"type": "matroid-pair", "m1": [[...]], "m2": [[...]]},
//    "weights": {"type": "dense", "matrix": [[...]]}
//             | {"type": "layers", "a": ["3", "5"], "deltas": [[[...]], ...]},
//    "objective": "pnorm:2", "sense": "max" | "min",
//    "primary_objective": ["1", "0"]}            (optional)

#ifndef NLCO_INSTANCE_IO_HPP_
#define NLCO_INSTANCE_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "nlco/harness.hpp"

namespace nlco {

inline constexpr const char* kInstanceSchema = "nlco-instance/1";
inline constexpr const char* kReportSchema = "nlco-report/1";

// Throws kParse (with line/column or the offending field) or kInvariant.
Instance parse_instance_text(std::string_view text);
Instance parse_instance(const std::string& path);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize_instance(const Instance& instance);

std::uint64_t Fnv1a64(std::string_view bytes);
std::string HexDigest(std::uint64_t value);  // 16 lowercase hex digits

}  // namespace nlco

#endif  // NLCO_INSTANCE_IO_HPP_
