// Copyright 2026 The lcpnash Authors
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

// JSON instance documents. Rationals are written as strings ("3", "-2/5");
// JSON integers are accepted on input, floating literals are rejected.
//
//   { "m": 2,
//     "M": [["1", "0"], ["0", "1"]],
//     "q": ["-1", "-1"],
//     "d": ["1", "2"],        optional, defaults to all ones
//     "beta": "3" }           optional

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lcpnash/lcp.hpp"
#include "lcpnash/nash.hpp"
#include "lcpnash/rational.hpp"

namespace lcpnash {

struct InstanceDocument {
  Matrix M;
  Vector q;
  std::optional<Vector> d;
  std::optional<Rational> beta;

  std::size_t dim() const { return q.size(); }
  /// Throws CoveringVectorError when d has a nonpositive entry.
  ExtendedInstance instance() const;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

/// Throws ParseError carrying the 1-based line and column of the offending token.
InstanceDocument parse_document(std::string_view text);
/// Reads and parses a file; I/O failures become ParseError without a position.
InstanceDocument load_document(const std::string& path);

std::string serialize_document(const InstanceDocument& doc);

/// A covering vector file: either a bare array or an object with a "d" member.
Vector parse_covering(std::string_view text);
Vector load_covering(const std::string& path);

/// A game file: {"C": [[...]]} for a symmetric game, or {"A": [[...]], "B": [[...]]}
/// for a bimatrix game that is symmetrized.
SymmetricGame parse_game(std::string_view text);
SymmetricGame load_game(const std::string& path);

}  // namespace lcpnash
