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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lcpnash/lcp.hpp"

namespace lcpnash {

/**
 * Dense exact tableau of w - d z0 - M z = q with respect to a basis B:
 * stores B^{-1} [I | -M | -d] and B^{-1} q. Because the w block of the
 * original system is the identity, the w columns of the tableau are B^{-1},
 * which is what the lexicographic ratio test reads.
 */
class Tableau {
 public:
  /// Slack basis {w_1, ..., w_m}.
  explicit Tableau(const ExtendedInstance& ext);

  std::size_t dim() const { return rhs_.size(); }

  /// Basic variable of each row.
  const std::vector<Var>& basic() const { return basic_; }
  Basis sorted_basis() const;
  std::optional<std::size_t> row_of(Var v) const;

  /// B^{-1} A_v
  Vector column(Var v) const;
  /// Values of the basic variables, row by row.
  const Vector& rhs() const { return rhs_; }
  /// Basic solution as an ELCP point (nonbasic variables at zero).
  ExtendedPoint point() const;

  /// Row r of B^{-1}.
  Vector inverse_row(std::size_t r) const;

  /// Gauss-Jordan pivot on (row, entering). Returns the variable that left.
  Var pivot(std::size_t row, Var entering);

 private:
  std::size_t m_;
  Matrix body_;  // m x (2m + 1)
  Vector rhs_;
  std::vector<Var> basic_;
};

/**
 * Edge direction when `entering` increases from the current basis and the
 * ratio test finds no blocking row, normalized as a secondary direction.
 * Throws ContractViolation if some row would block.
 */
SecondaryDirection direction_from_unbounded_column(const Tableau& tableau, Var entering);

enum class LemkeStatus { Solved, Ray, Trivial };

struct PivotStep {
  Var entering;
  Var leaving;
  ExtendedPoint vertex_after;
  Basis basis_after;
};

struct LemkeOutcome {
  LemkeStatus status = LemkeStatus::Trivial;
  Vector solution;                 ///< Solved / Trivial
  std::optional<SecondaryRay> ray;  ///< Ray
  std::vector<PivotStep> path;      ///< first step is z0 entering at the primary-ray vertex
};

struct LemkeOptions {
  /// Safety cap on pivots; defaults to C(2m+1, m), the number of candidate bases.
  std::optional<std::size_t> max_pivots;
};

/**
 * Lemke(d) with covering vector d. Starts on the primary ray, follows almost-complementary
 * pivots, and ends at a solution (z0 leaves) or a secondary ray. Degenerate
 * ratio ties are broken lexicographically on (B^{-1} q, B^{-1}); z0 is
 * preferred whenever it ties for the minimum ratio.
 */
LemkeOutcome lemke_solve(const ExtendedInstance& ext, const LemkeOptions& options = {});

}  // namespace lcpnash
