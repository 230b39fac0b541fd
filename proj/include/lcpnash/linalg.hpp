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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lcpnash/rational.hpp"

namespace lcpnash {

/**
 * Solves A x = b exactly by Gauss-Jordan elimination. Returns std::nullopt
 * when A is singular. Throws ContractViolation unless A is square with
 * side b.size().
 */
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Square diagonal matrix with D_ii = d_i. Throws CoveringVectorError when
/// some d_i <= 0.
Matrix diag_of(const Vector& d);

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

RowEchelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
Rational determinant(const Matrix& a);

/// Basis of { x : A x = 0 }, one vector per free column of rref(A).
std::vector<Vector> nullspace(const Matrix& a);

/// Columns `cols` of A linearly independent.
bool columns_independent(const Matrix& a, std::span<const std::size_t> cols);

/**
 * Extends an independent column set to a set of rank(A) independent columns,
 * scanning candidates in ascending order. Returns the sorted result.
 */
std::vector<std::size_t> complete_basis(const Matrix& a, std::vector<std::size_t> cols);

/**
 * All basic feasible solutions (vertices) of { x >= 0 : A x = b }, deduplicated
 * and sorted. Redundant equality rows are dropped first; an inconsistent system
 * yields an empty set.
 */
std::vector<Vector> enumerate_bfs(const Matrix& a, const Vector& b);

/// Calls fn once per k-subset of {0..n-1} in lexicographic order. fn returns
/// false to stop early.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& fn);

/// n choose k, saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace lcpnash
