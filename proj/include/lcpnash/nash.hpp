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

// Symmetric bimatrix games in cost form. Both players pay C; a symmetric
// equilibrium x satisfies C x >= e (x^T C x), x >= 0, e^T x = 1.

#pragma once

#include <cstddef>
#include <vector>

#include "lcpnash/rational.hpp"

namespace lcpnash {

class SymmetricGame {
 public:
  /// Throws ContractViolation unless C is square and nonempty.
  explicit SymmetricGame(Matrix cost);

  std::size_t size() const { return cost_.rows(); }
  const Matrix& cost() const { return cost_; }

  friend bool operator==(const SymmetricGame& a, const SymmetricGame& b) { return a.cost_ == b.cost_; }

 private:
  Matrix cost_;
};

/** A mixed strategy on the simplex together with its expected cost x^T C x. */
struct MixedProfile {
  Vector x;
  Rational value;
};

/// Throws ContractViolation if x has the wrong size or is off the simplex.
MixedProfile make_profile(const SymmetricGame& game, Vector x);

bool is_sne(const SymmetricGame& game, const Vector& x);
bool is_sne(const SymmetricGame& game, const MixedProfile& profile);

struct Equilibrium {
  MixedProfile profile;
  /// false when the point is a vertex of a positive-dimensional equilibrium
  /// piece (found through a singular support system).
  bool isolated = true;
};

struct SupportEnumerationOptions {
  std::size_t max_strategies = 12;
  /// Worker threads over supports; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/**
 * All symmetric equilibria by support enumeration. Each nonempty support S
 * gives the square system
 *
 *     (C_i - C_s) x = 0   for i in S \ {s}      (s = first index of S)
 *     (C_j - C_s) x = t_j for j not in S, t_j >= 0
 *     e^T x = 1,           x_S >= 0, x_{not S} = 0
 *
 * in (x_S, t). A nonsingular system contributes its unique solution when
 * feasible; a singular one contributes every vertex of its feasible polytope.
 * The result is deduplicated and sorted lexicographically by x, identical for
 * every thread count. Throws SizeError when the game exceeds max_strategies.
 */
std::vector<Equilibrium> enumerate_sne(const SymmetricGame& game, const SupportEnumerationOptions& options = {});

/// Cost matrix [[0, A], [B^T, 0]] of side rows+cols. A and B must share a
/// shape (ContractViolation) and be strictly positive (PositivityError).
SymmetricGame symmetrize(const Matrix& a, const Matrix& b);

}  // namespace lcpnash
