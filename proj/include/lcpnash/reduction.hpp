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

// Matrix constructions that turn an LCP into a symmetric bimatrix game.
//
//   basic game        C(q, M) = [[M, q + e], [0, 1]]
//   augmented LCP     M~ = [[1, -e^T], [e, M]],  q~ = (beta; q)
//   diagonal scaling  q' = D^{-1} q,  M' = D^{-1} M D^{-1},  z' = D z
//   full game         C(q~', M~') for the scaled instance, i.e.
//                     [[1, -e^T, beta + 1], [e, M', q' + e], [0, 0, 1]]

#pragma once

#include <optional>
#include <utility>

#include "lcpnash/lcp.hpp"
#include "lcpnash/nash.hpp"

namespace lcpnash {

SymmetricGame build_game_basic(const LcpInstance& inst);

enum class BetaMode {
  Auto,         ///< enumeration for m <= 8, otherwise the determinant bound
  Enumeration,  ///< 1 + max e^T z over all basic solutions
  Bound,        ///< 1 + m (m + 1) H with H a Hadamard bound on Cramer components
};

/**
 * A beta with beta > e^T z for every basic solution (feasible or not) of
 * w - e z0 - M z = q.
 */
Rational compute_beta(const LcpInstance& inst, BetaMode mode = BetaMode::Auto);

struct AugmentedInstance {
  Rational beta;
  LcpInstance original;
  LcpInstance augmented;  ///< (q~, M~)

  const Vector& q_tilde() const { return augmented.q(); }
  const Matrix& m_tilde() const { return augmented.M(); }
};

AugmentedInstance build_augmented(const LcpInstance& inst, const Rational& beta);

struct ScaledInstance {
  Vector d;
  LcpInstance scaled;  ///< (D^{-1} q, D^{-1} M D^{-1})
};

ScaledInstance scale_instance(const ExtendedInstance& ext);

/// (z0, z) -> (z0, D z)
std::pair<Rational, Vector> scale_point(const ScaledInstance& s, const Rational& z0, const Vector& z);
/// (z0, z') -> (z0, D^{-1} z')
std::pair<Rational, Vector> unscale_point(const ScaledInstance& s, const Rational& z0, const Vector& z_scaled);
/// Maps a direction of ELCP(e, q', M') to ELCP(d, q, M), renormalizing type 0.
SecondaryDirection unscale_direction(const ScaledInstance& s, const SecondaryDirection& dir);
/// Maps a secondary ray of ELCP(e, q', M') to one of ELCP(d, q, M).
SecondaryRay unscale_ray(const ScaledInstance& s, const ExtendedInstance& original, const SecondaryRay& ray);

/// Full cost matrix. `beta` must be a valid bound for the scaled instance.
SymmetricGame build_game_full(const ExtendedInstance& ext, const Rational& beta);

/** Everything the full pipeline builds from (d, q, M). */
struct FullReduction {
  ScaledInstance scaled;
  AugmentedInstance augmented;  ///< of the scaled instance
  SymmetricGame game;
};

/// Scales, picks beta (computed on the scaled instance unless given), augments, builds the game.
FullReduction reduce_full(const ExtendedInstance& ext, std::optional<Rational> beta = std::nullopt,
                          BetaMode mode = BetaMode::Auto);

/// z in SOL(-e, C) \ {0}  ->  z / e^T z in SNE(C). Requires C > 0.
MixedProfile lcp_solution_to_equilibrium(const SymmetricGame& game, const Vector& z);
/// x in SNE(C)  ->  x / x^T C x in SOL(-e, C). Requires C > 0.
Vector equilibrium_to_lcp_solution(const SymmetricGame& game, const MixedProfile& x);

}  // namespace lcpnash
