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

// Mapping symmetric equilibria of the constructed games back to LCP objects.

#pragma once

#include <optional>
#include <variant>

#include "lcpnash/lcp.hpp"
#include "lcpnash/nash.hpp"
#include "lcpnash/reduction.hpp"

namespace lcpnash {

enum class ClassTag { OriginalSolution, SecondaryRayFound, Type1Direction, Type0Direction };

const char* to_string(ClassTag tag);

using ClassPayload = std::variant<Vector, SecondaryRay, SecondaryDirection>;

struct EquilibriumClassification {
  ClassTag tag = ClassTag::OriginalSolution;
  ClassPayload payload;
};

/**
 * Classifies an equilibrium x = (z0, z, t) of the full game of `red` against
 * the original instance `ext`. Every payload is checked with the lcp-core
 * verifiers before it is returned.
 *
 *   t > 0, z0 = 0   solution D^{-1} z / t
 *   t > 0, z0 > 0   secondary ray through (z0, z) / t
 *   t = 0           type-1 direction u / (u0 + tau), tau = -x^T C x
 *
 * Throws ContractViolation when x is not an equilibrium of red.game.
 */
EquilibriumClassification classify_equilibrium(const ExtendedInstance& ext, const FullReduction& red,
                                               const MixedProfile& x);

/// Same for the basic game C(q, M) with covering vector e. Here t = 0 with
/// zero expected cost yields a type-0 direction.
EquilibriumClassification classify_basic_equilibrium(const LcpInstance& inst, const MixedProfile& x);

/**
 * Recovers the secondary ray of ELCP(e, q, M) (q, M taken from aug.original)
 * that passes through the point (z0, z) with z0 > 0. Throws DegeneracyError
 * when the point is not interior to an unbounded complementary edge.
 */
SecondaryRay extract_ray_from_point(const AugmentedInstance& aug, const Rational& z0, const Vector& z);

using Resolution = std::variant<Vector, SecondaryRay>;

/**
 * For u in SOL(e, M) \ {0} with complementary supports a = {u > 0},
 * b = {M u + e > 0} partitioning the indices and M_aa nonsingular, returns
 * the solution z_a = -M_aa^{-1} q_a when it is feasible, otherwise the type-1
 * ray of ELCP(e, q, M) along (1, u). Throws DegenerateDirectionError when the
 * partition or nonsingularity fails, ContractViolation when u is not a
 * nonzero member of SOL(e, M).
 */
Resolution resolve_type1_direction(const LcpInstance& inst, const Vector& u);

struct Perturbation {
  ExtendedInstance instance;
  std::optional<Rational> epsilon;  ///< empty when d was left unchanged
};

inline constexpr int kMaxPerturbationHalvings = 64;

/**
 * d + (eps, eps^2, ..., eps^m) for the largest eps = 2^-k making every
 * nonzero vertex of SOL(d, M) nondegenerate. Throws SizeError above the
 * oracle cap and DegeneracyError when no k <= kMaxPerturbationHalvings works.
 */
Perturbation perturb_covering(const ExtendedInstance& ext);

}  // namespace lcpnash
