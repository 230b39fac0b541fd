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

// Brute-force ground truth for small instances. Nothing here pivots a
// tableau: every basis is solved from scratch, so results stay independent of
// the Lemke engine they audit.

#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "lcpnash/lcp.hpp"

namespace lcpnash {

inline constexpr std::size_t kSkeletonMaxDim = 5;
inline constexpr std::size_t kSolutionMaxDim = 12;

struct SkeletonVertex {
  ExtendedPoint point;
  std::vector<Basis> bases;  ///< every feasible basis with this basic solution
  bool complementary = false;
};

/// Moving from `from_basis` by raising `entering` until `leaving` hits zero.
struct SkeletonEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Basis from_basis;
  Basis to_basis;
  Var entering;
  Var leaving;
};

struct SkeletonRay {
  std::size_t vertex = 0;
  Basis basis;
  Var entering;
  /// (u0, u) scaled so that u0 = 1 when u0 > 0, otherwise e^T u = 1. The
  /// primary ray has u = 0 and u0 = 1.
  SecondaryDirection direction;
  bool complementary = false;  ///< z^T w = 0 along the whole ray
};

/** Vertices, edges and rays of { w - d z0 - M z = q, (w, z, z0) >= 0 }. */
struct PolyhedronSkeleton {
  std::vector<SkeletonVertex> vertices;  ///< sorted by (z0, z)
  std::vector<SkeletonEdge> edges;
  std::vector<SkeletonRay> rays;
  /// every feasible basis has all basic variables strictly positive
  bool nondegenerate = true;

  std::optional<std::size_t> find_vertex(const Rational& z0, const Vector& z) const;
};

/// Throws SizeError when m > kSkeletonMaxDim.
PolyhedronSkeleton enumerate_skeleton(const ExtendedInstance& ext);

/// Endpoint of the almost-complementary path from the primary ray, found by
/// walking skeleton edges. Requires a nondegenerate skeleton and q not >= 0.
using LemkeEndpoint = std::variant<Vector, SecondaryRay>;
LemkeEndpoint walk_lemke_graph(const ExtendedInstance& ext, const PolyhedronSkeleton& skeleton);

struct SolutionSet {
  std::vector<Vector> points;  ///< isolated solutions and vertices of solution pieces
  /// some complementary piece is unbounded or has more than one vertex
  bool degenerate = false;
};

/**
 * SOL(q, M) by complementary supports: for every index set a, the vertices of
 * { z_a >= 0, z_rest = 0, (q + M z)_a = 0, (q + M z)_rest >= 0 }.
 * Throws SizeError when m > kSolutionMaxDim.
 */
SolutionSet enumerate_solutions(const LcpInstance& inst);

/// Same pieces intersected with e^T z = 1: vertices of the normalized nonzero
/// part of SOL(q, M). Used for the cone SOL(0, M).
SolutionSet enumerate_normalized_solutions(const LcpInstance& inst);

struct DirectionSet {
  std::vector<SecondaryDirection> type0;  ///< vertices of { u in SOL(0, M), e^T u = 1 }
  std::vector<SecondaryDirection> type1;  ///< (1, u) for nonzero vertices u of SOL(d, M)
  bool degenerate = false;
};

DirectionSet enumerate_directions(const ExtendedInstance& ext);

/// Every nonzero vertex u of SOL(d, M) has complementary supports partitioning
/// {1..m} with a nonsingular principal block, and no piece is degenerate.
bool covering_solutions_nondegenerate(const ExtendedInstance& ext);

/// All principal minors positive. Exhaustive; intended for m <= 12.
bool is_p_matrix(const Matrix& m);

}  // namespace lcpnash
