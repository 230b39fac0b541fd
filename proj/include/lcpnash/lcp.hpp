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

// Problem instances and exact verifiers.
//
// LCP(q, M):        find z >= 0 with w = q + M z >= 0 and z^T w = 0.
// ELCP(d, q, M):    pairs (z0, z) >= 0 with w = q + d z0 + M z >= 0 and
//                   z^T w = 0, for a covering vector d > 0.
//
// The polyhedral part of ELCP is written as the equality system
//
//     w - d z0 - M z = q,    (w, z, z0) >= 0,
//
// whose columns [I | -M | -d] are addressed through Var.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcpnash/linalg.hpp"
#include "lcpnash/rational.hpp"

namespace lcpnash {

class LcpInstance {
 public:
  /// Throws ContractViolation unless M is square with side q.size() >= 1.
  LcpInstance(Matrix m, Vector q);

  std::size_t dim() const { return q_.size(); }
  const Matrix& M() const { return m_; }
  const Vector& q() const { return q_; }

  /// q + M z
  Vector slack(const Vector& z) const;

 private:
  Matrix m_;
  Vector q_;
};

class ExtendedInstance {
 public:
  /// Throws CoveringVectorError unless d > 0, ContractViolation on size.
  ExtendedInstance(LcpInstance base, Vector d);
  /// Covering vector e.
  explicit ExtendedInstance(LcpInstance base);

  std::size_t dim() const { return base_.dim(); }
  const LcpInstance& base() const { return base_; }
  const Matrix& M() const { return base_.M(); }
  const Vector& q() const { return base_.q(); }
  const Vector& d() const { return d_; }

  /// q + d z0 + M z
  Vector slack(const Rational& z0, const Vector& z) const;

 private:
  LcpInstance base_;
  Vector d_;
};

/** A variable of the extended system: w_i, z_i (0-based index) or z0. */
struct Var {
  enum class Kind : unsigned char { W, Z, Z0 };
  Kind kind = Kind::W;
  std::size_t index = 0;

  static Var w(std::size_t i) { return {Kind::W, i}; }
  static Var z(std::size_t i) { return {Kind::Z, i}; }
  static Var z0() { return {Kind::Z0, 0}; }

  /// w_i <-> z_i; z0 has no complement and maps to itself.
  Var complement() const;

  /// Column position in [I | -M | -d] for dimension m.
  std::size_t column(std::size_t m) const;
  static Var from_column(std::size_t col, std::size_t m);

  /// "w1", "z3", "z0" (1-based for w/z).
  std::string name() const;

  friend auto operator<=>(const Var&, const Var&) = default;
};

/// Sorted set of m basic variables.
using Basis = std::vector<Var>;

std::string to_string(const Basis& basis);

/// [I | -M | -d]
Matrix extended_columns(const ExtendedInstance& ext);

struct ExtendedPoint {
  Rational z0;
  Vector z;
  Vector w;  ///< q + d z0 + M z

  const Rational& value(Var v) const;
  /// Variables with a strictly positive value.
  std::vector<Var> support() const;
  std::size_t positive_count() const { return support().size(); }
};

ExtendedPoint make_extended_point(const ExtendedInstance& ext, Rational z0, Vector z);

struct SecondaryDirection {
  int u0 = 0;  ///< 0 or 1
  Vector u;
};

enum class RayType { Type0, Type1 };

inline RayType ray_type(const SecondaryDirection& d) { return d.u0 == 0 ? RayType::Type0 : RayType::Type1; }

struct SecondaryRay {
  ExtendedPoint vertex;
  Basis basis;  ///< certificate; may be empty, then only the support is checked
  SecondaryDirection direction;

  RayType type() const { return ray_type(direction); }
};

/**
 * Scales a raw edge direction: u0 > 0 becomes u0 = 1, u0 = 0 gets e^T u = 1.
 * Throws ContractViolation for negative or fractional-unnormalizable input
 * (u0 < 0, u0 = 0 with e^T u <= 0).
 */
SecondaryDirection normalize_direction(const Rational& u0, const Vector& u);

bool is_solution(const LcpInstance& inst, const Vector& z);

/// (z0, z) with cached w is a member of ELCP(d, q, M).
bool is_elcp_point(const ExtendedInstance& ext, const ExtendedPoint& p);

/**
 * p is a vertex of the ELCP polyhedron: an ELCP point whose support columns
 * are linearly independent. When `basis` is nonempty it must also be a valid
 * certificate: m independent columns covering the support.
 */
bool is_vertex(const ExtendedInstance& ext, const ExtendedPoint& p, const Basis& basis = {});

bool is_secondary_direction(const ExtendedInstance& ext, int u0, const Vector& u);
bool is_secondary_ray(const ExtendedInstance& ext, const SecondaryRay& ray);

/**
 * Starting ray of Lemke(d): z = 0, z0 = max_i(-q_i/d_i), direction (1, 0).
 * Returns std::nullopt when q >= 0 (z = 0 already solves the problem).
 */
std::optional<SecondaryRay> primary_ray(const ExtendedInstance& ext);

}  // namespace lcpnash
