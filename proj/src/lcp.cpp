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

#include "lcpnash/lcp.hpp"

#include <algorithm>

#include "lcpnash/errors.hpp"

namespace lcpnash {

LcpInstance::LcpInstance(Matrix m, Vector q) : m_(std::move(m)), q_(std::move(q)) {
  if (q_.empty()) throw ContractViolation("LCP dimension must be positive");
  if (m_.rows() != q_.size() || m_.cols() != q_.size()) {
    throw ContractViolation("M must be square with side " + std::to_string(q_.size()));
  }
}

Vector LcpInstance::slack(const Vector& z) const { return q_ + m_ * z; }

ExtendedInstance::ExtendedInstance(LcpInstance base, Vector d) : base_(std::move(base)), d_(std::move(d)) {
  if (d_.size() != base_.dim()) throw ContractViolation("covering vector has wrong dimension");
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (sgn(d_[i]) <= 0) {
      throw CoveringVectorError("covering vector entry " + std::to_string(i + 1) + " is not positive");
    }
  }
}

ExtendedInstance::ExtendedInstance(LcpInstance base) : base_(std::move(base)), d_(Vector::ones(base_.dim())) {}

Vector ExtendedInstance::slack(const Rational& z0, const Vector& z) const {
  return base_.q() + d_ * z0 + base_.M() * z;
}

// ---------------------------------------------------------------- Var

Var Var::complement() const {
  switch (kind) {
    case Kind::W: return z(index);
    case Kind::Z: return w(index);
    case Kind::Z0: return z0();
  }
  return *this;
}

std::size_t Var::column(std::size_t m) const {
  switch (kind) {
    case Kind::W: return index;
    case Kind::Z: return m + index;
    case Kind::Z0: return 2 * m;
  }
  return 0;
}

Var Var::from_column(std::size_t col, std::size_t m) {
  if (col < m) return w(col);
  if (col < 2 * m) return z(col - m);
  if (col == 2 * m) return z0();
  throw ContractViolation("column index out of range");
}

std::string Var::name() const {
  switch (kind) {
    case Kind::W: return "w" + std::to_string(index + 1);
    case Kind::Z: return "z" + std::to_string(index + 1);
    case Kind::Z0: return "z0";
  }
  return "?";
}

std::string to_string(const Basis& basis) {
  std::string s = "{";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ", ";
    s += basis[i].name();
  }
  return s + "}";
}

Matrix extended_columns(const ExtendedInstance& ext) {
  const std::size_t m = ext.dim();
  Matrix a(m, 2 * m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    a(i, i) = 1;
    for (std::size_t j = 0; j < m; ++j) a(i, m + j) = -ext.M()(i, j);
    a(i, 2 * m) = -ext.d()[i];
  }
  return a;
}

// ---------------------------------------------------------------- points

const Rational& ExtendedPoint::value(Var v) const {
  switch (v.kind) {
    case Var::Kind::W: return w[v.index];
    case Var::Kind::Z: return z[v.index];
    case Var::Kind::Z0: return z0;
  }
  return z0;
}

std::vector<Var> ExtendedPoint::support() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (sgn(w[i]) > 0) out.push_back(Var::w(i));
  for (std::size_t i = 0; i < z.size(); ++i)
    if (sgn(z[i]) > 0) out.push_back(Var::z(i));
  if (sgn(z0) > 0) out.push_back(Var::z0());
  return out;
}

ExtendedPoint make_extended_point(const ExtendedInstance& ext, Rational z0, Vector z) {
  if (z.size() != ext.dim()) throw ContractViolation("point has wrong dimension");
  Vector w = ext.slack(z0, z);
  return {std::move(z0), std::move(z), std::move(w)};
}

SecondaryDirection normalize_direction(const Rational& u0, const Vector& u) {
  if (sgn(u0) < 0) throw ContractViolation("direction has negative z0 component");
  if (sgn(u0) > 0) return {1, u / u0};
  const Rational s = u.sum();
  if (sgn(s) <= 0) throw ContractViolation("type-0 direction with e^T u <= 0 cannot be normalized");
  return {0, u / s};
}

// ---------------------------------------------------------------- verifiers

bool is_solution(const LcpInstance& inst, const Vector& z) {
  if (z.size() != inst.dim()) throw ContractViolation("is_solution: dimension mismatch");
  const Vector w = inst.slack(z);
  return z.is_nonnegative() && w.is_nonnegative() && sgn(dot(z, w)) == 0;
}

bool is_elcp_point(const ExtendedInstance& ext, const ExtendedPoint& p) {
  if (p.z.size() != ext.dim() || p.w.size() != ext.dim()) return false;
  if (!(p.w == ext.slack(p.z0, p.z))) return false;
  return sgn(p.z0) >= 0 && p.z.is_nonnegative() && p.w.is_nonnegative() && sgn(dot(p.z, p.w)) == 0;
}

bool is_vertex(const ExtendedInstance& ext, const ExtendedPoint& p, const Basis& basis) {
  if (!is_elcp_point(ext, p)) return false;
  const std::size_t m = ext.dim();
  const Matrix cols = extended_columns(ext);
  std::vector<std::size_t> support_cols;
  for (Var v : p.support()) support_cols.push_back(v.column(m));
  if (!columns_independent(cols, support_cols)) return false;
  if (basis.empty()) return true;

  if (basis.size() != m) return false;
  std::vector<std::size_t> basis_cols;
  for (Var v : basis) basis_cols.push_back(v.column(m));
  std::sort(basis_cols.begin(), basis_cols.end());
  if (std::adjacent_find(basis_cols.begin(), basis_cols.end()) != basis_cols.end()) return false;
  if (!columns_independent(cols, basis_cols)) return false;
  return std::all_of(support_cols.begin(), support_cols.end(),
                     [&](std::size_t c) { return std::binary_search(basis_cols.begin(), basis_cols.end(), c); });
}

bool is_secondary_direction(const ExtendedInstance& ext, int u0, const Vector& u) {
  if (u.size() != ext.dim()) throw ContractViolation("direction has wrong dimension");
  if (u0 != 0 && u0 != 1) return false;
  if (!u.is_nonnegative() || u.is_zero()) return false;
  const Vector r = ext.d() * Rational(u0) + ext.M() * u;
  if (!r.is_nonnegative() || sgn(dot(u, r)) != 0) return false;
  return u0 == 1 || u.sum() == 1;
}

bool is_secondary_ray(const ExtendedInstance& ext, const SecondaryRay& ray) {
  if (ray.vertex.z.size() != ext.dim() || ray.direction.u.size() != ext.dim()) return false;
  if (!is_vertex(ext, ray.vertex, ray.basis)) return false;
  const auto& dir = ray.direction;
  if (!is_secondary_direction(ext, dir.u0, dir.u)) return false;
  const Vector edge_slack = ext.d() * Rational(dir.u0) + ext.M() * dir.u;
  return sgn(dot(ray.vertex.z, edge_slack)) == 0 && sgn(dot(dir.u, ray.vertex.w)) == 0;
}

std::optional<SecondaryRay> primary_ray(const ExtendedInstance& ext) {
  const std::size_t m = ext.dim();
  std::optional<std::size_t> leave;
  Rational z0 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational t = -ext.q()[i] / ext.d()[i];
    // ties go to the larger index, matching the lexicographic rule of the pivot engine
    if (sgn(t) > 0 && (!leave || t >= z0)) {
      z0 = t;
      leave = i;
    }
  }
  if (!leave) return std::nullopt;

  SecondaryRay ray;
  ray.vertex = make_extended_point(ext, z0, Vector::zeros(m));
  for (std::size_t i = 0; i < m; ++i)
    if (i != *leave) ray.basis.push_back(Var::w(i));
  ray.basis.push_back(Var::z0());
  ray.direction = {1, Vector::zeros(m)};
  return ray;
}

}  // namespace lcpnash
