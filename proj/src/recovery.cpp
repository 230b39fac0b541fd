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

#include "lcpnash/recovery.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcpnash/errors.hpp"
#include "lcpnash/linalg.hpp"
#include "lcpnash/oracle.hpp"

namespace lcpnash {

const char* to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::OriginalSolution: return "OriginalSolution";
    case ClassTag::SecondaryRayFound: return "SecondaryRayFound";
    case ClassTag::Type1Direction: return "Type1Direction";
    case ClassTag::Type0Direction: return "Type0Direction";
  }
  return "?";
}

namespace {

Vector slice(const Vector& v, std::size_t from, std::size_t count) {
  Vector out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = v[from + i];
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("recovered payload failed verification: ") + what);
}

EquilibriumClassification direction_from_cone_point(const ExtendedInstance& ext, const ScaledInstance* s,
                                                    const Rational& scale, const Vector& u_raw) {
  if (sgn(scale) > 0) {
    Vector u = u_raw / scale;
    SecondaryDirection dir{1, s ? unscale_point(*s, 0, u).second : u};
    require(is_secondary_direction(ext, 1, dir.u), "type-1 direction");
    return {ClassTag::Type1Direction, dir};
  }
  SecondaryDirection dir = s ? unscale_direction(*s, {0, u_raw}) : normalize_direction(0, u_raw);
  require(is_secondary_direction(ext, 0, dir.u), "type-0 direction");
  return {ClassTag::Type0Direction, dir};
}

}  // namespace

EquilibriumClassification classify_equilibrium(const ExtendedInstance& ext, const FullReduction& red,
                                               const MixedProfile& x) {
  const std::size_t m = ext.dim();
  if (x.x.size() != m + 2 || !is_sne(red.game, x)) {
    throw ContractViolation("classify_equilibrium: profile is not an equilibrium of the full game");
  }
  const Rational& t = x.x[m + 1];
  const Vector y = slice(x.x, 0, m + 1);

  if (sgn(t) > 0) {
    const Rational z0 = y[0] / t;
    const Vector z = slice(y, 1, m) / t;
    if (sgn(z0) == 0) {
      Vector sol = unscale_point(red.scaled, 0, z).second;
      require(is_solution(ext.base(), sol), "solution");
      return {ClassTag::OriginalSolution, std::move(sol)};
    }
    SecondaryRay ray = unscale_ray(red.scaled, ext, extract_ray_from_point(red.augmented, z0, z));
    require(is_secondary_ray(ext, ray), "secondary ray");
    return {ClassTag::SecondaryRayFound, std::move(ray)};
  }

  // y in SOL(e tau, M~) with tau = -value; its tail transfers to SOL(e, M').
  const Rational tau = -x.value;
  return direction_from_cone_point(ext, &red.scaled, y[0] + tau, slice(y, 1, m));
}

EquilibriumClassification classify_basic_equilibrium(const LcpInstance& inst, const MixedProfile& x) {
  const std::size_t m = inst.dim();
  const SymmetricGame game = build_game_basic(inst);
  if (x.x.size() != m + 1 || !is_sne(game, x)) {
    throw ContractViolation("classify_basic_equilibrium: profile is not an equilibrium of C(q, M)");
  }
  const Rational& t = x.x[m];
  const Vector y = slice(x.x, 0, m);
  if (sgn(t) > 0) {
    Vector sol = y / t;
    require(is_solution(inst, sol), "solution");
    return {ClassTag::OriginalSolution, std::move(sol)};
  }
  return direction_from_cone_point(ExtendedInstance(inst), nullptr, -x.value, y);
}

SecondaryRay extract_ray_from_point(const AugmentedInstance& aug, const Rational& z0, const Vector& z) {
  const ExtendedInstance ext(aug.original);
  const std::size_t m = ext.dim();
  if (sgn(z0) <= 0) throw ContractViolation("extract_ray_from_point needs z0 > 0");
  const ExtendedPoint p = make_extended_point(ext, z0, z);
  if (!is_elcp_point(ext, p)) throw ContractViolation("extract_ray_from_point: point is not in ELCP(e, q, M)");

  const Matrix a = extended_columns(ext);
  std::vector<std::size_t> rows(m), support;
  for (std::size_t i = 0; i < m; ++i) rows[i] = i;
  for (const Var& v : p.support()) support.push_back(v.column(m));
  std::sort(support.begin(), support.end());

  const auto null = nullspace(a.submatrix(rows, support));
  if (null.size() != 1) {
    throw DegeneracyError("point (" + to_string(z0) + ", " + to_string(z) + ") lies on a face of dimension " +
                          std::to_string(null.size()) + ", not on an edge");
  }
  // Pick the sign in which the edge is unbounded.
  Vector dir = null.front();
  const bool forward_free = dir.is_nonnegative();
  const bool backward_free = (-dir).is_nonnegative();
  if (!forward_free && !backward_free) throw DegeneracyError("point lies on a bounded edge");
  if (!forward_free) dir = -dir;

  Vector values(support.size());
  for (std::size_t k = 0; k < support.size(); ++k) values[k] = p.value(Var::from_column(support[k], m));
  std::optional<Rational> lambda;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (sgn(dir[k]) <= 0) continue;
    const Rational r = values[k] / dir[k];
    if (!lambda || r < *lambda) lambda = r;
  }
  if (!lambda || sgn(*lambda) == 0) throw DegeneracyError("no vertex behind the point");

  Rational u0 = 0;
  Vector u(m), vz(m);
  Rational vz0 = 0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const Var v = Var::from_column(support[k], m);
    const Rational at_vertex = values[k] - *lambda * dir[k];
    if (v.kind == Var::Kind::Z0) {
      u0 = dir[k];
      vz0 = at_vertex;
    } else if (v.kind == Var::Kind::Z) {
      u[v.index] = dir[k];
      vz[v.index] = at_vertex;
    }
  }
  SecondaryRay ray;
  ray.vertex = make_extended_point(ext, vz0, vz);
  std::vector<std::size_t> vertex_cols;
  for (const Var& v : ray.vertex.support()) vertex_cols.push_back(v.column(m));
  if (!columns_independent(a, vertex_cols)) throw DegeneracyError("edge endpoint is not a vertex");
  for (std::size_t c : complete_basis(a, vertex_cols)) ray.basis.push_back(Var::from_column(c, m));
  ray.direction = normalize_direction(u0, u);
  if (!is_secondary_ray(ext, ray)) throw DegeneracyError("edge through the point is not a secondary ray");
  return ray;
}

Resolution resolve_type1_direction(const LcpInstance& inst, const Vector& u) {
  const std::size_t m = inst.dim();
  const LcpInstance covering(inst.M(), Vector::ones(m));
  if (u.size() != m || u.is_zero() || !is_solution(covering, u)) {
    throw ContractViolation("resolve_type1_direction: u must be a nonzero member of SOL(e, M)");
  }
  const Vector v = covering.slack(u);
  std::vector<std::size_t> alpha;
  for (std::size_t i = 0; i < m; ++i) {
    const bool up = sgn(u[i]) > 0;
    if (up == (sgn(v[i]) > 0)) throw DegenerateDirectionError("supports of u and Mu + e do not partition the indices");
    if (up) alpha.push_back(i);
  }
  Vector q_alpha(alpha.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) q_alpha[k] = inst.q()[alpha[k]];
  const auto sol = solve_linear(inst.M().submatrix(alpha, alpha), q_alpha);
  if (!sol) throw DegenerateDirectionError("principal block M_aa is singular");

  Vector z_hat(m);
  for (std::size_t k = 0; k < alpha.size(); ++k) z_hat[alpha[k]] = -(*sol)[k];
  const Vector w_hat = inst.slack(z_hat);
  if (z_hat.is_nonnegative() && w_hat.is_nonnegative()) return z_hat;

  Rational lambda = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(u[i]) > 0 && sgn(z_hat[i]) < 0) lambda = std::max(lambda, Rational(-z_hat[i] / u[i]));
    if (sgn(v[i]) > 0 && sgn(w_hat[i]) < 0) lambda = std::max(lambda, Rational(-w_hat[i] / v[i]));
  }
  const ExtendedInstance ext(inst);
  SecondaryRay ray;
  ray.vertex = make_extended_point(ext, lambda, z_hat + lambda * u);
  const Matrix a = extended_columns(ext);
  std::vector<std::size_t> cols;
  for (const Var& var : ray.vertex.support()) cols.push_back(var.column(m));
  if (columns_independent(a, cols))
    for (std::size_t c : complete_basis(a, cols)) ray.basis.push_back(Var::from_column(c, m));
  ray.direction = {1, u};
  require(is_secondary_ray(ext, ray), "resolved type-1 ray");
  return ray;
}

Perturbation perturb_covering(const ExtendedInstance& ext) {
  if (covering_solutions_nondegenerate(ext)) return {ext, std::nullopt};
  const std::size_t m = ext.dim();
  Rational eps = 1;
  for (int k = 1; k <= kMaxPerturbationHalvings; ++k) {
    eps /= 2;
    Vector d = ext.d();
    Rational power = 1;
    for (std::size_t i = 0; i < m; ++i) {
      power *= eps;
      d[i] += power;
    }
    ExtendedInstance candidate(ext.base(), std::move(d));
    if (covering_solutions_nondegenerate(candidate)) return {std::move(candidate), eps};
  }
  throw DegeneracyError("no covering perturbation up to 2^-" + std::to_string(kMaxPerturbationHalvings) +
                        " removes the degeneracy");
}

}  // namespace lcpnash
