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

#include "lcpnash/reduction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lcpnash/errors.hpp"
#include "lcpnash/linalg.hpp"

namespace lcpnash {

SymmetricGame build_game_basic(const LcpInstance& inst) {
  const std::size_t m = inst.dim();
  Matrix c(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) c(i, j) = inst.M()(i, j);
    c(i, m) = inst.q()[i] + 1;
  }
  c(m, m) = 1;
  return SymmetricGame(std::move(c));
}

namespace {

Rational beta_by_enumeration(const LcpInstance& inst) {
  const std::size_t m = inst.dim();
  const Matrix cols = extended_columns(ExtendedInstance(inst));
  std::vector<std::size_t> rows(m);
  std::iota(rows.begin(), rows.end(), 0);
  Rational best = 0;  // the slack basis gives z = 0
  for_each_combination(2 * m + 1, m, [&](std::span<const std::size_t> basis) {
    auto sol = solve_linear(cols.submatrix(rows, basis), inst.q());
    if (!sol) return true;
    Rational total = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Var v = Var::from_column(basis[k], m);
      if (v.kind == Var::Kind::Z) total += (*sol)[k];
    }
    if (total > best) best = total;
    return true;
  });
  return best + 1;
}

mpz_class ceil_sqrt(const mpz_class& x) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) ++r;
  return r;
}

Rational beta_by_bound(const LcpInstance& inst) {
  const std::size_t m = inst.dim();
  const Matrix cols = extended_columns(ExtendedInstance(inst));
  // integer rows of [I | -e | -M | q]
  std::vector<std::vector<mpz_class>> rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols.cols(); ++c) l = lcm(l, cols(i, c).get_den());
    l = lcm(l, inst.q()[i].get_den());
    for (std::size_t c = 0; c < cols.cols(); ++c) rows[i].push_back(mpz_class(cols(i, c) * l));
    rows[i].push_back(mpz_class(inst.q()[i] * l));
  }
  std::vector<mpz_class> norms;
  for (std::size_t c = 0; c < rows[0].size(); ++c) {
    mpz_class sq = 0;
    for (std::size_t i = 0; i < m; ++i) sq += rows[i][c] * rows[i][c];
    norms.push_back(ceil_sqrt(sq));
  }
  std::sort(norms.begin(), norms.end(), std::greater<>());
  mpz_class h = 1;
  for (std::size_t k = 0; k < m; ++k) h *= norms[k];
  return Rational(1 + mpz_class(m * (m + 1)) * h);
}

}  // namespace

Rational compute_beta(const LcpInstance& inst, BetaMode mode) {
  if (mode == BetaMode::Auto) mode = inst.dim() <= 8 ? BetaMode::Enumeration : BetaMode::Bound;
  return mode == BetaMode::Enumeration ? beta_by_enumeration(inst) : beta_by_bound(inst);
}

AugmentedInstance build_augmented(const LcpInstance& inst, const Rational& beta) {
  const std::size_t m = inst.dim();
  Matrix mt(m + 1, m + 1);
  Vector qt(m + 1);
  mt(0, 0) = 1;
  qt[0] = beta;
  for (std::size_t i = 0; i < m; ++i) {
    mt(0, i + 1) = -1;
    mt(i + 1, 0) = 1;
    for (std::size_t j = 0; j < m; ++j) mt(i + 1, j + 1) = inst.M()(i, j);
    qt[i + 1] = inst.q()[i];
  }
  return {beta, inst, LcpInstance(std::move(mt), std::move(qt))};
}

ScaledInstance scale_instance(const ExtendedInstance& ext) {
  const std::size_t m = ext.dim();
  const Vector& d = ext.d();
  Matrix ms(m, m);
  Vector qs(m);
  for (std::size_t i = 0; i < m; ++i) {
    qs[i] = ext.q()[i] / d[i];
    for (std::size_t j = 0; j < m; ++j) ms(i, j) = ext.M()(i, j) / (d[i] * d[j]);
  }
  return {d, LcpInstance(std::move(ms), std::move(qs))};
}

std::pair<Rational, Vector> scale_point(const ScaledInstance& s, const Rational& z0, const Vector& z) {
  return {z0, hadamard(s.d, z)};
}

std::pair<Rational, Vector> unscale_point(const ScaledInstance& s, const Rational& z0, const Vector& z_scaled) {
  if (z_scaled.size() != s.d.size()) throw ContractViolation("unscale_point: dimension mismatch");
  Vector z(z_scaled.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = z_scaled[i] / s.d[i];
  return {z0, std::move(z)};
}

SecondaryDirection unscale_direction(const ScaledInstance& s, const SecondaryDirection& dir) {
  auto [u0, u] = unscale_point(s, Rational(dir.u0), dir.u);
  return normalize_direction(u0, u);
}

SecondaryRay unscale_ray(const ScaledInstance& s, const ExtendedInstance& original, const SecondaryRay& ray) {
  auto [z0, z] = unscale_point(s, ray.vertex.z0, ray.vertex.z);
  return {make_extended_point(original, z0, std::move(z)), ray.basis, unscale_direction(s, ray.direction)};
}

SymmetricGame build_game_full(const ExtendedInstance& ext, const Rational& beta) {
  const ScaledInstance s = scale_instance(ext);
  const std::size_t m = ext.dim();
  const Matrix& ms = s.scaled.M();
  const Vector& qs = s.scaled.q();
  Matrix c(m + 2, m + 2);
  c(0, 0) = 1;
  c(0, m + 1) = beta + 1;
  for (std::size_t i = 0; i < m; ++i) {
    c(0, i + 1) = -1;
    c(i + 1, 0) = 1;
    for (std::size_t j = 0; j < m; ++j) c(i + 1, j + 1) = ms(i, j);
    c(i + 1, m + 1) = qs[i] + 1;
  }
  c(m + 1, m + 1) = 1;
  return SymmetricGame(std::move(c));
}

FullReduction reduce_full(const ExtendedInstance& ext, std::optional<Rational> beta, BetaMode mode) {
  ScaledInstance scaled = scale_instance(ext);
  const Rational b = beta ? *beta : compute_beta(scaled.scaled, mode);
  AugmentedInstance aug = build_augmented(scaled.scaled, b);
  SymmetricGame game = build_game_full(ext, b);
  return {std::move(scaled), std::move(aug), std::move(game)};
}

MixedProfile lcp_solution_to_equilibrium(const SymmetricGame& game, const Vector& z) {
  if (!game.cost().is_positive()) throw PositivityError("cost matrix must be strictly positive");
  const Rational total = z.sum();
  if (z.is_zero() || sgn(total) == 0) throw ContractViolation("z = 0 has no equilibrium image");
  return make_profile(game, z / total);
}

Vector equilibrium_to_lcp_solution(const SymmetricGame& game, const MixedProfile& x) {
  if (!game.cost().is_positive()) throw PositivityError("cost matrix must be strictly positive");
  if (sgn(x.value) == 0) throw ContractViolation("equilibrium with zero expected cost");
  return x.x / x.value;
}

}  // namespace lcpnash
