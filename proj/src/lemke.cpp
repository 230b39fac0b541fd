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

#include "lcpnash/lemke.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lcpnash/errors.hpp"

namespace lcpnash {

Tableau::Tableau(const ExtendedInstance& ext)
    : m_(ext.dim()), body_(extended_columns(ext)), rhs_(ext.q()), basic_(ext.dim()) {
  for (std::size_t i = 0; i < m_; ++i) basic_[i] = Var::w(i);
}

Basis Tableau::sorted_basis() const {
  Basis b = basic_;
  std::sort(b.begin(), b.end());
  return b;
}

std::optional<std::size_t> Tableau::row_of(Var v) const {
  auto it = std::find(basic_.begin(), basic_.end(), v);
  if (it == basic_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basic_.begin());
}

Vector Tableau::column(Var v) const { return body_.col(v.column(m_)); }

Vector Tableau::inverse_row(std::size_t r) const {
  Vector out(m_);
  for (std::size_t c = 0; c < m_; ++c) out[c] = body_(r, c);
  return out;
}

ExtendedPoint Tableau::point() const {
  ExtendedPoint p{0, Vector::zeros(m_), Vector::zeros(m_)};
  for (std::size_t r = 0; r < m_; ++r) {
    const Var v = basic_[r];
    switch (v.kind) {
      case Var::Kind::W: p.w[v.index] = rhs_[r]; break;
      case Var::Kind::Z: p.z[v.index] = rhs_[r]; break;
      case Var::Kind::Z0: p.z0 = rhs_[r]; break;
    }
  }
  return p;
}

Var Tableau::pivot(std::size_t row, Var entering) {
  const std::size_t pc = entering.column(m_);
  const Rational piv = body_(row, pc);
  if (sgn(piv) == 0) throw ContractViolation("pivot on a zero entry");
  const Rational inv = 1 / piv;
  for (std::size_t c = 0; c < body_.cols(); ++c) body_(row, c) *= inv;
  rhs_[row] *= inv;
  for (std::size_t r = 0; r < m_; ++r) {
    if (r == row || sgn(body_(r, pc)) == 0) continue;
    const Rational f = body_(r, pc);
    for (std::size_t c = 0; c < body_.cols(); ++c) body_(r, c) -= f * body_(row, c);
    rhs_[r] -= f * rhs_[row];
  }
  const Var leaving = basic_[row];
  basic_[row] = entering;
  return leaving;
}

SecondaryDirection direction_from_unbounded_column(const Tableau& tableau, Var entering) {
  const std::size_t m = tableau.dim();
  if (tableau.row_of(entering)) throw ContractViolation("entering variable is already basic");
  const Vector col = tableau.column(entering);
  // Increasing the entering variable by 1 moves basic row r by -col[r].
  Rational u0 = entering.kind == Var::Kind::Z0 ? 1 : 0;
  Vector u(m);
  if (entering.kind == Var::Kind::Z) u[entering.index] = 1;
  for (std::size_t r = 0; r < m; ++r) {
    if (sgn(col[r]) > 0) throw ContractViolation("ratio test is blocked in row " + std::to_string(r));
    const Var v = tableau.basic()[r];
    if (v.kind == Var::Kind::Z) u[v.index] = -col[r];
    if (v.kind == Var::Kind::Z0) u0 = -col[r];
  }
  return normalize_direction(u0, u);
}

namespace {

// Lexicographic comparison of (rhs_a, inv_a) / div_a against (rhs_b, inv_b) / div_b.
int compare_ratio_rows(const Tableau& t, std::size_t a, const Rational& div_a, std::size_t b,
                       const Rational& div_b) {
  const Rational ra = t.rhs()[a] / div_a;
  const Rational rb = t.rhs()[b] / div_b;
  if (ra != rb) return ra < rb ? -1 : 1;
  const Vector ia = t.inverse_row(a);
  const Vector ib = t.inverse_row(b);
  for (std::size_t k = 0; k < ia.size(); ++k) {
    const Rational x = ia[k] / div_a;
    const Rational y = ib[k] / div_b;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;  // unreachable: rows of B^{-1} are independent
}

}  // namespace

LemkeOutcome lemke_solve(const ExtendedInstance& ext, const LemkeOptions& options) {
  const std::size_t m = ext.dim();
  LemkeOutcome out;
  if (ext.q().is_nonnegative()) {
    out.status = LemkeStatus::Trivial;
    out.solution = Vector::zeros(m);
    return out;
  }
  const std::size_t cap = options.max_pivots.value_or(binomial(2 * m + 1, m));

  Tableau t(ext);
  std::set<Basis> visited;
  visited.insert(t.sorted_basis());

  auto record = [&](Var entering, Var leaving) {
    Basis b = t.sorted_basis();
    if (!visited.insert(b).second) throw std::logic_error("Lemke path revisited basis " + to_string(b));
    out.path.push_back({entering, leaving, t.point(), std::move(b)});
  };

  // z0 enters along the primary ray; w_r with the lexicographically largest
  // (q_i, e_i) / (-d_i) row leaves.
  {
    const Vector col = t.column(Var::z0());
    std::size_t best = 0;
    for (std::size_t r = 1; r < m; ++r) {
      if (compare_ratio_rows(t, r, col[r], best, col[best]) > 0) best = r;
    }
    const Var leaving = t.pivot(best, Var::z0());
    record(Var::z0(), leaving);
  }

  while (true) {
    const Var leaving = out.path.back().leaving;
    if (leaving.kind == Var::Kind::Z0) {
      out.status = LemkeStatus::Solved;
      out.solution = t.point().z;
      return out;
    }
    if (out.path.size() >= cap) {
      throw std::runtime_error("Lemke safety cap of " + std::to_string(cap) + " pivots exceeded");
    }
    const Var entering = leaving.complement();
    const Vector col = t.column(entering);

    std::optional<std::size_t> best;
    std::optional<std::size_t> z0_row;
    Rational min_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(col[r]) <= 0) continue;
      const Rational ratio = t.rhs()[r] / col[r];
      if (!best || ratio < min_ratio) min_ratio = ratio;
      if (!best || compare_ratio_rows(t, r, col[r], *best, col[*best]) < 0) best = r;
      if (t.basic()[r].kind == Var::Kind::Z0) z0_row = r;
    }
    if (!best) {
      out.status = LemkeStatus::Ray;
      out.ray = SecondaryRay{t.point(), t.sorted_basis(), direction_from_unbounded_column(t, entering)};
      return out;
    }
    std::size_t row = *best;
    if (z0_row && t.rhs()[*z0_row] / col[*z0_row] == min_ratio) row = *z0_row;
    const Var left = t.pivot(row, entering);
    record(entering, left);
  }
}

}  // namespace lcpnash
