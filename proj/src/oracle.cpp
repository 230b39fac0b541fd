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

#include "lcpnash/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "lcpnash/errors.hpp"
#include "lcpnash/linalg.hpp"

namespace lcpnash {

std::optional<std::size_t> PolyhedronSkeleton::find_vertex(const Rational& z0, const Vector& z) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].point.z0 == z0 && vertices[i].point.z == z) return i;
  return std::nullopt;
}

namespace {

struct FeasibleBasis {
  Basis basis;
  std::vector<std::size_t> cols;
  Vector values;  // basic values in column order
  ExtendedPoint point;
};

bool point_less(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.z0 != b.z0) return a.z0 < b.z0;
  return a.z < b.z;
}

// True when no complementary pair is positive anywhere on p + t * (dz0, dz, dw), t >= 0.
bool complementary_along(const ExtendedPoint& p, const Vector& dz, const Vector& dw) {
  for (std::size_t i = 0; i < p.z.size(); ++i) {
    const bool z_live = sgn(p.z[i]) > 0 || sgn(dz[i]) > 0;
    const bool w_live = sgn(p.w[i]) > 0 || sgn(dw[i]) > 0;
    if (z_live && w_live) return false;
  }
  return true;
}

}  // namespace

PolyhedronSkeleton enumerate_skeleton(const ExtendedInstance& ext) {
  const std::size_t m = ext.dim();
  if (m > kSkeletonMaxDim) {
    throw SizeError("skeleton enumeration capped at m = " + std::to_string(kSkeletonMaxDim) + ", got m = " +
                    std::to_string(m));
  }
  const Matrix a = extended_columns(ext);
  std::vector<std::size_t> rows(m);
  std::iota(rows.begin(), rows.end(), 0);

  PolyhedronSkeleton sk;
  std::vector<FeasibleBasis> feasible;
  for_each_combination(2 * m + 1, m, [&](std::span<const std::size_t> cols) {
    auto sol = solve_linear(a.submatrix(rows, cols), ext.q());
    if (!sol || !sol->is_nonnegative()) return true;
    FeasibleBasis fb;
    fb.cols.assign(cols.begin(), cols.end());
    fb.values = *sol;
    ExtendedPoint p{0, Vector::zeros(m), Vector::zeros(m)};
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Var v = Var::from_column(cols[k], m);
      fb.basis.push_back(v);
      if (sgn((*sol)[k]) == 0) sk.nondegenerate = false;
      switch (v.kind) {
        case Var::Kind::W: p.w[v.index] = (*sol)[k]; break;
        case Var::Kind::Z: p.z[v.index] = (*sol)[k]; break;
        case Var::Kind::Z0: p.z0 = (*sol)[k]; break;
      }
    }
    fb.point = std::move(p);
    feasible.push_back(std::move(fb));
    return true;
  });

  // vertices, sorted by point
  std::vector<std::size_t> order(feasible.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return point_less(feasible[x].point, feasible[y].point); });
  std::map<Basis, std::size_t> vertex_of;
  for (std::size_t idx : order) {
    const auto& fb = feasible[idx];
    if (sk.vertices.empty() || point_less(sk.vertices.back().point, fb.point)) {
      SkeletonVertex v;
      v.point = fb.point;
      v.complementary = sgn(dot(fb.point.z, fb.point.w)) == 0;
      sk.vertices.push_back(std::move(v));
    }
    sk.vertices.back().bases.push_back(fb.basis);
    vertex_of[fb.basis] = sk.vertices.size() - 1;
  }

  // edges and rays out of every feasible basis
  for (const auto& fb : feasible) {
    const Matrix b = a.submatrix(rows, fb.cols);
    const std::size_t from = vertex_of.at(fb.basis);
    for (std::size_t j = 0; j < 2 * m + 1; ++j) {
      if (std::binary_search(fb.cols.begin(), fb.cols.end(), j)) continue;
      const Var entering = Var::from_column(j, m);
      const Vector y = *solve_linear(b, a.col(j));
      std::optional<Rational> min_ratio;
      for (std::size_t k = 0; k < m; ++k) {
        if (sgn(y[k]) <= 0) continue;
        const Rational r = fb.values[k] / y[k];
        if (!min_ratio || r < *min_ratio) min_ratio = r;
      }
      if (!min_ratio) {
        Rational u0 = entering.kind == Var::Kind::Z0 ? 1 : 0;
        Vector u(m), dw(m);
        if (entering.kind == Var::Kind::Z) u[entering.index] = 1;
        if (entering.kind == Var::Kind::W) dw[entering.index] = 1;
        for (std::size_t k = 0; k < m; ++k) {
          const Var v = fb.basis[k];
          if (v.kind == Var::Kind::Z) u[v.index] = -y[k];
          if (v.kind == Var::Kind::W) dw[v.index] = -y[k];
          if (v.kind == Var::Kind::Z0) u0 = -y[k];
        }
        SkeletonRay ray;
        ray.vertex = from;
        ray.basis = fb.basis;
        ray.entering = entering;
        ray.complementary = complementary_along(fb.point, u, dw);
        ray.direction = normalize_direction(u0, u);
        sk.rays.push_back(std::move(ray));
        continue;
      }
      std::size_t ties = 0;
      for (std::size_t k = 0; k < m; ++k) {
        if (sgn(y[k]) <= 0 || fb.values[k] / y[k] != *min_ratio) continue;
        ++ties;
        Basis next = fb.basis;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(k));
        next.insert(std::upper_bound(next.begin(), next.end(), entering), entering);
        sk.edges.push_back({from, vertex_of.at(next), fb.basis, next, entering, fb.basis[k]});
      }
      if (ties > 1) sk.nondegenerate = false;
    }
  }
  return sk;
}

LemkeEndpoint walk_lemke_graph(const ExtendedInstance& ext, const PolyhedronSkeleton& skeleton) {
  if (!skeleton.nondegenerate) throw ContractViolation("walk_lemke_graph needs a nondegenerate skeleton");
  const std::size_t m = ext.dim();
  std::optional<std::size_t> r;
  Rational z0 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational t = -ext.q()[i] / ext.d()[i];
    if (sgn(t) > 0 && (!r || t > z0)) {
      z0 = t;
      r = i;
    }
  }
  if (!r) throw ContractViolation("walk_lemke_graph: q >= 0 has no primary ray");
  const auto start = skeleton.find_vertex(z0, Vector::zeros(m));
  if (!start) throw std::logic_error("initial vertex missing from skeleton");

  Basis basis = skeleton.vertices[*start].bases.front();
  Var came_via = Var::w(*r);
  const std::size_t max_steps = skeleton.edges.size() + 1;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    const Var entering = came_via.complement();
    for (const auto& ray : skeleton.rays) {
      if (ray.basis == basis && ray.entering == entering) {
        return SecondaryRay{skeleton.vertices[ray.vertex].point, basis, ray.direction};
      }
    }
    const SkeletonEdge* edge = nullptr;
    for (const auto& e : skeleton.edges)
      if (e.from_basis == basis && e.entering == entering) edge = &e;
    if (!edge) throw std::logic_error("skeleton has no edge for " + entering.name() + " from " + to_string(basis));
    if (edge->leaving.kind == Var::Kind::Z0) return skeleton.vertices[edge->to].point.z;
    basis = edge->to_basis;
    came_via = edge->leaving;
  }
  throw std::logic_error("walk_lemke_graph did not terminate");
}

namespace {

struct PieceScan {
  std::vector<Vector> points;
  bool degenerate = false;
};

// Pieces of SOL(q, M), optionally intersected with e^T z = 1.
PieceScan scan_pieces(const LcpInstance& inst, bool normalized) {
  const std::size_t m = inst.dim();
  if (m > kSolutionMaxDim) {
    throw SizeError("solution enumeration capped at m = " + std::to_string(kSolutionMaxDim) + ", got m = " +
                    std::to_string(m));
  }
  PieceScan scan;
  const std::uint32_t count = std::uint32_t{1} << m;
  for (std::uint32_t alpha = 0; alpha < count; ++alpha) {
    // column i is z_i (entries -M_{., i}) when i in alpha, else w_i (unit vector)
    Matrix a(m + (normalized ? 1 : 0), m);
    Vector b(a.rows());
    for (std::size_t r = 0; r < m; ++r) b[r] = inst.q()[r];
    for (std::size_t i = 0; i < m; ++i) {
      const bool in_alpha = alpha >> i & 1u;
      for (std::size_t r = 0; r < m; ++r) a(r, i) = in_alpha ? Rational(-inst.M()(r, i)) : Rational(r == i ? 1 : 0);
      if (normalized) a(m, i) = in_alpha ? 1 : 0;
    }
    if (normalized) b[m] = 1;

    std::vector<Vector> xs;
    if (!normalized) {
      if (auto sol = solve_linear(a, b)) {
        if (sol->is_nonnegative()) xs.push_back(*sol);
      } else {
        xs = enumerate_bfs(a, b);
        if (!xs.empty()) {
          Matrix rec(m + 1, m);
          Vector rb(m + 1);
          for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) rec(r, c) = a(r, c);
          for (std::size_t c = 0; c < m; ++c) rec(m, c) = 1;
          rb[m] = 1;
          if (xs.size() > 1 || !enumerate_bfs(rec, rb).empty()) scan.degenerate = true;
        }
      }
    } else {
      xs = enumerate_bfs(a, b);
      if (xs.size() > 1) scan.degenerate = true;
    }
    for (const auto& x : xs) {
      Vector z(m);
      for (std::size_t i = 0; i < m; ++i)
        if (alpha >> i & 1u) z[i] = x[i];
      scan.points.push_back(std::move(z));
    }
  }
  std::sort(scan.points.begin(), scan.points.end());
  scan.points.erase(std::unique(scan.points.begin(), scan.points.end()), scan.points.end());
  return scan;
}

}  // namespace

SolutionSet enumerate_solutions(const LcpInstance& inst) {
  auto scan = scan_pieces(inst, false);
  return {std::move(scan.points), scan.degenerate};
}

SolutionSet enumerate_normalized_solutions(const LcpInstance& inst) {
  auto scan = scan_pieces(inst, true);
  return {std::move(scan.points), scan.degenerate};
}

DirectionSet enumerate_directions(const ExtendedInstance& ext) {
  const std::size_t m = ext.dim();
  DirectionSet out;
  const auto cone = enumerate_normalized_solutions(LcpInstance(ext.M(), Vector::zeros(m)));
  for (const auto& u : cone.points) out.type0.push_back({0, u});
  const auto covering = enumerate_solutions(LcpInstance(ext.M(), ext.d()));
  for (const auto& u : covering.points)
    if (!u.is_zero()) out.type1.push_back({1, u});
  out.degenerate = cone.degenerate || covering.degenerate;
  return out;
}

bool covering_solutions_nondegenerate(const ExtendedInstance& ext) {
  const std::size_t m = ext.dim();
  const LcpInstance covering(ext.M(), ext.d());
  const auto sol = enumerate_solutions(covering);
  if (sol.degenerate) return false;
  for (const auto& u : sol.points) {
    if (u.is_zero()) continue;
    const Vector v = covering.slack(u);
    std::vector<std::size_t> alpha;
    for (std::size_t i = 0; i < m; ++i) {
      const bool up = sgn(u[i]) > 0;
      const bool vp = sgn(v[i]) > 0;
      if (up == vp) return false;  // both zero (both positive cannot happen)
      if (up) alpha.push_back(i);
    }
    if (sgn(determinant(ext.M().submatrix(alpha, alpha))) == 0) return false;
  }
  return true;
}

bool is_p_matrix(const Matrix& m) {
  if (!m.is_square()) throw ContractViolation("is_p_matrix: matrix must be square");
  const std::size_t n = m.rows();
  if (n > kSolutionMaxDim) throw SizeError("is_p_matrix capped at " + std::to_string(kSolutionMaxDim));
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) idx.push_back(i);
    if (sgn(determinant(m.submatrix(idx, idx))) <= 0) return false;
  }
  return true;
}

}  // namespace lcpnash
