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

#include "lcpnash/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lcpnash/errors.hpp"
#include "lcpnash/oracle.hpp"

namespace lcpnash {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("pipeline payload failed verification: ") + what);
}

Resolution resolve_in_original(const ExtendedInstance& ext, const FullReduction& red, const SecondaryDirection& dir) {
  const Resolution r = resolve_type1_direction(red.scaled.scaled, hadamard(ext.d(), dir.u));
  if (const auto* z = std::get_if<Vector>(&r)) {
    Vector sol = unscale_point(red.scaled, 0, *z).second;
    require(is_solution(ext.base(), sol), "resolved solution");
    return sol;
  }
  SecondaryRay ray = unscale_ray(red.scaled, ext, std::get<SecondaryRay>(r));
  require(is_secondary_ray(ext, ray), "resolved ray");
  return ray;
}

PipelineReport run(const ExtendedInstance& ext, const PipelineOptions& options, bool may_perturb) {
  PipelineReport report{ext, std::nullopt, false, 0, std::nullopt, {}};
  if (ext.q().is_nonnegative()) {
    report.trivial = true;
    return report;
  }
  FullReduction red = reduce_full(ext, options.beta, options.beta_mode);
  report.beta = red.augmented.beta;
  const auto equilibria = enumerate_sne(red.game, {options.max_strategies, options.threads});
  for (const auto& eq : equilibria) {
    PipelineEntry entry{eq, classify_equilibrium(ext, red, eq.profile), std::nullopt};
    if (options.resolve_directions && entry.classification.tag == ClassTag::Type1Direction) {
      try {
        entry.resolved = resolve_in_original(ext, red, std::get<SecondaryDirection>(entry.classification.payload));
      } catch (const DegenerateDirectionError&) {
        if (!may_perturb) throw;
        Perturbation p = perturb_covering(ext);
        if (!p.epsilon) throw;
        PipelineReport retry = run(p.instance, options, false);
        retry.epsilon = p.epsilon;
        return retry;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  report.reduction = std::move(red);
  return report;
}

std::string join(const std::vector<Vector>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + to_string(vs[i]);
  return out + "}";
}

std::string set_diff(const std::vector<Vector>& expected, const std::vector<Vector>& actual) {
  std::vector<Vector> missing, extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  return "missing " + join(missing) + ", extra " + join(extra);
}

void sort_unique(std::vector<Vector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool same_direction(const SecondaryDirection& a, const SecondaryDirection& b) { return a.u0 == b.u0 && a.u == b.u; }

bool ray_in_skeleton(const PolyhedronSkeleton& sk, const SecondaryRay& ray, bool match_basis) {
  return std::any_of(sk.rays.begin(), sk.rays.end(), [&](const SkeletonRay& r) {
    const auto& p = sk.vertices[r.vertex].point;
    return r.complementary && p.z0 == ray.vertex.z0 && p.z == ray.vertex.z &&
           same_direction(r.direction, ray.direction) && (!match_basis || r.basis == ray.basis);
  });
}

bool basis_in_skeleton(const PolyhedronSkeleton& sk, const ExtendedPoint& p, const Basis& basis) {
  const auto idx = sk.find_vertex(p.z0, p.z);
  if (!idx) return false;
  const auto& bases = sk.vertices[*idx].bases;
  return std::find(bases.begin(), bases.end(), basis) != bases.end();
}

std::string ray_text(const SecondaryRay& r) {
  return "(" + to_string(r.vertex.z0) + ", " + to_string(r.vertex.z) + ", " + std::to_string(r.direction.u0) + ", " +
         to_string(r.direction.u) + ")";
}

}  // namespace

PipelineReport run_pipeline(const ExtendedInstance& ext, const PipelineOptions& options) {
  return run(ext, options, true);
}

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

AuditReport audit(const ExtendedInstance& ext, const PipelineOptions& options) {
  const std::size_t m = ext.dim();
  const PolyhedronSkeleton sk = enumerate_skeleton(ext);
  const SolutionSet solutions = enumerate_solutions(ext.base());
  AuditReport report;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // Lemke against the skeleton.
  const LemkeOutcome lemke = lemke_solve(ext);
  {
    std::string bad;
    for (const auto& step : lemke.path)
      if (!basis_in_skeleton(sk, step.vertex_after, step.basis_after)) bad += " " + to_string(step.basis_after);
    check("lemke-path-in-skeleton", bad.empty(), bad.empty() ? "" : "bases not in skeleton:" + bad);
  }
  switch (lemke.status) {
    case LemkeStatus::Trivial:
      check("lemke-endpoint", ext.q().is_nonnegative() && lemke.solution.is_zero());
      break;
    case LemkeStatus::Solved: {
      const bool found = std::binary_search(solutions.points.begin(), solutions.points.end(), lemke.solution);
      check("lemke-endpoint", found, found ? "" : to_string(lemke.solution) + " not among oracle solutions");
      break;
    }
    case LemkeStatus::Ray: {
      const bool found = ray_in_skeleton(sk, *lemke.ray, true);
      check("lemke-endpoint", found, found ? "" : "ray " + ray_text(*lemke.ray) + " not a skeleton ray");
      break;
    }
  }
  if (sk.nondegenerate && lemke.status != LemkeStatus::Trivial) {
    const LemkeEndpoint end = walk_lemke_graph(ext, sk);
    bool same = false;
    if (const auto* z = std::get_if<Vector>(&end)) {
      same = lemke.status == LemkeStatus::Solved && *z == lemke.solution;
    } else {
      const auto& r = std::get<SecondaryRay>(end);
      same = lemke.status == LemkeStatus::Ray && r.vertex.z0 == lemke.ray->vertex.z0 &&
             r.vertex.z == lemke.ray->vertex.z && same_direction(r.direction, lemke.ray->direction);
    }
    check("lemke-graph-walk", same, same ? "" : "skeleton walk ends elsewhere");
  }

  // Pipeline against the oracle.
  const PipelineReport pipe = run_pipeline(ext, options);
  if (pipe.trivial) {
    check("pipeline-trivial", lemke.status == LemkeStatus::Trivial);
  } else {
    std::vector<Vector> found;
    std::string bad_rays, bad_dirs;
    std::size_t useful = 0;
    const PolyhedronSkeleton& run_sk = pipe.epsilon ? enumerate_skeleton(pipe.instance) : sk;
    for (const auto& e : pipe.entries) {
      const auto& c = e.classification;
      if (c.tag != ClassTag::Type0Direction) ++useful;
      if (c.tag == ClassTag::OriginalSolution) found.push_back(std::get<Vector>(c.payload));
      if (c.tag == ClassTag::SecondaryRayFound && !ray_in_skeleton(run_sk, std::get<SecondaryRay>(c.payload), false))
        bad_rays += " " + ray_text(std::get<SecondaryRay>(c.payload));
      if (c.tag == ClassTag::Type1Direction || c.tag == ClassTag::Type0Direction) {
        const auto& d = std::get<SecondaryDirection>(c.payload);
        if (!is_secondary_direction(pipe.instance, d.u0, d.u)) bad_dirs += " " + to_string(d.u);
      }
      if (e.resolved) {
        if (const auto* z = std::get_if<Vector>(&*e.resolved)) found.push_back(*z);
        else if (!ray_in_skeleton(run_sk, std::get<SecondaryRay>(*e.resolved), false))
          bad_rays += " " + ray_text(std::get<SecondaryRay>(*e.resolved));
      }
    }
    sort_unique(found);
    // Equilibria from the z0 = 0 face cover every solution vertex; degenerate
    // solution sets may add further boundary points, all of them verified.
    const bool covers = std::includes(found.begin(), found.end(), solutions.points.begin(), solutions.points.end());
    const bool sol_ok = solutions.degenerate ? covers : covers && found.size() == solutions.points.size();
    bool all_solve = std::all_of(found.begin(), found.end(), [&](const Vector& z) { return is_solution(ext.base(), z); });
    check("pipeline-solutions", sol_ok && all_solve, sol_ok ? "" : set_diff(solutions.points, found));
    check("pipeline-rays", bad_rays.empty(), bad_rays.empty() ? "" : "not skeleton rays:" + bad_rays);
    check("pipeline-directions", bad_dirs.empty(), bad_dirs.empty() ? "" : "unverified:" + bad_dirs);
    check("pipeline-nonempty", useful > 0, useful ? "" : "no usable classification");
    if (pipe.reduction) {
      const auto& red = *pipe.reduction;
      const bool composed = build_game_basic(red.augmented.augmented) == red.game;
      check("game-composition", composed);
      const Rational bound = compute_beta(red.scaled.scaled, BetaMode::Enumeration);
      check("beta-valid", red.augmented.beta > bound - 1,
            "beta " + to_string(red.augmented.beta) + " vs vertex bound " + to_string(bound - 1));
      check("beta-bound-dominates", compute_beta(red.scaled.scaled, BetaMode::Bound) >= bound);

      // Direction transfer on the augmented instance, tau in {0, 1}.
      std::string bad;
      const Matrix& mt = red.augmented.m_tilde();
      const LcpInstance covering(red.scaled.scaled.M(), Vector::ones(m));
      for (int tau = 0; tau <= 1; ++tau) {
        const LcpInstance shifted(mt, Vector::ones(m + 1) * Rational(tau));
        auto pts = enumerate_solutions(shifted).points;
        for (auto& u : enumerate_normalized_solutions(shifted).points) pts.push_back(std::move(u));
        for (const auto& u : pts) {
          if (u.is_zero()) continue;
          const Rational s = u[0] + tau;
          Vector tail(m);
          for (std::size_t i = 0; i < m; ++i) tail[i] = u[i + 1];
          if (sgn(s) <= 0 || !is_solution(covering, tail / s)) bad += " " + to_string(u);
        }
      }
      check("direction-transfer", bad.empty(), bad.empty() ? "" : "failed for" + bad);
    }
  }

  // Basic game: equilibria with t > 0 against the solution set, t = 0 against directions.
  {
    const LcpInstance& inst = ext.base();
    const SymmetricGame basic = build_game_basic(inst);
    std::vector<Vector> mapped;
    std::string bad;
    for (const auto& eq : enumerate_sne(basic, {options.max_strategies, options.threads})) {
      const auto c = classify_basic_equilibrium(inst, eq.profile);
      if (c.tag != ClassTag::OriginalSolution) continue;
      const Vector& z = std::get<Vector>(c.payload);
      mapped.push_back(z);
      Vector back(m + 1);
      const Rational total = z.sum() + 1;
      for (std::size_t i = 0; i < m; ++i) back[i] = z[i] / total;
      back[m] = 1 / total;
      if (back != eq.profile.x) bad += " " + to_string(eq.profile.x);
    }
    sort_unique(mapped);
    const bool same = mapped == solutions.points;
    check("basic-game-bijection", same && bad.empty(),
          same ? (bad.empty() ? "" : "reverse map differs at" + bad) : set_diff(solutions.points, mapped));
  }

  // Diagonal scaling maps the vertex set of ELCP(d, q, M) onto that of the scaled problem.
  {
    const ScaledInstance s = scale_instance(ext);
    const PolyhedronSkeleton scaled_sk = enumerate_skeleton(ExtendedInstance(s.scaled));
    std::vector<Vector> lhs, rhs;
    for (const auto& v : sk.vertices) {
      Vector p(m + 1);
      p[0] = v.point.z0;
      const Vector dz = hadamard(ext.d(), v.point.z);
      for (std::size_t i = 0; i < m; ++i) p[i + 1] = dz[i];
      lhs.push_back(std::move(p));
    }
    for (const auto& v : scaled_sk.vertices) {
      Vector p(m + 1);
      p[0] = v.point.z0;
      for (std::size_t i = 0; i < m; ++i) p[i + 1] = v.point.z[i];
      rhs.push_back(std::move(p));
    }
    sort_unique(lhs);
    sort_unique(rhs);
    check("scaling-invariance", lhs == rhs, lhs == rhs ? "" : set_diff(lhs, rhs));
  }
  return report;
}

}  // namespace lcpnash
