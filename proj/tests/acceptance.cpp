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

// Acceptance suite: seven criteria, zero tolerance, one PASS/FAIL line each.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "corpus.hpp"
#include "lcpnash/lemke.hpp"
#include "lcpnash/oracle.hpp"
#include "lcpnash/pipeline.hpp"
#include "lcpnash/recovery.hpp"
#include "lcpnash/reduction.hpp"

using namespace lcpnash;
using lcpnash::testing::CorpusEntry;

namespace {

struct Verdict {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(std::string why) {
    passed = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
};

std::string describe(const ExtendedInstance& ext) {
  std::ostringstream s;
  s << "M=" << ext.M() << " q=" << ext.q() << " d=" << ext.d();
  return s.str();
}

Vector tail(const Vector& v, std::size_t from, std::size_t count) {
  Vector out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = v[from + i];
  return out;
}

std::vector<CorpusEntry> concat(std::initializer_list<std::vector<CorpusEntry>> parts) {
  std::vector<CorpusEntry> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// 1. Every basic-game equilibrium with t > 0 lands on an oracle solution and
//    maps back exactly; the images cover the oracle set; t = 0 equilibria give
//    verified directions.
Verdict basic_game_bijection(const std::vector<CorpusEntry>& corpus) {
  Verdict v;
  std::size_t equilibria = 0, directions = 0;
  for (const auto& entry : corpus) {
    const LcpInstance& inst = entry.instance.base();
    const std::size_t m = inst.dim();
    const SymmetricGame game = build_game_basic(inst);
    const SolutionSet oracle = enumerate_solutions(inst);
    std::set<Vector> images;
    for (const auto& eq : enumerate_sne(game)) {
      ++equilibria;
      const Vector& x = eq.profile.x;
      const Rational& t = x[m];
      const Vector y = tail(x, 0, m);
      if (sgn(t) > 0) {
        const Vector z = y / t;
        if (!std::binary_search(oracle.points.begin(), oracle.points.end(), z))
          v.fail(describe(entry.instance) + ": image " + to_string(z) + " not an oracle solution");
        images.insert(z);
        Vector back(m + 1);
        const Rational total = z.sum() + 1;
        for (std::size_t i = 0; i < m; ++i) back[i] = z[i] / total;
        back[m] = 1 / total;
        if (back != x) v.fail(describe(entry.instance) + ": reverse map of " + to_string(z) + " differs");
      } else {
        ++directions;
        const Rational tau = -eq.profile.value;
        const ExtendedInstance ext(inst);
        const bool ok = sgn(tau) > 0 ? is_secondary_direction(ext, 1, y / tau) : is_secondary_direction(ext, 0, y);
        if (!ok) v.fail(describe(entry.instance) + ": t = 0 equilibrium " + to_string(x) + " is not a direction");
      }
    }
    if (std::vector<Vector>(images.begin(), images.end()) != oracle.points)
      v.fail(describe(entry.instance) + ": equilibrium images do not cover the oracle solutions");
  }
  v.summary = std::to_string(corpus.size()) + " instances, " + std::to_string(equilibria) + " equilibria, " +
              std::to_string(directions) + " with t = 0";
  return v;
}

// 2. Every equilibrium of the full game classifies and verifies.
Verdict full_pipeline(const std::vector<CorpusEntry>& corpus) {
  Verdict v;
  std::size_t counts[4] = {0, 0, 0, 0};
  std::size_t perturbed = 0;
  for (const auto& entry : corpus) {
    const ExtendedInstance& ext = entry.instance;
    try {
      const PipelineReport r = run_pipeline(ext);
      if (r.epsilon) ++perturbed;
      std::size_t useful = 0;
      for (const auto& e : r.entries) {
        const auto& c = e.classification;
        ++counts[static_cast<int>(c.tag)];
        bool ok = false;
        switch (c.tag) {
          case ClassTag::OriginalSolution: ok = is_solution(ext.base(), std::get<Vector>(c.payload)); break;
          case ClassTag::SecondaryRayFound: ok = is_secondary_ray(r.instance, std::get<SecondaryRay>(c.payload)); break;
          case ClassTag::Type1Direction:
          case ClassTag::Type0Direction: {
            const auto& d = std::get<SecondaryDirection>(c.payload);
            ok = is_secondary_direction(r.instance, d.u0, d.u);
            break;
          }
        }
        if (!ok) v.fail(describe(ext) + ": payload of " + to_string(e.equilibrium.profile.x) + " fails verification");
        if (c.tag != ClassTag::Type0Direction) ++useful;
      }
      if (useful == 0) v.fail(describe(ext) + ": no solution, ray or type-1 direction");
    } catch (const std::exception& ex) {
      v.fail(describe(ext) + ": " + ex.what());
    }
  }
  v.summary = std::to_string(corpus.size()) + " instances; solutions " + std::to_string(counts[0]) + ", rays " +
              std::to_string(counts[1]) + ", type-1 " + std::to_string(counts[2]) + ", type-0 " +
              std::to_string(counts[3]) + "; perturbed " + std::to_string(perturbed);
  return v;
}

// 3. Lemke agrees with the pipeline on P-matrices; SPD matrices never give a ray.
Verdict lemke_cross_validation(const std::vector<CorpusEntry>& corpus, const std::vector<CorpusEntry>& spd) {
  Verdict v;
  std::size_t p_checked = 0;
  for (const auto& entry : corpus) {
    const ExtendedInstance& ext = entry.instance;
    if (!is_p_matrix(ext.M())) continue;
    const LemkeOutcome o = lemke_solve(ext);
    if (o.status != LemkeStatus::Solved) {
      v.fail(describe(ext) + ": P-matrix instance not solved by Lemke");
      continue;
    }
    ++p_checked;
    const PipelineReport r = run_pipeline(ext);
    bool found = false;
    for (const auto& e : r.entries)
      if (e.classification.tag == ClassTag::OriginalSolution && std::get<Vector>(e.classification.payload) == o.solution)
        found = true;
    if (!found) v.fail(describe(ext) + ": Lemke solution " + to_string(o.solution) + " missing from the pipeline");
  }
  for (const auto& entry : spd) {
    if (lemke_solve(entry.instance).status == LemkeStatus::Ray) v.fail(describe(entry.instance) + ": SPD gave a ray");
  }
  v.summary = std::to_string(p_checked) + " P-matrix instances matched, " + std::to_string(spd.size()) +
              " SPD instances without rays";
  return v;
}

// 4. Hand-checked micro examples.
Verdict micro_examples() {
  Verdict v;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) v.fail(what);
  };
  const LcpInstance neg(Matrix{{-1}}, Vector::from_ints({-2}));
  const ExtendedInstance ext(neg);
  const SecondaryRay expected_ray{make_extended_point(ext, 2, Vector::from_ints({0})), {}, {1, Vector::from_ints({1})}};
  auto same_ray = [&](const SecondaryRay& r) {
    return r.vertex.z0 == expected_ray.vertex.z0 && r.vertex.z == expected_ray.vertex.z &&
           r.direction.u0 == expected_ray.direction.u0 && r.direction.u == expected_ray.direction.u;
  };

  const LemkeOutcome o = lemke_solve(ext);
  expect(o.status == LemkeStatus::Ray && o.ray && same_ray(*o.ray), "Lemke ray (2, 0, 1, (1))");

  const FullReduction red = reduce_full(ext, Rational(1));
  const auto eqs = enumerate_sne(red.game);
  expect(!eqs.empty(), "pipeline equilibria exist");
  for (const auto& e : eqs) {
    const auto c = classify_equilibrium(ext, red, e.profile);
    expect(c.tag == ClassTag::Type1Direction, "classification is Type1Direction");
    if (c.tag != ClassTag::Type1Direction) continue;
    const auto& d = std::get<SecondaryDirection>(c.payload);
    expect(d.u0 == 1 && d.u == Vector::from_ints({1}), "direction (1, (1))");
    const Resolution res = resolve_type1_direction(neg, d.u);
    expect(std::holds_alternative<SecondaryRay>(res) && same_ray(std::get<SecondaryRay>(res)),
           "resolved ray equals the Lemke ray");
  }

  const LcpInstance zero(Matrix{{0}}, Vector::from_ints({-1}));
  const AugmentedInstance aug = build_augmented(zero, 1);
  expect(aug.m_tilde() == Matrix::from_ints({{1, -1}, {1, 0}}), "M~ = [[1, -1], [1, 0]]");
  expect(aug.q_tilde() == Vector::from_ints({1, -1}), "q~ = (1, -1)");
  expect(build_game_full(ExtendedInstance(zero), 1).cost() == Matrix::from_ints({{1, -1, 2}, {1, 0, 0}, {0, 0, 1}}),
         "C = [[1, -1, 2], [1, 0, 0], [0, 0, 1]]");
  expect(build_game_basic(zero).cost() == Matrix::from_ints({{0, 0}, {0, 1}}), "C(q, M) = [[0, 0], [0, 1]]");
  expect(compute_beta(zero) == 1, "beta = 1");
  v.summary = "Lemke ray, pipeline direction, resolution, and M~, q~, C entries";
  return v;
}

// 5. Oracle vertex sets correspond under (z0, z) <-> (z0, D z).
Verdict scaling_invariance(const std::vector<CorpusEntry>& corpus) {
  Verdict v;
  std::size_t vertices = 0;
  for (const auto& entry : corpus) {
    const ExtendedInstance& ext = entry.instance;
    const ScaledInstance s = scale_instance(ext);
    const auto lhs = enumerate_skeleton(ext);
    const auto rhs = enumerate_skeleton(ExtendedInstance(s.scaled));
    std::set<std::pair<Rational, Vector>> mapped, target;
    for (const auto& x : lhs.vertices) mapped.insert(scale_point(s, x.point.z0, x.point.z));
    for (const auto& x : rhs.vertices) target.insert({x.point.z0, x.point.z});
    vertices += mapped.size();
    if (mapped != target) v.fail(describe(ext) + ": vertex sets differ");
  }
  v.summary = std::to_string(corpus.size()) + " instances, " + std::to_string(vertices) + " vertices";
  return v;
}

// 6. Nonzero members of SOL(e tau, M~) have u0 + tau > 0 and transfer to SOL(e, M).
Verdict direction_transfer(const std::vector<CorpusEntry>& corpus) {
  Verdict v;
  std::size_t members = 0;
  for (const auto& entry : corpus) {
    const LcpInstance& inst = entry.instance.base();
    const std::size_t m = inst.dim();
    const AugmentedInstance aug = build_augmented(inst, compute_beta(inst));
    const LcpInstance covering(inst.M(), Vector::ones(m));
    for (int tau = 0; tau <= 1; ++tau) {
      const LcpInstance shifted(aug.m_tilde(), Vector::ones(m + 1) * Rational(tau));
      std::vector<Vector> pts = enumerate_solutions(shifted).points;
      for (auto& p : enumerate_normalized_solutions(shifted).points) pts.push_back(std::move(p));
      for (const auto& u : pts) {
        if (u.is_zero()) continue;
        ++members;
        const Rational s = u[0] + tau;
        if (sgn(s) <= 0) {
          v.fail(describe(entry.instance) + ": u0 + tau = " + to_string(s) + " at " + to_string(u));
        } else if (!is_solution(covering, tail(u, 1, m) / s)) {
          v.fail(describe(entry.instance) + ": transfer of " + to_string(u) + " is not in SOL(e, M)");
        }
      }
    }
  }
  v.summary = std::to_string(corpus.size()) + " augmented instances, " + std::to_string(members) + " nonzero members";
  return v;
}

// 7. No basis repeats along any Lemke path; every step is almost-complementary.
Verdict anti_cycling(const std::vector<CorpusEntry>& corpus) {
  Verdict v;
  std::size_t pivots = 0;
  for (const auto& entry : corpus) {
    try {
      const LemkeOutcome o = lemke_solve(entry.instance);
      std::set<Basis> seen;
      for (std::size_t k = 0; k < o.path.size(); ++k) {
        const auto& step = o.path[k];
        ++pivots;
        if (!seen.insert(step.basis_after).second) v.fail(describe(entry.instance) + ": basis repeats");
        if (k > 0 && step.entering != o.path[k - 1].leaving.complement())
          v.fail(describe(entry.instance) + ": entering variable is not the complement of the last leaving one");
      }
    } catch (const std::exception& ex) {
      v.fail(describe(entry.instance) + ": " + ex.what());
    }
  }
  v.summary = std::to_string(corpus.size()) + " paths, " + std::to_string(pivots) + " pivots";
  return v;
}

}  // namespace

int main() {
  const auto random = testing::random_corpus();
  const auto covering = testing::covering_corpus();
  const auto pmat = testing::p_matrix_corpus();
  const auto spd = testing::spd_corpus();
  const auto degenerate = testing::degenerate_corpus();
  const auto scaled = testing::covering_corpus(20260606, 100);
  const auto augmented = testing::random_corpus(20260707, 100);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"basic game bijection", [&] { return basic_game_bijection(random); }},
      {"full pipeline completeness", [&] { return full_pipeline(concat({random, covering})); }},
      {"Lemke and game cross-validation",
       [&] { return lemke_cross_validation(concat({random, covering, pmat, spd, degenerate}), spd); }},
      {"worked micro examples", micro_examples},
      {"scaling invariance", [&] { return scaling_invariance(scaled); }},
      {"direction transfer", [&] { return direction_transfer(augmented); }},
      {"anti-cycling", [&] { return anti_cycling(concat({random, covering, pmat, spd, degenerate})); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& ex) {
      v.fail(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << ": "
              << v.summary << " (" << secs << " s)\n";
    for (const auto& f : v.failures) std::cout << "    " << f << "\n";
    all = all && v.passed;
  }
  return all ? 0 : 1;
}
