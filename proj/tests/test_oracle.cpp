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

#include "corpus.hpp"
#include "doctest.h"
#include "lcpnash/errors.hpp"
#include "lcpnash/lemke.hpp"
#include "lcpnash/oracle.hpp"

using namespace lcpnash;

namespace {

ExtendedInstance make(Matrix m, Vector q) { return ExtendedInstance(LcpInstance(std::move(m), std::move(q))); }

std::vector<const SkeletonRay*> secondary_rays(const PolyhedronSkeleton& sk) {
  std::vector<const SkeletonRay*> out;
  for (const auto& r : sk.rays)
    if (r.complementary && !(r.direction.u0 == 1 && r.direction.u.is_zero())) out.push_back(&r);
  return out;
}

}  // namespace

TEST_CASE("skeleton of M = [[-1]], q = (-2)") {
  const auto sk = enumerate_skeleton(make(Matrix::from_ints({{-1}}), Vector::from_ints({-2})));
  REQUIRE(sk.vertices.size() == 1);
  CHECK(sk.vertices[0].point.z0 == 2);
  CHECK(sk.vertices[0].point.z == Vector::from_ints({0}));
  const auto rays = secondary_rays(sk);
  REQUIRE(rays.size() == 1);
  CHECK(rays[0]->direction.u0 == 1);
  CHECK(rays[0]->direction.u == Vector::from_ints({1}));
  CHECK(sk.edges.empty());
}

TEST_CASE("skeleton of M = I, q = (-1)") {
  const auto sk = enumerate_skeleton(make(Matrix::identity(1), Vector::from_ints({-1})));
  REQUIRE(sk.vertices.size() == 2);
  CHECK(sk.vertices[0].point.z0 == 0);
  CHECK(sk.vertices[0].point.z == Vector::from_ints({1}));
  CHECK(sk.vertices[1].point.z0 == 1);
  CHECK(sk.vertices[1].point.z == Vector::from_ints({0}));
  bool connected = false;
  for (const auto& e : sk.edges) connected = connected || (e.from == 1 && e.to == 0) || (e.from == 0 && e.to == 1);
  CHECK(connected);
  for (const auto& e : sk.edges) {
    std::size_t shared = 0;
    for (const Var& v : e.from_basis) shared += std::count(e.to_basis.begin(), e.to_basis.end(), v);
    CHECK(shared == e.from_basis.size() - 1);
  }
}

TEST_CASE("skeleton with q >= 0 contains the origin") {
  const auto sk = enumerate_skeleton(make(Matrix::from_ints({{1, 2}, {-1, 0}}), Vector::from_ints({1, 3})));
  CHECK(sk.find_vertex(0, Vector::zeros(2)).has_value());
}

TEST_CASE("oracle size caps") {
  CHECK_THROWS_AS(enumerate_skeleton(make(Matrix::identity(6), -Vector::ones(6))), SizeError);
  CHECK_THROWS_AS(enumerate_solutions(LcpInstance(Matrix::identity(13), -Vector::ones(13))), SizeError);
  CHECK_THROWS_AS(is_p_matrix(Matrix::identity(13)), SizeError);
}

TEST_CASE("enumerate_solutions examples") {
  const auto a = enumerate_solutions(LcpInstance(Matrix::identity(2), Vector::from_ints({-1, -1})));
  CHECK(a.points == std::vector<Vector>{Vector::from_ints({1, 1})});
  CHECK_FALSE(a.degenerate);
  CHECK(enumerate_solutions(LcpInstance(Matrix::from_ints({{-1}}), Vector::from_ints({-2}))).points.empty());
  const auto c = enumerate_solutions(LcpInstance(Matrix::from_ints({{0}}), Vector::from_ints({0})));
  CHECK(c.points == std::vector<Vector>{Vector::from_ints({0})});
  CHECK(c.degenerate);
}

TEST_CASE("enumerate_directions examples") {
  const auto a = enumerate_directions(make(Matrix::from_ints({{-1}}), Vector::from_ints({0})));
  REQUIRE(a.type1.size() == 1);
  CHECK(a.type1[0].u0 == 1);
  CHECK(a.type1[0].u == Vector::from_ints({1}));
  CHECK(a.type0.empty());
  const auto b = enumerate_directions(make(Matrix::from_ints({{0}}), Vector::from_ints({0})));
  REQUIRE(b.type0.size() == 1);
  CHECK(b.type0[0].u == Vector::from_ints({1}));
  CHECK(b.type1.empty());
  const auto c = enumerate_directions(make(Matrix::identity(2), Vector::from_ints({0, 0})));
  CHECK(c.type0.empty());
  CHECK(c.type1.empty());
}

TEST_CASE("is_p_matrix") {
  CHECK(is_p_matrix(Matrix::identity(3)));
  CHECK(is_p_matrix(Matrix::from_ints({{2, -1}, {-1, 2}})));
  CHECK(is_p_matrix(Matrix::from_ints({{1, -3}, {0, 1}})));
  CHECK_FALSE(is_p_matrix(Matrix::from_ints({{1, 2}, {2, 1}})));
  CHECK_FALSE(is_p_matrix(Matrix::from_ints({{0}})));
}

TEST_CASE("walk_lemke_graph preconditions") {
  const auto deg = make(Matrix::identity(2), Vector::from_ints({-1, -1}));
  const auto sk = enumerate_skeleton(deg);
  CHECK_FALSE(sk.nondegenerate);
  CHECK_THROWS_AS(walk_lemke_graph(deg, sk), ContractViolation);
  const auto triv = make(Matrix::identity(1), Vector::from_ints({1}));
  CHECK_THROWS_AS(walk_lemke_graph(triv, enumerate_skeleton(triv)), ContractViolation);
}

TEST_CASE("property: solution enumeration agrees with the skeleton and the verifier") {
  for (const auto& entry : testing::random_corpus(501, 200)) {
    const auto& ext = entry.instance;
    const auto sol = enumerate_solutions(ext.base());
    CHECK(std::is_sorted(sol.points.begin(), sol.points.end()));
    for (const auto& z : sol.points) CHECK(is_solution(ext.base(), z));
    // complementary vertices on z0 = 0 are exactly the vertex solutions
    std::vector<Vector> from_skeleton;
    for (const auto& v : enumerate_skeleton(ext).vertices)
      if (sgn(v.point.z0) == 0 && v.complementary) from_skeleton.push_back(v.point.z);
    CHECK(from_skeleton == sol.points);
  }
}

TEST_CASE("property: SPD matrices have no secondary directions") {
  for (const auto& entry : testing::spd_corpus(502, 60)) {
    const auto dirs = enumerate_directions(entry.instance);
    CHECK(dirs.type0.empty());
    CHECK(dirs.type1.empty());
    CHECK(secondary_rays(enumerate_skeleton(entry.instance)).empty());
  }
}

TEST_CASE("property: every Lemke ray is a complementary skeleton ray") {
  std::size_t rays = 0;
  for (const auto& entry : testing::random_corpus(503, 200)) {
    const auto o = lemke_solve(entry.instance);
    if (o.status != LemkeStatus::Ray) continue;
    ++rays;
    const auto sk = enumerate_skeleton(entry.instance);
    bool found = false;
    for (const auto* r : secondary_rays(sk)) {
      const auto& p = sk.vertices[r->vertex].point;
      found = found || (p.z == o.ray->vertex.z && p.z0 == o.ray->vertex.z0 && r->basis == o.ray->basis &&
                        r->direction.u == o.ray->direction.u && r->direction.u0 == o.ray->direction.u0);
    }
    CHECK(found);
    const auto dirs = enumerate_directions(entry.instance);
    CHECK(dirs.type0.size() + dirs.type1.size() > 0);
  }
  CHECK(rays > 0);
}
