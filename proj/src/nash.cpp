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

#include "lcpnash/nash.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "lcpnash/errors.hpp"
#include "lcpnash/linalg.hpp"

namespace lcpnash {

SymmetricGame::SymmetricGame(Matrix cost) : cost_(std::move(cost)) {
  if (!cost_.is_square() || cost_.rows() == 0) throw ContractViolation("cost matrix must be square and nonempty");
}

MixedProfile make_profile(const SymmetricGame& game, Vector x) {
  if (x.size() != game.size()) throw ContractViolation("profile has wrong dimension");
  if (!x.is_nonnegative() || x.sum() != 1) throw ContractViolation("profile is not on the simplex");
  Rational value = dot(x, game.cost() * x);
  return {std::move(x), std::move(value)};
}

bool is_sne(const SymmetricGame& game, const Vector& x) {
  if (x.size() != game.size()) return false;
  if (!x.is_nonnegative() || x.sum() != 1) return false;
  const Vector cx = game.cost() * x;
  const Rational value = dot(x, cx);
  for (std::size_t i = 0; i < cx.size(); ++i)
    if (cx[i] < value) return false;
  // x_i (C_i x - value) = 0 follows from the conditions above.
  for (std::size_t i = 0; i < cx.size(); ++i) {
    if (sgn(x[i] * (cx[i] - value)) != 0) throw std::logic_error("equilibrium complementarity self-check failed");
  }
  return true;
}

bool is_sne(const SymmetricGame& game, const MixedProfile& profile) {
  if (profile.value != dot(profile.x, game.cost() * profile.x)) return false;
  return is_sne(game, profile.x);
}

namespace {

// Candidates for one support bitmask.
void solve_support(const Matrix& c, std::uint32_t mask, std::vector<Equilibrium>& found) {
  const std::size_t n = c.rows();
  std::vector<std::size_t> in, out;
  for (std::size_t i = 0; i < n; ++i) (mask >> i & 1u ? in : out).push_back(i);
  const std::size_t s0 = in.front();

  // columns: x_S (in.size()) then slacks t_j (out.size()); rows as documented.
  Matrix a(n, n);
  Vector b(n);
  std::size_t row = 0;
  for (std::size_t k = 1; k < in.size(); ++k, ++row)
    for (std::size_t col = 0; col < in.size(); ++col) a(row, col) = c(in[k], in[col]) - c(s0, in[col]);
  for (std::size_t k = 0; k < out.size(); ++k, ++row) {
    for (std::size_t col = 0; col < in.size(); ++col) a(row, col) = c(out[k], in[col]) - c(s0, in[col]);
    a(row, in.size() + k) = -1;
  }
  for (std::size_t col = 0; col < in.size(); ++col) a(row, col) = 1;
  b[row] = 1;

  auto emit = [&](const Vector& sol, bool isolated) {
    Vector x(n);
    for (std::size_t k = 0; k < in.size(); ++k) x[in[k]] = sol[k];
    found.push_back({{std::move(x), 0}, isolated});
  };

  if (auto sol = solve_linear(a, b)) {
    if (sol->is_nonnegative()) emit(*sol, true);
    return;
  }
  const auto vertices = enumerate_bfs(a, b);
  const bool isolated = vertices.size() == 1;
  for (const auto& v : vertices) emit(v, isolated);
}

}  // namespace

std::vector<Equilibrium> enumerate_sne(const SymmetricGame& game, const SupportEnumerationOptions& options) {
  const std::size_t n = game.size();
  if (n > options.max_strategies || n > 30) {
    throw SizeError("support enumeration capped at " + std::to_string(options.max_strategies) +
                    " strategies, game has " + std::to_string(n));
  }
  const std::uint32_t supports = (std::uint32_t{1} << n) - 1;
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = std::min<unsigned>(threads, supports);

  std::vector<std::vector<Equilibrium>> partial(threads);
  auto work = [&](unsigned id) {
    for (std::uint32_t mask = 1 + id; mask <= supports; mask += threads) solve_support(game.cost(), mask, partial[id]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
  }

  std::vector<Equilibrium> all;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), [](const Equilibrium& a, const Equilibrium& b) {
    if (a.profile.x == b.profile.x) return a.isolated < b.isolated;
    return a.profile.x < b.profile.x;
  });
  // The same point may come from several supports; it is isolated only if
  // no support saw it as part of a larger piece.
  std::vector<Equilibrium> unique;
  for (auto& e : all) {
    if (!unique.empty() && unique.back().profile.x == e.profile.x) continue;
    unique.push_back(std::move(e));
  }
  for (auto& e : unique) {
    e.profile = make_profile(game, std::move(e.profile.x));
    if (!is_sne(game, e.profile)) throw std::logic_error("support enumeration produced a non-equilibrium");
  }
  return unique;
}

SymmetricGame symmetrize(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ContractViolation("symmetrize: A and B differ in shape");
  if (!a.is_positive() || !b.is_positive()) throw PositivityError("symmetrize: payoff matrices must be positive");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix c(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      c(i, m + j) = a(i, j);
      c(m + j, i) = b(i, j);
    }
  return SymmetricGame(std::move(c));
}

}  // namespace lcpnash
