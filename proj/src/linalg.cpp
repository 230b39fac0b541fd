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

#include "lcpnash/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "lcpnash/errors.hpp"

namespace lcpnash {

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.size() != n) {
    throw ContractViolation("solve_linear: expected square matrix of side " + std::to_string(b.size()));
  }
  Matrix m = a;
  Vector x = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m(piv, col)) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
      std::swap(x[piv], x[col]);
    }
    const Rational inv = 1 / m(col, col);
    for (std::size_t c = col; c < n; ++c) m(col, c) *= inv;
    x[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
      x[r] -= f * x[col];
    }
  }
  return x;
}

Matrix diag_of(const Vector& d) {
  Matrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) <= 0) {
      throw CoveringVectorError("covering vector entry " + std::to_string(i + 1) + " is not positive: " +
                                to_string(d[i]));
    }
    out(i, i) = d[i];
  }
  return out;
}

RowEchelon rref(const Matrix& a) {
  RowEchelon out{a, {}};
  Matrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw ContractViolation("determinant of a non-square matrix");
  Matrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m(piv, col)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::vector<Vector> nullspace(const Matrix& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool columns_independent(const Matrix& a, std::span<const std::size_t> cols) {
  if (cols.size() > a.rows()) return false;
  std::vector<std::size_t> all_rows(a.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  return rank(a.submatrix(all_rows, cols)) == cols.size();
}

std::vector<std::size_t> complete_basis(const Matrix& a, std::vector<std::size_t> cols) {
  std::sort(cols.begin(), cols.end());
  if (!columns_independent(a, cols)) throw ContractViolation("complete_basis: starting columns are dependent");
  const std::size_t target = rank(a);
  for (std::size_t c = 0; c < a.cols() && cols.size() < target; ++c) {
    if (std::binary_search(cols.begin(), cols.end(), c)) continue;
    auto trial = cols;
    trial.insert(std::upper_bound(trial.begin(), trial.end(), c), c);
    if (columns_independent(a, trial)) cols = std::move(trial);
  }
  return cols;
}

std::vector<Vector> enumerate_bfs(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw ContractViolation("enumerate_bfs: dimension mismatch");
  // rref of [A | b] exposes both consistency and a full-row-rank subsystem.
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return {};
  const std::size_t r = e.pivots.size();
  const std::size_t n = a.cols();

  std::vector<Vector> out;
  if (r == 0) {
    out.push_back(Vector::zeros(n));
    return out;
  }
  std::vector<std::size_t> rows(r);
  std::iota(rows.begin(), rows.end(), 0);
  Vector rhs(r);
  for (std::size_t i = 0; i < r; ++i) rhs[i] = e.reduced(i, n);

  for_each_combination(n, r, [&](std::span<const std::size_t> cols) {
    auto sol = solve_linear(e.reduced.submatrix(rows, cols), rhs);
    if (sol && sol->is_nonnegative()) {
      Vector x(n);
      for (std::size_t k = 0; k < cols.size(); ++k) x[cols[k]] = (*sol)[k];
      out.push_back(std::move(x));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return;
    // advance to the next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(acc);
}

}  // namespace lcpnash
