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

#include "lcpnash/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "lcpnash/errors.hpp"

namespace lcpnash {

Rational make_rational(long num, long den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = abs(r.get_num()) * scale * 2 + r.get_den();
  mpz_class den = r.get_den() * 2;
  mpz_class scaled = num / den;  // floor(|r| * 10^k + 1/2)
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(r) < 0 && scaled != 0) s.insert(0, "-");
  return s;
}

// ---------------------------------------------------------------- Vector

Vector Vector::ones(std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = 1;
  return v;
}

Vector Vector::from_ints(std::initializer_list<long> values) {
  Vector v;
  v.data_.reserve(values.size());
  for (long x : values) v.data_.emplace_back(x);
  return v;
}

Rational Vector::sum() const {
  Rational s = 0;
  for (const auto& x : data_) s += x;
  return s;
}

bool Vector::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

bool Vector::is_positive() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) > 0; });
}

bool Vector::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector Vector::select(std::span<const std::size_t> idx) const {
  Vector out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out[k] = data_.at(idx[k]);
  return out;
}

Vector& Vector::operator+=(const Vector& other) {
  if (other.size() != size()) throw ContractViolation("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (other.size() != size()) throw ContractViolation("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Vector& Vector::operator/=(const Rational& s) {
  if (sgn(s) == 0) throw ContractViolation("division by zero");
  for (auto& x : data_) x /= s;
  return *this;
}

bool operator<(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator-(Vector a) {
  for (auto& x : a) x = -x;
  return a;
}
Vector operator*(Vector a, const Rational& s) { return a *= s; }
Vector operator*(const Rational& s, Vector a) { return a *= s; }
Vector operator/(Vector a, const Rational& s) { return a /= s; }

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ContractViolation("vector dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector hadamard(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ContractViolation("vector dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

std::string to_string(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << to_string(v); }

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractViolation("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols_) throw ContractViolation("ragged matrix initializer");
    std::size_t c = 0;
    for (long x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ContractViolation("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) throw ContractViolation("submatrix index out of range");
      out(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_positive() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) > 0; });
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw ContractViolation("matrix-vector dimension mismatch");
  Vector y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ContractViolation("matrix product dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ContractViolation("matrix sum dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ", ";
    s += to_string(m.row(r));
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << to_string(m); }

}  // namespace lcpnash
