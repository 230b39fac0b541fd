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

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcpnash {

/**
 * Exact rational scalar. GMP keeps every arithmetic result in lowest terms
 * with a positive denominator; values built from a (num, den) pair go through
 * make_rational(), which canonicalizes.
 */
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "+p", "-p" or "p/q" (q > 0 after sign handling). Throws
/// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

/// Decimal approximation rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& r, int digits);

inline int sign(const Rational& r) { return sgn(r); }

/** Dense vector of exact rationals. */
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : data_(n) {}
  Vector(std::initializer_list<Rational> values) : data_(values) {}
  explicit Vector(std::vector<Rational> values) : data_(std::move(values)) {}

  static Vector zeros(std::size_t n) { return Vector(n); }
  static Vector ones(std::size_t n);
  static Vector from_ints(std::initializer_list<long> values);

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Rational& operator[](std::size_t i) { return data_[i]; }
  const Rational& operator[](std::size_t i) const { return data_[i]; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  std::span<const Rational> values() const { return data_; }

  Rational sum() const;
  bool is_nonnegative() const;
  bool is_positive() const;
  bool is_zero() const;

  /// Entries at the given positions, in the given order.
  Vector select(std::span<const std::size_t> idx) const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& s);
  Vector& operator/=(const Rational& s);

  friend bool operator==(const Vector& a, const Vector& b) { return a.data_ == b.data_; }
  /// Lexicographic; used for canonical ordering of result sets.
  friend bool operator<(const Vector& a, const Vector& b);

 private:
  std::vector<Rational> data_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector a);
Vector operator*(Vector a, const Rational& s);
Vector operator*(const Rational& s, Vector a);
Vector operator/(Vector a, const Rational& s);
Rational dot(const Vector& a, const Vector& b);
/// Componentwise product.
Vector hadamard(const Vector& a, const Vector& b);

/// "[a, b, c]"
std::string to_string(const Vector& v);
std::ostream& operator<<(std::ostream& os, const Vector& v);

/** Dense row-major matrix of exact rationals. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-wise initializer; throws ContractViolation on ragged rows.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  /// Order-preserving extraction; either index list may be a permutation.
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix transpose() const;

  bool is_positive() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator*(const Matrix& a, const Vector& x);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace lcpnash
