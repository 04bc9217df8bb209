/* Copyright (C) 2026 The gmaderiv authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gmaderiv/field.hpp"

namespace gmaderiv {

/// Coordinate vector over a ground field.
using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec negated(const Vec& a);
Vec scaled(const Scalar& c, const Vec& v);
/// target += c * v, skipping work when c or an entry of v is zero.
void add_scaled(Vec& target, const Scalar& c, const Vec& v);

/// Dense matrix of exact field elements, row-major.
///
/// Shapes with zero rows or columns are legal; every entry shares the
/// matrix's field (enforced by set()).
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  /// Columns become the matrix columns; all must share one length.
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& value);

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;

  friend bool operator==(const Matrix& lhs, const Matrix& rhs);
  friend bool operator!=(const Matrix& lhs, const Matrix& rhs) { return !(lhs == rhs); }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Matrix-vector product.
Vec operator*(const Matrix& m, const Vec& x);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form with deterministic pivoting: columns are
/// scanned left to right and the first nonzero entry at or below the
/// current row becomes the pivot. Output is therefore byte-reproducible.
RrefResult rref(const Matrix& m);

/// Basis of {x : m x = 0} as column vectors, one per free column in
/// ascending column order. Always returns cols - rank vectors.
std::vector<Vec> nullspace_basis(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero. Throws DimensionError if b has the
/// wrong length.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace gmaderiv
