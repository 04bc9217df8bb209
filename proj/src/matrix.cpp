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
#include "gmaderiv/matrix.hpp"

#include <utility>

namespace gmaderiv {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

namespace {
void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw DimensionError("vector lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " differ");
}
}  // namespace

Vec add(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec negated(const Vec& a) {
  Vec r = a;
  for (auto& s : r) s = -s;
  return r;
}

Vec scaled(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& s : r) s *= c;
  return r;
}

void add_scaled(Vec& target, const Scalar& c, const Vec& v) {
  require_same_size(target, v);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    target[i] += c * v[i];
  }
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  if (value.field() != field_)
    throw FieldMismatchError("entry over " + value.field().name() + " in matrix over " +
                             field_.name());
  data_[i * cols_ + j] = value;
}

Vec Matrix::row(std::size_t i) const {
  Vec r(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return r;
}

Vec Matrix::column(std::size_t j) const {
  Vec c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {
void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatchError("matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix shapes differ");
}
}  // namespace

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_shape(*this, rhs);
  Matrix r = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) += rhs.at(i, j);
  return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_shape(*this, rhs);
  Matrix r = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) -= rhs.at(i, j);
  return r;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (field_ != rhs.field()) throw FieldMismatchError("matrices over different fields");
  if (cols_ != rhs.rows()) throw DimensionError("inner dimensions differ");
  Matrix r(field_, rows_, rhs.cols());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& lik = at(i, k);
      if (lik.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        if (rhs.at(k, j).is_zero()) continue;
        r.at(i, j) += lik * rhs.at(k, j);
      }
    }
  return r;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.field_ != rhs.field_ || lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < lhs.data_.size(); ++i)
    if (lhs.data_[i] != rhs.data_[i]) return false;
  return true;
}

Vec operator*(const Matrix& m, const Vec& x) {
  if (x.size() != m.cols()) throw DimensionError("vector length does not match matrix columns");
  Vec r = zero_vec(m.field(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m.at(i, j).is_zero()) continue;
      r[i] += m.at(i, j) * x[j];
    }
  }
  return r;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(pivot, j));
    const Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (a.at(r, j).is_zero()) continue;
      a.at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar factor = a.at(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (a.at(r, j).is_zero()) continue;
        a.at(i, j) -= factor * a.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

std::vector<Vec> nullspace_basis(const Matrix& m) {
  const RrefResult red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivot_columns) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = zero_vec(m.field(), cols);
    v[fc] = Scalar::one(m.field());
    for (std::size_t k = 0; k < red.pivot_columns.size(); ++k)
      v[red.pivot_columns[k]] = -red.reduced.at(k, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side has wrong length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.set(i, m.cols(), b[i]);
  }
  const RrefResult red = rref(aug);
  for (std::size_t c : red.pivot_columns)
    if (c == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t k = 0; k < red.pivot_columns.size(); ++k)
    x[red.pivot_columns[k]] = red.reduced.at(k, m.cols());
  return x;
}

}  // namespace gmaderiv
