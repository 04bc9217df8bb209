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
#include "gmaderiv/algebra.hpp"

#include <utility>

namespace gmaderiv {

StructureAlgebra::StructureAlgebra(const Field& f, Tensor3 structure, Vec unit,
                                   std::vector<std::string> basis_labels)
    : field_(f),
      dim_(structure.dim0()),
      structure_(std::move(structure)),
      unit_(std::move(unit)),
      labels_(std::move(basis_labels)) {
  if (structure_.field() != field_)
    throw FieldMismatchError("structure tensor field differs from algebra field");
  if (structure_.dim1() != dim_ || structure_.dim2() != dim_)
    throw DimensionError("structure tensor is not cubical");
  if (unit_.size() != dim_) throw DimensionError("unit coordinate vector has wrong length");
  if (!labels_.empty() && labels_.size() != dim_)
    throw DimensionError("basis label count differs from dimension");
  validate();
}

Vec StructureAlgebra::basis_element(std::size_t i) const {
  Vec v = zero_element();
  v[i] = Scalar::one(field_);
  return v;
}

Vec StructureAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v = zero_element();
  for (std::size_t k = 0; k < dim_; ++k) v[k] = structure_.at(i, j, k);
  return v;
}

Vec StructureAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionError("element length does not match algebra dimension");
  Vec r = zero_element();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = structure_.at(i, j, k);
        if (c.is_zero()) continue;
        r[k] += xy * c;
      }
    }
  }
  return r;
}

void StructureAlgebra::validate() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (multiply(unit_, basis_element(i)) != basis_element(i))
      throw AlgebraError("unit law fails: 1 * b" + std::to_string(i) + " != b" + std::to_string(i),
                         i, i, i);
    if (multiply(basis_element(i), unit_) != basis_element(i))
      throw AlgebraError("unit law fails: b" + std::to_string(i) + " * 1 != b" + std::to_string(i),
                         i, i, i);
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec ij = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        const Vec lhs = multiply(ij, basis_element(k));
        const Vec rhs = multiply(basis_element(i), basis_product(j, k));
        if (lhs != rhs)
          throw AlgebraError("associativity fails at basis triple (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ", " + std::to_string(k) + ")",
                             i, j, k);
      }
    }
}

std::vector<Vec> center_basis(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim();
  // Unknown z = sum_j z_j b_j; one equation per (basis i, coordinate k).
  Matrix constraints(alg.field(), d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j)
        constraints.at(i * d + k, j) =
            alg.structure().at(j, i, k) - alg.structure().at(i, j, k);
  return nullspace_basis(constraints);
}

Matrix inner_derivation(const StructureAlgebra& alg, const Vec& x) {
  const std::size_t d = alg.dim();
  Matrix m(alg.field(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vec col = sub(alg.multiply(x, alg.basis_element(j)),
                        alg.multiply(alg.basis_element(j), x));
    for (std::size_t i = 0; i < d; ++i) m.at(i, j) = col[i];
  }
  return m;
}

CharClass characteristic_gate(const StructureAlgebra& alg) {
  const std::uint64_t p = alg.field().characteristic();
  if (p == 0) return CharClass::Zero;
  if (p == 2) return CharClass::Two;
  return CharClass::OddPrime;
}

}  // namespace gmaderiv
