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
#include <string>
#include <vector>

#include "gmaderiv/matrix.hpp"
#include "gmaderiv/tensor.hpp"

namespace gmaderiv {

/// Finite-dimensional unital associative algebra presented by structure
/// constants: basis b_0..b_{d-1} with b_i b_j = sum_k c[i][j][k] b_k.
///
/// Construction validates the associativity law on every basis triple and
/// the unit law on every basis element, and throws AlgebraError naming a
/// violating triple otherwise. Elements are plain coordinate vectors;
/// instances are immutable and freely shareable.
class StructureAlgebra {
 public:
  StructureAlgebra(const Field& f, Tensor3 structure, Vec unit,
                   std::vector<std::string> basis_labels = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor3& structure() const { return structure_; }
  const Vec& unit() const { return unit_; }
  /// Basis labels are metadata only; empty when none were given.
  const std::vector<std::string>& labels() const { return labels_; }

  Vec zero_element() const { return zero_vec(field_, dim_); }
  Vec basis_element(std::size_t i) const;
  /// Coordinates of b_i b_j (a slice of the structure tensor).
  Vec basis_product(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the structure tensor; checks lengths.
  Vec multiply(const Vec& x, const Vec& y) const;

 private:
  void validate() const;

  Field field_;
  std::size_t dim_;
  Tensor3 structure_;
  Vec unit_;
  std::vector<std::string> labels_;
};

/// Basis of the center {z : z b_i = b_i z for all i}, computed as an
/// exact nullspace. Deterministic ordering.
std::vector<Vec> center_basis(const StructureAlgebra& alg);

/// Coefficient matrix of y -> x y - y x (column j = image of basis j).
Matrix inner_derivation(const StructureAlgebra& alg, const Vec& x);

/// Characteristic classification used to gate the structure-statement
/// verifiers: characteristic 2 fails their 2-torsion-freeness hypothesis.
enum class CharClass { Zero, OddPrime, Two };
CharClass characteristic_gate(const StructureAlgebra& alg);

}  // namespace gmaderiv
