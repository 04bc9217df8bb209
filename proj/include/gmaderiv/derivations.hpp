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

#include <optional>

#include "gmaderiv/algebra.hpp"

namespace gmaderiv {

/// A linear self-map of an algebra as its coefficient matrix: column j is
/// the coordinate image of basis vector j.
using LinearMap = Matrix;

/// First violated instance of a defining identity, for error reports.
/// For the Jordan predicate, diagonal = true means the single-variable
/// identity failed at basis i (j == i); otherwise the polarized identity
/// failed at the pair (i, j), i < j.
struct IdentityViolation {
  std::size_t i, j;
  bool diagonal = false;
  std::string describe(const char* what) const;
};

/// Leibniz identity f(xy) = f(x)y + x f(y), checked on all basis pairs
/// (sufficient by bilinearity).
std::optional<IdentityViolation> derivation_violation(const StructureAlgebra& alg,
                                                      const LinearMap& f);
bool is_derivation(const StructureAlgebra& alg, const LinearMap& f);

/// Jordan identity f(x^2) = f(x)x + x f(x), decided by the basis-diagonal
/// checks q(b_i) = 0 together with the polarized checks
/// f(b_i b_j + b_j b_i) = f(b_i)b_j + b_i f(b_j) + f(b_j)b_i + b_j f(b_i)
/// for i < j. Since q(sum l_i b_i) = sum l_i^2 q(b_i) + sum_{i<j} l_i l_j
/// p(b_i, b_j), this is equivalent to q = 0 everywhere over any field,
/// including characteristic 2.
std::optional<IdentityViolation> jordan_violation(const StructureAlgebra& alg, const LinearMap& f);
bool is_jordan_derivation(const StructureAlgebra& alg, const LinearMap& f);

/// Reversed Leibniz identity f(xy) = f(y)x + y f(x) on all basis pairs.
std::optional<IdentityViolation> antiderivation_violation(const StructureAlgebra& alg,
                                                          const LinearMap& f);
bool is_antiderivation(const StructureAlgebra& alg, const LinearMap& f);

/// Direct evaluation of q(x) = f(x x) - f(x)x - x f(x); the independent
/// route the polarized Jordan predicate is validated against.
Vec jordan_defect(const StructureAlgebra& alg, const LinearMap& f, const Vec& x);

enum class MapKind { Derivation, Jordan, Antiderivation, Inner, Generic };

/// Linear subspace of maps on one algebra, held by a canonical basis:
/// the nonzero rows of the reduced row-echelon form of the row-major
/// flattened spanning set. Two subspaces are equal iff their canonical
/// bases are equal, and the basis is byte-reproducible.
struct MapSubspace {
  std::size_t algebra_dim;
  MapKind kind;
  std::vector<LinearMap> basis;
  std::size_t dimension() const { return basis.size(); }
};

MapSubspace span_of(const Field& f, std::size_t algebra_dim, const std::vector<LinearMap>& maps,
                    MapKind kind = MapKind::Generic);

/// Solution spaces of the linearized identity systems: each basis pair
/// contributes dim equations in the dim^2 matrix unknowns, and the space
/// is the exact nullspace. Every returned basis map passes the matching
/// predicate.
MapSubspace derivation_space(const StructureAlgebra& alg);
MapSubspace jordan_derivation_space(const StructureAlgebra& alg);
MapSubspace antiderivation_space(const StructureAlgebra& alg);
/// Span of the inner derivations ad(b_i); the classical lower bound for
/// derivation_space.
MapSubspace inner_derivation_space(const StructureAlgebra& alg);

MapSubspace subspace_sum(const MapSubspace& s1, const MapSubspace& s2);
MapSubspace subspace_intersection(const MapSubspace& s1, const MapSubspace& s2);
bool contains(const MapSubspace& s, const LinearMap& f);
bool same_subspace(const MapSubspace& s1, const MapSubspace& s2);

}  // namespace gmaderiv
