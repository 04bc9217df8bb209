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

#include <map>
#include <string>

#include "gmaderiv/canonical.hpp"

namespace gmaderiv {

// --- building-block algebras ----------------------------------------------

/// The ground field as a 1-dimensional algebra.
StructureAlgebra field_algebra(const Field& f);
/// Upper triangular n x n matrices, basis e_{rs} (r <= s) in row-major
/// order, labels "e{r+1}{s+1}".
StructureAlgebra upper_triangular_algebra(std::size_t n, const Field& f);
/// Full n x n matrix algebra, basis e_{rs} in row-major order.
StructureAlgebra full_matrix_algebra(std::size_t n, const Field& f);
/// k-fold direct sum of the ground field (componentwise product).
StructureAlgebra direct_sum_fields(const Field& f, std::size_t k);

// --- context constructors ---------------------------------------------------

/// Zero-pairing context from validated building blocks; throws unless at
/// least one module is nonzero. Context axioms are still the caller's to
/// check via validate_context (mutation tests rely on this).
MoritaContext trivial_gma(StructureAlgebra a, StructureAlgebra b, Bimodule m, Bimodule n);

/// Slices the upper triangular algebra T_n as A = T_{n-1}, B = the field,
/// M = the last-column space, N = 0. Both pairings are zero, and M is
/// faithful on both sides. Requires n >= 2.
MoritaContext upper_triangular_context(std::size_t n, const Field& f);

/// A = B = M = N = the ground field with pairings phi(m, n) = s m n and
/// psi(n, m) = s n m. Valid for every s; s = 0 is the 4-dimensional
/// trivial instance and s = 1 the full 2x2 matrix algebra.
MoritaContext s_deformed_m2(const Field& f, const Scalar& s);

/// Finite group acting on an algebra by automorphisms. Element 0 is the
/// identity; table[g][h] is the product gh; matrices[g] is the coordinate
/// matrix of the automorphism attached to g.
struct GroupAction {
  std::vector<std::vector<std::size_t>> table;
  std::vector<Matrix> matrices;
};

/// Checks that the table is a group with element 0 as identity, that
/// g -> matrices[g] is a homomorphism, and that every matrix is a unital
/// algebra automorphism of alg. Throws AlgebraError on failure.
void validate_group_action(const StructureAlgebra& alg, const GroupAction& action);

/// The skew-group context: corner algebras A^G (fixed ring) and A*G
/// (skew group algebra with product a g . b h = a b^{g^-1} gh), M = N = A
/// with the displayed module actions, and pairings
/// phi(x, y) = sum_g (x y)^g and psi(x, y) = sum_g x y^{g^-1} g.
/// The returned context passes validate_context; a failure there would
/// mean the construction was fed an action incompatible with the product
/// rule, and is reported by the caller's validation.
MoritaContext skew_group_context(const StructureAlgebra& a, const GroupAction& action);

/// The swap action of the 2-element group on the field^2 algebra; the
/// smallest skew-group instance with both pairings nondegenerate.
MoritaContext c2_swap_context(const Field& f);

// --- distinguished maps -----------------------------------------------------

/// (a, m, n, b) -> (0, m + n, m - n, 0): a Jordan derivation of every
/// zero-pairing instance with dim M = dim N (coordinate identification),
/// and not a derivation. Equals theta1 + theta2 exactly.
LinearMap gamma_jord(const GeneralizedMatrixAlgebra& g);
/// (a, m, n, b) -> (0, m, -n, 0): a derivation.
LinearMap theta1(const GeneralizedMatrixAlgebra& g);
/// (a, m, n, b) -> (0, n, m, 0): an antiderivation of zero-pairing
/// instances.
LinearMap theta2(const GeneralizedMatrixAlgebra& g);

// --- fixture registry ---------------------------------------------------------

using GalleryParams = std::map<std::string, std::string>;

/// Construct a fixture by name: "trivial", "s-deformed", "triangular",
/// "skew-c2" (alias "trivial-q"). Recognized parameters: field=q|gf<p>,
/// s=<scalar> (s-deformed), n=<int> (triangular). Unknown names or
/// parameters throw std::invalid_argument.
MoritaContext make_gallery(const std::string& name, const GalleryParams& params = {});

struct GalleryPreset {
  std::string name;
  GalleryParams params;
  std::string label() const;
};

/// The fixed list of fixture instances used by the test and certification
/// suites ("every gallery fixture").
std::vector<GalleryPreset> gallery_presets();

}  // namespace gmaderiv
