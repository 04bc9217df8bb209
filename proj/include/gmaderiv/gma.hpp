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

#include "gmaderiv/morita.hpp"

namespace gmaderiv {

enum class Corner { A, M, N, B };

/// The 2x2 generalized matrix algebra of a Morita context, realized as a
/// StructureAlgebra on the concatenated basis.
///
/// Basis ordering is fixed as (A-block, M-block, N-block, B-block); all
/// component extraction and the serialization format depend on it.
class GeneralizedMatrixAlgebra {
 public:
  GeneralizedMatrixAlgebra(MoritaContext ctx, StructureAlgebra algebra);

  const MoritaContext& context() const { return ctx_; }
  const StructureAlgebra& algebra() const { return alg_; }
  const Field& field() const { return alg_.field(); }
  std::size_t dim() const { return alg_.dim(); }

  std::size_t corner_dim(Corner c) const;
  std::size_t corner_offset(Corner c) const;

  /// Zero-pads a corner element into a full coordinate vector.
  Vec embed(Corner c, const Vec& element) const;
  /// Slice of a full coordinate vector belonging to one corner.
  Vec project(const Vec& g, Corner c) const;

  /// The idempotents 1_A + 0 and 0 + 1_B; e11 + e22 = 1.
  const Vec& e11() const { return e11_; }
  const Vec& e22() const { return e22_; }

 private:
  MoritaContext ctx_;
  StructureAlgebra alg_;
  Vec e11_, e22_;
};

/// Assembles the structure constants of [A M; N B] blockwise from the
/// context's algebras, actions and pairings:
///
///   [a m; n b] [a' m'; n' b'] = [a a' + phi(m, n'),  a.m' + m.b';
///                                n.a' + b.n',        psi(n, m') + b b']
///
/// The result is validated by the StructureAlgebra constructor; since a
/// context that passes validate_context always yields an associative
/// algebra, an associativity failure here means the caller skipped
/// validation, and surfaces as AlgebraError.
GeneralizedMatrixAlgebra build_gma(const MoritaContext& ctx);

}  // namespace gmaderiv
