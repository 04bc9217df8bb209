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

#include "gmaderiv/algebra.hpp"

namespace gmaderiv {

/// Bimodule presented by action tensors.
///
/// left_action[i][m][k]:  (left-algebra basis i) . v_m = sum_k  _ v_k
/// right_action[m][j][k]: v_m . (right-algebra basis j) = sum_k _ v_k
///
/// The module and bimodule axioms are not checked here; they are part of
/// validate_context, which knows the acting algebras.
struct Bimodule {
  std::size_t dim;
  Tensor3 left_action;
  Tensor3 right_action;
};

/// Bilinear pairing as a tensor: value[x][y][k] is the k-th target
/// coordinate of the pairing applied to basis vectors x and y.
using Pairing = Tensor3;

/// The six-tuple (A, B, M, N, phi, psi): two algebras, an (A,B)-bimodule M,
/// a (B,A)-bimodule N, and pairings phi: M x N -> A, psi: N x M -> B.
///
/// Construction checks shapes, one common ground field, and that at least
/// one of M, N is nonzero. It does NOT check the context axioms: use
/// validate_context, which reports every violated identity, so that broken
/// contexts can be built and examined (e.g. by mutation tests).
class MoritaContext {
 public:
  MoritaContext(StructureAlgebra a, StructureAlgebra b, Bimodule m, Bimodule n, Pairing phi,
                Pairing psi);

  const Field& field() const { return a_.field(); }
  const StructureAlgebra& algebra_a() const { return a_; }
  const StructureAlgebra& algebra_b() const { return b_; }
  const Bimodule& module_m() const { return m_; }
  const Bimodule& module_n() const { return n_; }
  const Pairing& phi() const { return phi_; }
  const Pairing& psi() const { return psi_; }

  std::size_t dim_a() const { return a_.dim(); }
  std::size_t dim_b() const { return b_.dim(); }
  std::size_t dim_m() const { return m_.dim; }
  std::size_t dim_n() const { return n_.dim; }

  /// Action and pairing values on coordinate vectors.
  Vec m_left(const Vec& a, const Vec& v) const;    // a.v        in M
  Vec m_right(const Vec& v, const Vec& b) const;   // v.b        in M
  Vec n_left(const Vec& b, const Vec& w) const;    // b.w        in N
  Vec n_right(const Vec& w, const Vec& a) const;   // w.a        in N
  Vec pair_phi(const Vec& v, const Vec& w) const;  // phi(v, w)  in A
  Vec pair_psi(const Vec& w, const Vec& v) const;  // psi(w, v)  in B

  /// Replaces one pairing entry; used by mutation tests.
  void corrupt_phi(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  void corrupt_psi(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

 private:
  StructureAlgebra a_, b_;
  Bimodule m_, n_;
  Pairing phi_, psi_;
};

/// One violated identity, e.g. {"phi balanced", {m, b, n}}.
struct ValidationIssue {
  std::string identity;
  std::vector<std::size_t> indices;
  std::string describe() const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks, on all basis tuples: the module axioms of M and N, balancedness
/// of both pairings, the bimodule-homomorphism laws, and the two
/// associativity-diagram identities phi(m,n).m' = m.psi(n,m') and
/// psi(n,m).n' = n.phi(m,n'). Every violation is listed with its indices.
ValidationReport validate_context(const MoritaContext& ctx);

enum class PairingSide { Phi, Psi };

/// Nondegeneracy of one pairing: no nonzero element of either source side
/// pairs to zero against the whole other side. Decided by the rank of the
/// two flattenings of the pairing tensor.
bool is_nondegenerate(const MoritaContext& ctx, PairingSide which);

enum class WhichModule { M, N };
enum class ActionSide { Left, Right };

/// True iff the action of the corresponding algebra on the module has a
/// zero kernel, computed as a nullspace.
bool is_faithful(const MoritaContext& ctx, WhichModule module, ActionSide side);

}  // namespace gmaderiv
