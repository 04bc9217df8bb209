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
#include "gmaderiv/morita.hpp"

#include <utility>

namespace gmaderiv {

namespace {

// result_k = sum_{i,j} x_i y_j t[i][j][k]
Vec contract(const Tensor3& t, const Vec& x, const Vec& y) {
  if (x.size() != t.dim0() || y.size() != t.dim1())
    throw DimensionError("tensor contraction operand length mismatch");
  Vec r = zero_vec(t.field(), t.dim2());
  for (std::size_t i = 0; i < t.dim0(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.dim1(); ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < t.dim2(); ++k) {
        const Scalar& c = t.at(i, j, k);
        if (c.is_zero()) continue;
        r[k] += xy * c;
      }
    }
  }
  return r;
}

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

}  // namespace

MoritaContext::MoritaContext(StructureAlgebra a, StructureAlgebra b, Bimodule m, Bimodule n,
                             Pairing phi, Pairing psi)
    : a_(std::move(a)),
      b_(std::move(b)),
      m_(std::move(m)),
      n_(std::move(n)),
      phi_(std::move(phi)),
      psi_(std::move(psi)) {
  const Field& f = a_.field();
  if (b_.field() != f || m_.left_action.field() != f || m_.right_action.field() != f ||
      n_.left_action.field() != f || n_.right_action.field() != f || phi_.field() != f ||
      psi_.field() != f)
    throw FieldMismatchError("context components are over different fields");
  if (m_.dim == 0 && n_.dim == 0)
    throw DimensionError("at least one of the bimodules M and N must be nonzero");
  const auto check = [](const Tensor3& t, std::size_t d0, std::size_t d1, std::size_t d2,
                        const char* what) {
    if (t.dim0() != d0 || t.dim1() != d1 || t.dim2() != d2)
      throw DimensionError(std::string("tensor shape mismatch for ") + what);
  };
  check(m_.left_action, a_.dim(), m_.dim, m_.dim, "left action on M");
  check(m_.right_action, m_.dim, b_.dim(), m_.dim, "right action on M");
  check(n_.left_action, b_.dim(), n_.dim, n_.dim, "left action on N");
  check(n_.right_action, n_.dim, a_.dim(), n_.dim, "right action on N");
  check(phi_, m_.dim, n_.dim, a_.dim(), "pairing phi");
  check(psi_, n_.dim, m_.dim, b_.dim(), "pairing psi");
}

Vec MoritaContext::m_left(const Vec& a, const Vec& v) const { return contract(m_.left_action, a, v); }
Vec MoritaContext::m_right(const Vec& v, const Vec& b) const { return contract(m_.right_action, v, b); }
Vec MoritaContext::n_left(const Vec& b, const Vec& w) const { return contract(n_.left_action, b, w); }
Vec MoritaContext::n_right(const Vec& w, const Vec& a) const { return contract(n_.right_action, w, a); }
Vec MoritaContext::pair_phi(const Vec& v, const Vec& w) const { return contract(phi_, v, w); }
Vec MoritaContext::pair_psi(const Vec& w, const Vec& v) const { return contract(psi_, w, v); }

void MoritaContext::corrupt_phi(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  phi_.set(i, j, k, value);
}

void MoritaContext::corrupt_psi(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  psi_.set(i, j, k, value);
}

std::string ValidationIssue::describe() const {
  std::string s = identity + " at (";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(indices[i]);
  }
  return s + ")";
}

ValidationReport validate_context(const MoritaContext& ctx) {
  ValidationReport report;
  const auto fail = [&report](std::string identity, std::vector<std::size_t> idx) {
    report.issues.push_back(ValidationIssue{std::move(identity), std::move(idx)});
  };

  const StructureAlgebra& A = ctx.algebra_a();
  const StructureAlgebra& B = ctx.algebra_b();
  const Field& f = ctx.field();
  const std::size_t dA = ctx.dim_a(), dB = ctx.dim_b(), dM = ctx.dim_m(), dN = ctx.dim_n();
  const auto eM = [&](std::size_t i) { return unit_vec(f, dM, i); };
  const auto eN = [&](std::size_t i) { return unit_vec(f, dN, i); };

  // Module axioms for M: left A-module, right B-module, commuting actions.
  for (std::size_t m = 0; m < dM; ++m) {
    if (ctx.m_left(A.unit(), eM(m)) != eM(m)) fail("M left unit: 1.v = v", {m});
    if (ctx.m_right(eM(m), B.unit()) != eM(m)) fail("M right unit: v.1 = v", {m});
  }
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t j = 0; j < dA; ++j)
      for (std::size_t m = 0; m < dM; ++m)
        if (ctx.m_left(A.basis_product(i, j), eM(m)) !=
            ctx.m_left(A.basis_element(i), ctx.m_left(A.basis_element(j), eM(m))))
          fail("M left action: (a a').v = a.(a'.v)", {i, j, m});
  for (std::size_t m = 0; m < dM; ++m)
    for (std::size_t i = 0; i < dB; ++i)
      for (std::size_t j = 0; j < dB; ++j)
        if (ctx.m_right(eM(m), B.basis_product(i, j)) !=
            ctx.m_right(ctx.m_right(eM(m), B.basis_element(i)), B.basis_element(j)))
          fail("M right action: v.(b b') = (v.b).b'", {m, i, j});
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t m = 0; m < dM; ++m)
      for (std::size_t j = 0; j < dB; ++j)
        if (ctx.m_right(ctx.m_left(A.basis_element(i), eM(m)), B.basis_element(j)) !=
            ctx.m_left(A.basis_element(i), ctx.m_right(eM(m), B.basis_element(j))))
          fail("M bimodule: (a.v).b = a.(v.b)", {i, m, j});

  // Module axioms for N: left B-module, right A-module.
  for (std::size_t n = 0; n < dN; ++n) {
    if (ctx.n_left(B.unit(), eN(n)) != eN(n)) fail("N left unit: 1.w = w", {n});
    if (ctx.n_right(eN(n), A.unit()) != eN(n)) fail("N right unit: w.1 = w", {n});
  }
  for (std::size_t i = 0; i < dB; ++i)
    for (std::size_t j = 0; j < dB; ++j)
      for (std::size_t n = 0; n < dN; ++n)
        if (ctx.n_left(B.basis_product(i, j), eN(n)) !=
            ctx.n_left(B.basis_element(i), ctx.n_left(B.basis_element(j), eN(n))))
          fail("N left action: (b b').w = b.(b'.w)", {i, j, n});
  for (std::size_t n = 0; n < dN; ++n)
    for (std::size_t i = 0; i < dA; ++i)
      for (std::size_t j = 0; j < dA; ++j)
        if (ctx.n_right(eN(n), A.basis_product(i, j)) !=
            ctx.n_right(ctx.n_right(eN(n), A.basis_element(i)), A.basis_element(j)))
          fail("N right action: w.(a a') = (w.a).a'", {n, i, j});
  for (std::size_t i = 0; i < dB; ++i)
    for (std::size_t n = 0; n < dN; ++n)
      for (std::size_t j = 0; j < dA; ++j)
        if (ctx.n_right(ctx.n_left(B.basis_element(i), eN(n)), A.basis_element(j)) !=
            ctx.n_left(B.basis_element(i), ctx.n_right(eN(n), A.basis_element(j))))
          fail("N bimodule: (b.w).a = b.(w.a)", {i, n, j});

  // Balancedness of the pairings.
  for (std::size_t m = 0; m < dM; ++m)
    for (std::size_t j = 0; j < dB; ++j)
      for (std::size_t n = 0; n < dN; ++n)
        if (ctx.pair_phi(ctx.m_right(eM(m), B.basis_element(j)), eN(n)) !=
            ctx.pair_phi(eM(m), ctx.n_left(B.basis_element(j), eN(n))))
          fail("phi balanced: phi(v.b, w) = phi(v, b.w)", {m, j, n});
  for (std::size_t n = 0; n < dN; ++n)
    for (std::size_t i = 0; i < dA; ++i)
      for (std::size_t m = 0; m < dM; ++m)
        if (ctx.pair_psi(ctx.n_right(eN(n), A.basis_element(i)), eM(m)) !=
            ctx.pair_psi(eN(n), ctx.m_left(A.basis_element(i), eM(m))))
          fail("psi balanced: psi(w.a, v) = psi(w, a.v)", {n, i, m});

  // Bimodule-homomorphism laws.
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t m = 0; m < dM; ++m)
      for (std::size_t n = 0; n < dN; ++n)
        if (ctx.pair_phi(ctx.m_left(A.basis_element(i), eM(m)), eN(n)) !=
            A.multiply(A.basis_element(i), ctx.pair_phi(eM(m), eN(n))))
          fail("phi left A-linear: phi(a.v, w) = a phi(v, w)", {i, m, n});
  for (std::size_t m = 0; m < dM; ++m)
    for (std::size_t n = 0; n < dN; ++n)
      for (std::size_t i = 0; i < dA; ++i)
        if (ctx.pair_phi(eM(m), ctx.n_right(eN(n), A.basis_element(i))) !=
            A.multiply(ctx.pair_phi(eM(m), eN(n)), A.basis_element(i)))
          fail("phi right A-linear: phi(v, w.a) = phi(v, w) a", {m, n, i});
  for (std::size_t i = 0; i < dB; ++i)
    for (std::size_t n = 0; n < dN; ++n)
      for (std::size_t m = 0; m < dM; ++m)
        if (ctx.pair_psi(ctx.n_left(B.basis_element(i), eN(n)), eM(m)) !=
            B.multiply(B.basis_element(i), ctx.pair_psi(eN(n), eM(m))))
          fail("psi left B-linear: psi(b.w, v) = b psi(w, v)", {i, n, m});
  for (std::size_t n = 0; n < dN; ++n)
    for (std::size_t m = 0; m < dM; ++m)
      for (std::size_t i = 0; i < dB; ++i)
        if (ctx.pair_psi(eN(n), ctx.m_right(eM(m), B.basis_element(i))) !=
            B.multiply(ctx.pair_psi(eN(n), eM(m)), B.basis_element(i)))
          fail("psi right B-linear: psi(w, v.b) = psi(w, v) b", {n, m, i});

  // The two associativity diagrams.
  for (std::size_t m = 0; m < dM; ++m)
    for (std::size_t n = 0; n < dN; ++n)
      for (std::size_t m2 = 0; m2 < dM; ++m2)
        if (ctx.m_left(ctx.pair_phi(eM(m), eN(n)), eM(m2)) !=
            ctx.m_right(eM(m), ctx.pair_psi(eN(n), eM(m2))))
          fail("diagram: phi(v, w).v' = v.psi(w, v')", {m, n, m2});
  for (std::size_t n = 0; n < dN; ++n)
    for (std::size_t m = 0; m < dM; ++m)
      for (std::size_t n2 = 0; n2 < dN; ++n2)
        if (ctx.n_left(ctx.pair_psi(eN(n), eM(m)), eN(n2)) !=
            ctx.n_right(eN(n), ctx.pair_phi(eM(m), eN(n2))))
          fail("diagram: psi(w, v).w' = w.phi(v, w')", {n, m, n2});

  return report;
}

bool is_nondegenerate(const MoritaContext& ctx, PairingSide which) {
  const Field& f = ctx.field();
  const Tensor3& t = which == PairingSide::Phi ? ctx.phi() : ctx.psi();
  // Left flattening: kernel over the first tensor index.
  Matrix left(f, t.dim1() * t.dim2(), t.dim0());
  for (std::size_t i = 0; i < t.dim0(); ++i)
    for (std::size_t j = 0; j < t.dim1(); ++j)
      for (std::size_t k = 0; k < t.dim2(); ++k) left.at(j * t.dim2() + k, i) = t.at(i, j, k);
  if (rank(left) != t.dim0()) return false;
  // Right flattening: kernel over the second tensor index.
  Matrix right(f, t.dim0() * t.dim2(), t.dim1());
  for (std::size_t j = 0; j < t.dim1(); ++j)
    for (std::size_t i = 0; i < t.dim0(); ++i)
      for (std::size_t k = 0; k < t.dim2(); ++k) right.at(i * t.dim2() + k, j) = t.at(i, j, k);
  return rank(right) == t.dim1();
}

bool is_faithful(const MoritaContext& ctx, WhichModule module, ActionSide side) {
  const Bimodule& mod = module == WhichModule::M ? ctx.module_m() : ctx.module_n();
  const Tensor3& action = side == ActionSide::Left ? mod.left_action : mod.right_action;
  // Rows: (module basis, output coordinate); columns: acting algebra basis.
  const bool left = side == ActionSide::Left;
  const std::size_t alg_dim = left ? action.dim0() : action.dim1();
  const std::size_t mod_dim = left ? action.dim1() : action.dim0();
  Matrix rep(ctx.field(), mod_dim * action.dim2(), alg_dim);
  for (std::size_t a = 0; a < alg_dim; ++a)
    for (std::size_t v = 0; v < mod_dim; ++v)
      for (std::size_t k = 0; k < action.dim2(); ++k)
        rep.at(v * action.dim2() + k, a) = left ? action.at(a, v, k) : action.at(v, a, k);
  return rank(rep) == alg_dim;
}

}  // namespace gmaderiv
