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
#include "gmaderiv/canonical.hpp"

#include <functional>
#include <utility>

namespace gmaderiv {

JordanCanonicalForm JordanCanonicalForm::zero(const GeneralizedMatrixAlgebra& g) {
  const Field& f = g.field();
  const std::size_t dA = g.corner_dim(Corner::A), dM = g.corner_dim(Corner::M),
                    dN = g.corner_dim(Corner::N), dB = g.corner_dim(Corner::B);
  return JordanCanonicalForm{zero_vec(f, dM), zero_vec(f, dN), Matrix(f, dA, dA),
                             Matrix(f, dA, dB), Matrix(f, dM, dM), Matrix(f, dM, dN),
                             Matrix(f, dN, dM), Matrix(f, dN, dN), Matrix(f, dB, dA),
                             Matrix(f, dB, dB)};
}

namespace {

void require_form_shape(const GeneralizedMatrixAlgebra& g, const JordanCanonicalForm& form) {
  const std::size_t dA = g.corner_dim(Corner::A), dM = g.corner_dim(Corner::M),
                    dN = g.corner_dim(Corner::N), dB = g.corner_dim(Corner::B);
  const auto shape = [](const Matrix& m, std::size_t r, std::size_t c, const char* name) {
    if (m.rows() != r || m.cols() != c)
      throw DimensionError(std::string("component ") + name + " has the wrong shape");
  };
  if (form.m0.size() != dM || form.n0.size() != dN)
    throw DimensionError("m0 or n0 has the wrong length");
  shape(form.delta1, dA, dA, "delta1");
  shape(form.delta4, dA, dB, "delta4");
  shape(form.tau2, dM, dM, "tau2");
  shape(form.tau3, dM, dN, "tau3");
  shape(form.nu2, dN, dM, "nu2");
  shape(form.nu3, dN, dN, "nu3");
  shape(form.mu1, dB, dA, "mu1");
  shape(form.mu4, dB, dB, "mu4");
}

}  // namespace

JordanCanonicalForm extract_jordan_components(const GeneralizedMatrixAlgebra& g,
                                              const LinearMap& f) {
  if (const auto v = jordan_violation(g.algebra(), f))
    throw PreconditionError("map is not a Jordan derivation: " +
                            v->describe("the Jordan constraint"));
  const std::size_t dA = g.corner_dim(Corner::A), dM = g.corner_dim(Corner::M),
                    dN = g.corner_dim(Corner::N), dB = g.corner_dim(Corner::B);
  JordanCanonicalForm form = JordanCanonicalForm::zero(g);

  const Vec fe11 = f * g.e11();
  form.m0 = g.project(fe11, Corner::M);
  form.n0 = g.project(fe11, Corner::N);

  const Field& field = g.field();
  const auto corner_basis = [&field](std::size_t d, std::size_t i) {
    Vec v = zero_vec(field, d);
    v[i] = Scalar::one(field);
    return v;
  };
  const auto fill_column = [](Matrix& target, std::size_t col, const Vec& value) {
    for (std::size_t r = 0; r < target.rows(); ++r) target.at(r, col) = value[r];
  };

  for (std::size_t i = 0; i < dA; ++i) {
    const Vec img = f * g.embed(Corner::A, corner_basis(dA, i));
    fill_column(form.delta1, i, g.project(img, Corner::A));
    fill_column(form.mu1, i, g.project(img, Corner::B));
  }
  for (std::size_t j = 0; j < dB; ++j) {
    const Vec img = f * g.embed(Corner::B, corner_basis(dB, j));
    fill_column(form.delta4, j, g.project(img, Corner::A));
    fill_column(form.mu4, j, g.project(img, Corner::B));
  }
  for (std::size_t m = 0; m < dM; ++m) {
    const Vec img = f * g.embed(Corner::M, corner_basis(dM, m));
    fill_column(form.tau2, m, g.project(img, Corner::M));
    fill_column(form.nu2, m, g.project(img, Corner::N));
  }
  for (std::size_t n = 0; n < dN; ++n) {
    const Vec img = f * g.embed(Corner::N, corner_basis(dN, n));
    fill_column(form.tau3, n, g.project(img, Corner::M));
    fill_column(form.nu3, n, g.project(img, Corner::N));
  }
  return form;
}

LinearMap rebuild_from_form(const GeneralizedMatrixAlgebra& g, const JordanCanonicalForm& form) {
  require_form_shape(g, form);
  const MoritaContext& ctx = g.context();
  const Field& field = g.field();
  const std::size_t dA = g.corner_dim(Corner::A), dM = g.corner_dim(Corner::M),
                    dN = g.corner_dim(Corner::N), dB = g.corner_dim(Corner::B);
  LinearMap out(field, g.dim(), g.dim());

  const auto corner_basis = [&field](std::size_t d, std::size_t i) {
    Vec v = zero_vec(field, d);
    v[i] = Scalar::one(field);
    return v;
  };
  const auto set_column = [&g, &out](std::size_t col, const Vec& a_part, const Vec& m_part,
                                     const Vec& n_part, const Vec& b_part) {
    Vec full = g.embed(Corner::A, a_part);
    const Vec m_full = g.embed(Corner::M, m_part);
    const Vec n_full = g.embed(Corner::N, n_part);
    const Vec b_full = g.embed(Corner::B, b_part);
    for (std::size_t r = 0; r < full.size(); ++r)
      full[r] += m_full[r] + n_full[r] + b_full[r];
    for (std::size_t r = 0; r < full.size(); ++r) out.at(r, col) = full[r];
  };

  for (std::size_t i = 0; i < dA; ++i) {
    const Vec a = corner_basis(dA, i);
    set_column(g.corner_offset(Corner::A) + i, form.delta1.column(i), ctx.m_left(a, form.m0),
               ctx.n_right(form.n0, a), form.mu1.column(i));
  }
  for (std::size_t m = 0; m < dM; ++m) {
    const Vec v = corner_basis(dM, m);
    set_column(g.corner_offset(Corner::M) + m, negated(ctx.pair_phi(v, form.n0)),
               form.tau2.column(m), form.nu2.column(m), ctx.pair_psi(form.n0, v));
  }
  for (std::size_t n = 0; n < dN; ++n) {
    const Vec w = corner_basis(dN, n);
    set_column(g.corner_offset(Corner::N) + n, negated(ctx.pair_phi(form.m0, w)),
               form.tau3.column(n), form.nu3.column(n), ctx.pair_psi(w, form.m0));
  }
  for (std::size_t j = 0; j < dB; ++j) {
    const Vec b = corner_basis(dB, j);
    set_column(g.corner_offset(Corner::B) + j, form.delta4.column(j),
               negated(ctx.m_right(form.m0, b)), negated(ctx.n_left(b, form.n0)),
               form.mu4.column(j));
  }
  return out;
}

const char* form_rule_id(FormRule rule) {
  switch (rule) {
    case FormRule::Derivation31: return "3.1";
    case FormRule::Jordan32: return "3.2";
    case FormRule::Jordan33: return "3.3";
    case FormRule::Antiderivation36: return "3.6";
  }
  return "?";
}

std::optional<FormRule> form_rule_from_id(const std::string& id) {
  if (id == "3.1") return FormRule::Derivation31;
  if (id == "3.2") return FormRule::Jordan32;
  if (id == "3.3") return FormRule::Jordan33;
  if (id == "3.6") return FormRule::Antiderivation36;
  return std::nullopt;
}

bool ConditionReport::ok() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

std::vector<const ConditionCheck*> ConditionReport::failures() const {
  std::vector<const ConditionCheck*> out;
  for (const auto& c : checks)
    if (!c.holds) out.push_back(&c);
  return out;
}

namespace {

using Witness = std::optional<std::vector<std::size_t>>;

// Verification helpers shared by the four form statements. Each checker
// returns the first failing basis tuple, or nullopt when the identity
// holds everywhere.
struct ConditionContext {
  const GeneralizedMatrixAlgebra& g;
  const JordanCanonicalForm& form;
  const MoritaContext& ctx;
  const StructureAlgebra& A;
  const StructureAlgebra& B;
  std::size_t dA, dM, dN, dB;
  ConditionReport report;

  ConditionContext(const GeneralizedMatrixAlgebra& g_, const JordanCanonicalForm& form_,
                   FormRule rule)
      : g(g_),
        form(form_),
        ctx(g_.context()),
        A(g_.context().algebra_a()),
        B(g_.context().algebra_b()),
        dA(g_.corner_dim(Corner::A)),
        dM(g_.corner_dim(Corner::M)),
        dN(g_.corner_dim(Corner::N)),
        dB(g_.corner_dim(Corner::B)) {
    report.rule = rule;
  }

  Vec basis(std::size_t d, std::size_t i) const {
    Vec v = zero_vec(g.field(), d);
    v[i] = Scalar::one(g.field());
    return v;
  }

  void record(const std::string& id, const std::string& statement, Witness w) {
    report.checks.push_back(ConditionCheck{id, statement, !w.has_value(),
                                           w.has_value() ? *w : std::vector<std::size_t>{}});
  }

  // Component must vanish because the form has no slot for it.
  void shape(const std::string& id, const std::string& name, const Matrix& comp) {
    Witness w;
    for (std::size_t r = 0; r < comp.rows() && !w; ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c)
        if (!comp.at(r, c).is_zero()) {
          w = std::vector<std::size_t>{r, c};
          break;
        }
    record(id, name + " = 0 (no slot in this form)", w);
  }

  static Witness from_violation(const std::optional<IdentityViolation>& v) {
    if (!v) return std::nullopt;
    if (v->diagonal) return std::vector<std::size_t>{v->i};
    return std::vector<std::size_t>{v->i, v->j};
  }

  // First pair (i, j) with i < n1, j < n2 failing pred.
  template <typename Pred>
  static Witness pairs(std::size_t n1, std::size_t n2, Pred&& pred) {
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j)
        if (!pred(i, j)) return std::vector<std::size_t>{i, j};
    return std::nullopt;
  }

  // First index i < n failing pred.
  template <typename Pred>
  static Witness each(std::size_t n, Pred&& pred) {
    for (std::size_t i = 0; i < n; ++i)
      if (!pred(i)) return std::vector<std::size_t>{i};
    return std::nullopt;
  }

  // Quadratic identity q(x) = 0 for all x of a d-dimensional space,
  // decided by the basis diagonal plus symmetric polarization
  // q(b_i + b_j) - q(b_i) - q(b_j).
  template <typename Diag, typename Polar>
  static Witness quadratic(std::size_t d, Diag&& diag, Polar&& polar) {
    for (std::size_t i = 0; i < d; ++i)
      if (!diag(i)) return std::vector<std::size_t>{i};
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (!polar(i, j)) return std::vector<std::size_t>{i, j};
    return std::nullopt;
  }

  // --- condition families -------------------------------------------------

  // delta1(phi(m,n)) = -delta4(psi(n,m)) + phi(tau2(m),n) + phi(m,nu3(n));
  // with_delta4 = false drops the delta4 term (forms without the slot).
  Witness pairing_compat_a(bool with_delta4) const {
    return pairs(dM, dN, [&](std::size_t m, std::size_t n) {
      const Vec vm = basis(dM, m), wn = basis(dN, n);
      Vec lhs = form.delta1 * ctx.pair_phi(vm, wn);
      Vec rhs = add(ctx.pair_phi(form.tau2 * vm, wn),
                    ctx.pair_phi(vm, form.nu3 * wn));
      if (with_delta4) rhs = sub(rhs, form.delta4 * ctx.pair_psi(wn, vm));
      return lhs == rhs;
    });
  }

  // mu4(psi(n,m)) = -mu1(phi(m,n)) + psi(n,tau2(m)) + psi(nu3(n),m)
  Witness pairing_compat_b(bool with_mu1) const {
    return pairs(dN, dM, [&](std::size_t n, std::size_t m) {
      const Vec vm = basis(dM, m), wn = basis(dN, n);
      Vec lhs = form.mu4 * ctx.pair_psi(wn, vm);
      Vec rhs = add(ctx.pair_psi(wn, form.tau2 * vm),
                    ctx.pair_psi(form.nu3 * wn, vm));
      if (with_mu1) rhs = sub(rhs, form.mu1 * ctx.pair_phi(vm, wn));
      return lhs == rhs;
    });
  }

  // tau2(a.m) = a.tau2(m) + delta1(a).m [+ m.mu1(a)]
  Witness tau2_left(bool with_mu1) const {
    return pairs(dA, dM, [&](std::size_t i, std::size_t m) {
      const Vec a = basis(dA, i), vm = basis(dM, m);
      const Vec lhs = form.tau2 * ctx.m_left(a, vm);
      Vec rhs = add(ctx.m_left(a, form.tau2 * vm),
                    ctx.m_left(form.delta1.column(i), vm));
      if (with_mu1) rhs = add(rhs, ctx.m_right(vm, form.mu1.column(i)));
      return lhs == rhs;
    });
  }

  // tau2(m.b) = tau2(m).b + m.mu4(b) [+ delta4(b).m]
  Witness tau2_right(bool with_delta4) const {
    return pairs(dM, dB, [&](std::size_t m, std::size_t j) {
      const Vec vm = basis(dM, m), b = basis(dB, j);
      const Vec lhs = form.tau2 * ctx.m_right(vm, b);
      Vec rhs = add(ctx.m_right(form.tau2 * vm, b),
                    ctx.m_right(vm, form.mu4.column(j)));
      if (with_delta4) rhs = add(rhs, ctx.m_left(form.delta4.column(j), vm));
      return lhs == rhs;
    });
  }

  // nu3(n.a) = nu3(n).a + n.delta1(a) [+ mu1(a).n]
  Witness nu3_right(bool with_mu1) const {
    return pairs(dN, dA, [&](std::size_t n, std::size_t i) {
      const Vec wn = basis(dN, n), a = basis(dA, i);
      const Vec lhs = form.nu3 * ctx.n_right(wn, a);
      Vec rhs = add(ctx.n_right(form.nu3 * wn, a),
                    ctx.n_right(wn, form.delta1.column(i)));
      if (with_mu1) rhs = add(rhs, ctx.n_left(form.mu1.column(i), wn));
      return lhs == rhs;
    });
  }

  // nu3(b.n) = b.nu3(n) + mu4(b).n [+ n.delta4(b)]
  Witness nu3_left(bool with_delta4) const {
    return pairs(dB, dN, [&](std::size_t j, std::size_t n) {
      const Vec b = basis(dB, j), wn = basis(dN, n);
      const Vec lhs = form.nu3 * ctx.n_left(b, wn);
      Vec rhs = add(ctx.n_left(b, form.nu3 * wn),
                    ctx.n_left(form.mu4.column(j), wn));
      if (with_delta4) rhs = add(rhs, ctx.n_right(wn, form.delta4.column(j)));
      return lhs == rhs;
    });
  }

  // tau3(n.a) = a.tau3(n) and tau3(b.n) = tau3(n).b
  Witness tau3_a_compat() const {
    return pairs(dN, dA, [&](std::size_t n, std::size_t i) {
      const Vec wn = basis(dN, n), a = basis(dA, i);
      return form.tau3 * ctx.n_right(wn, a) == ctx.m_left(a, form.tau3 * wn);
    });
  }
  Witness tau3_b_compat() const {
    return pairs(dB, dN, [&](std::size_t j, std::size_t n) {
      const Vec b = basis(dB, j), wn = basis(dN, n);
      return form.tau3 * ctx.n_left(b, wn) == ctx.m_right(form.tau3 * wn, b);
    });
  }

  // nu2(a.m) = nu2(m).a and nu2(m.b) = b.nu2(m)
  Witness nu2_a_compat() const {
    return pairs(dA, dM, [&](std::size_t i, std::size_t m) {
      const Vec a = basis(dA, i), vm = basis(dM, m);
      return form.nu2 * ctx.m_left(a, vm) == ctx.n_right(form.nu2 * vm, a);
    });
  }
  Witness nu2_b_compat() const {
    return pairs(dM, dB, [&](std::size_t m, std::size_t j) {
      const Vec vm = basis(dM, m), b = basis(dB, j);
      return form.nu2 * ctx.m_right(vm, b) == ctx.n_left(b, form.nu2 * vm);
    });
  }

  // psi(n, tau3(n)) = 0 and phi(tau3(n), n) = 0; quadratic when the two
  // occurrences are the same variable, all ordered pairs when primed.
  Witness psi_n_tau3(bool ordered_pairs) const {
    if (ordered_pairs)
      return pairs(dN, dN, [&](std::size_t n, std::size_t n2) {
        return is_zero_vec(ctx.pair_psi(basis(dN, n), form.tau3 * basis(dN, n2)));
      });
    return quadratic(
        dN,
        [&](std::size_t n) {
          return is_zero_vec(ctx.pair_psi(basis(dN, n), form.tau3 * basis(dN, n)));
        },
        [&](std::size_t n, std::size_t n2) {
          return is_zero_vec(add(ctx.pair_psi(basis(dN, n), form.tau3 * basis(dN, n2)),
                                 ctx.pair_psi(basis(dN, n2), form.tau3 * basis(dN, n))));
        });
  }
  Witness phi_tau3_n(bool ordered_pairs) const {
    if (ordered_pairs)
      return pairs(dN, dN, [&](std::size_t n, std::size_t n2) {
        return is_zero_vec(ctx.pair_phi(form.tau3 * basis(dN, n), basis(dN, n2)));
      });
    return quadratic(
        dN,
        [&](std::size_t n) {
          return is_zero_vec(ctx.pair_phi(form.tau3 * basis(dN, n), basis(dN, n)));
        },
        [&](std::size_t n, std::size_t n2) {
          return is_zero_vec(add(ctx.pair_phi(form.tau3 * basis(dN, n), basis(dN, n2)),
                                 ctx.pair_phi(form.tau3 * basis(dN, n2), basis(dN, n))));
        });
  }
  Witness phi_m_nu2(bool ordered_pairs) const {
    if (ordered_pairs)
      return pairs(dM, dM, [&](std::size_t m, std::size_t m2) {
        return is_zero_vec(ctx.pair_phi(basis(dM, m), form.nu2 * basis(dM, m2)));
      });
    return quadratic(
        dM,
        [&](std::size_t m) {
          return is_zero_vec(ctx.pair_phi(basis(dM, m), form.nu2 * basis(dM, m)));
        },
        [&](std::size_t m, std::size_t m2) {
          return is_zero_vec(add(ctx.pair_phi(basis(dM, m), form.nu2 * basis(dM, m2)),
                                 ctx.pair_phi(basis(dM, m2), form.nu2 * basis(dM, m))));
        });
  }
  Witness psi_nu2_m(bool ordered_pairs) const {
    if (ordered_pairs)
      return pairs(dM, dM, [&](std::size_t m, std::size_t m2) {
        return is_zero_vec(ctx.pair_psi(form.nu2 * basis(dM, m), basis(dM, m2)));
      });
    return quadratic(
        dM,
        [&](std::size_t m) {
          return is_zero_vec(ctx.pair_psi(form.nu2 * basis(dM, m), basis(dM, m)));
        },
        [&](std::size_t m, std::size_t m2) {
          return is_zero_vec(add(ctx.pair_psi(form.nu2 * basis(dM, m), basis(dM, m2)),
                                 ctx.pair_psi(form.nu2 * basis(dM, m2), basis(dM, m))));
        });
  }

  // comp(x^2) = 0 on a corner algebra (quadratic) and 2 comp(x) = 0.
  Witness vanish_on_squares(const StructureAlgebra& alg, const Matrix& comp) const {
    return quadratic(
        alg.dim(),
        [&](std::size_t i) { return is_zero_vec(comp * alg.basis_product(i, i)); },
        [&](std::size_t i, std::size_t j) {
          return is_zero_vec(
              comp * add(alg.basis_product(i, j), alg.basis_product(j, i)));
        });
  }
  Witness doubled_vanishes(const Matrix& comp) const {
    const Scalar two = Scalar::of(g.field(), 2);
    for (std::size_t c = 0; c < comp.cols(); ++c)
      for (std::size_t r = 0; r < comp.rows(); ++r)
        if (!(two * comp.at(r, c)).is_zero()) return std::vector<std::size_t>{r, c};
    return std::nullopt;
  }
};

}  // namespace

ConditionReport verify_conditions(const GeneralizedMatrixAlgebra& g,
                                  const JordanCanonicalForm& form, FormRule rule) {
  require_form_shape(g, form);
  ConditionContext c(g, form, rule);
  const std::string id = form_rule_id(rule);

  switch (rule) {
    case FormRule::Derivation31:
      c.shape(id + ".shape.delta4", "delta4", form.delta4);
      c.shape(id + ".shape.mu1", "mu1", form.mu1);
      c.shape(id + ".shape.tau3", "tau3", form.tau3);
      c.shape(id + ".shape.nu2", "nu2", form.nu2);
      c.record(id + ".1a", "delta1 is a derivation of A",
            ConditionContext::from_violation(derivation_violation(c.A, form.delta1)));
      c.record(id + ".1b", "delta1(phi(m,n)) = phi(tau2(m),n) + phi(m,nu3(n))",
            c.pairing_compat_a(false));
      c.record(id + ".2a", "mu4 is a derivation of B",
            ConditionContext::from_violation(derivation_violation(c.B, form.mu4)));
      c.record(id + ".2b", "mu4(psi(n,m)) = psi(n,tau2(m)) + psi(nu3(n),m)",
            c.pairing_compat_b(false));
      c.record(id + ".3a", "tau2(a.m) = a.tau2(m) + delta1(a).m", c.tau2_left(false));
      c.record(id + ".3b", "tau2(m.b) = tau2(m).b + m.mu4(b)", c.tau2_right(false));
      c.record(id + ".4a", "nu3(n.a) = nu3(n).a + n.delta1(a)", c.nu3_right(false));
      c.record(id + ".4b", "nu3(b.n) = b.nu3(n) + mu4(b).n", c.nu3_left(false));
      break;

    case FormRule::Jordan32:
      c.record(id + ".1a", "delta1 is a Jordan derivation on A",
            ConditionContext::from_violation(jordan_violation(c.A, form.delta1)));
      c.record(id + ".1b", "delta1(phi(m,n)) = -delta4(psi(n,m)) + phi(tau2(m),n) + phi(m,nu3(n))",
            c.pairing_compat_a(true));
      c.record(id + ".2a", "mu4 is a Jordan derivation on B",
            ConditionContext::from_violation(jordan_violation(c.B, form.mu4)));
      c.record(id + ".2b", "mu4(psi(n,m)) = -mu1(phi(m,n)) + psi(n,tau2(m)) + psi(nu3(n),m)",
            c.pairing_compat_b(true));
      c.record(id + ".3a", "delta4(b^2) = 0", c.vanish_on_squares(c.B, form.delta4));
      c.record(id + ".3b", "2 delta4(b) = 0", c.doubled_vanishes(form.delta4));
      c.record(id + ".3c", "mu1(a^2) = 0", c.vanish_on_squares(c.A, form.mu1));
      c.record(id + ".3d", "2 mu1(a) = 0", c.doubled_vanishes(form.mu1));
      c.record(id + ".4a", "tau2(a.m) = a.tau2(m) + delta1(a).m + m.mu1(a)", c.tau2_left(true));
      c.record(id + ".4b", "tau2(m.b) = tau2(m).b + m.mu4(b) + delta4(b).m", c.tau2_right(true));
      c.record(id + ".5a", "nu3(b.n) = b.nu3(n) + mu4(b).n + n.delta4(b)", c.nu3_left(true));
      c.record(id + ".5b", "nu3(n.a) = nu3(n).a + n.delta1(a) + mu1(a).n", c.nu3_right(true));
      c.record(id + ".6a", "tau3(n.a) = a.tau3(n)", c.tau3_a_compat());
      c.record(id + ".6b", "tau3(b.n) = tau3(n).b", c.tau3_b_compat());
      c.record(id + ".6c", "n.tau3(n) = 0", c.psi_n_tau3(false));
      c.record(id + ".6d", "tau3(n).n = 0", c.phi_tau3_n(false));
      c.record(id + ".7a", "nu2(a.m) = nu2(m).a", c.nu2_a_compat());
      c.record(id + ".7b", "nu2(m.b) = b.nu2(m)", c.nu2_b_compat());
      c.record(id + ".7c", "m.nu2(m) = 0", c.phi_m_nu2(false));
      c.record(id + ".7d", "nu2(m).m = 0", c.psi_nu2_m(false));
      break;

    case FormRule::Jordan33: {
      const MoritaContext& ctx = g.context();
      c.record(id + ".hyp.2tf", "ground field is 2-torsion free (characteristic != 2)",
            characteristic_gate(g.algebra()) == CharClass::Two
                ? Witness(std::vector<std::size_t>{})
                : Witness(std::nullopt));
      c.record(id + ".hyp.faithful",
            "M is faithful as a left A-module and as a right B-module",
            (is_faithful(ctx, WhichModule::M, ActionSide::Left) &&
             is_faithful(ctx, WhichModule::M, ActionSide::Right))
                ? Witness(std::nullopt)
                : Witness(std::vector<std::size_t>{}));
      c.shape(id + ".shape.delta4", "delta4", form.delta4);
      c.shape(id + ".shape.mu1", "mu1", form.mu1);
      c.record(id + ".1a", "delta1 is a derivation on A",
            ConditionContext::from_violation(derivation_violation(c.A, form.delta1)));
      c.record(id + ".1b", "delta1(phi(m,n)) = phi(tau2(m),n) + phi(m,nu3(n))",
            c.pairing_compat_a(false));
      c.record(id + ".2a", "mu4 is a derivation on B",
            ConditionContext::from_violation(derivation_violation(c.B, form.mu4)));
      c.record(id + ".2b", "mu4(psi(n,m)) = psi(n,tau2(m)) + psi(nu3(n),m)",
            c.pairing_compat_b(false));
      c.record(id + ".3a", "tau2(a.m) = a.tau2(m) + delta1(a).m", c.tau2_left(false));
      c.record(id + ".3b", "tau2(m.b) = tau2(m).b + m.mu4(b)", c.tau2_right(false));
      c.record(id + ".4a", "nu3(n.a) = nu3(n).a + n.delta1(a)", c.nu3_right(false));
      c.record(id + ".4b", "nu3(b.n) = b.nu3(n) + mu4(b).n", c.nu3_left(false));
      c.record(id + ".5a", "tau3(n.a) = a.tau3(n)", c.tau3_a_compat());
      c.record(id + ".5b", "tau3(b.n) = tau3(n).b", c.tau3_b_compat());
      c.record(id + ".5c", "n.tau3(n) = 0", c.psi_n_tau3(false));
      c.record(id + ".5d", "tau3(n).n = 0", c.phi_tau3_n(false));
      c.record(id + ".6a", "nu2(a.m) = nu2(m).a", c.nu2_a_compat());
      c.record(id + ".6b", "nu2(m.b) = b.nu2(m)", c.nu2_b_compat());
      c.record(id + ".6c", "m.nu2(m) = 0", c.phi_m_nu2(false));
      c.record(id + ".6d", "nu2(m).m = 0", c.psi_nu2_m(false));
      break;
    }

    case FormRule::Antiderivation36: {
      const MoritaContext& ctx = g.context();
      c.record(id + ".hyp.faithful",
            "M is faithful as a left A-module and as a right B-module",
            (is_faithful(ctx, WhichModule::M, ActionSide::Left) &&
             is_faithful(ctx, WhichModule::M, ActionSide::Right))
                ? Witness(std::nullopt)
                : Witness(std::vector<std::size_t>{}));
      c.shape(id + ".shape.delta1", "delta1", form.delta1);
      c.shape(id + ".shape.delta4", "delta4", form.delta4);
      c.shape(id + ".shape.mu1", "mu1", form.mu1);
      c.shape(id + ".shape.mu4", "mu4", form.mu4);
      c.shape(id + ".shape.tau2", "tau2", form.tau2);
      c.shape(id + ".shape.nu3", "nu3", form.nu3);
      // Commutators of the corner algebras annihilate m0 and n0.
      c.record(id + ".1a", "[a,a'].m0 = 0",
            ConditionContext::pairs(c.dA, c.dA, [&](std::size_t i, std::size_t j) {
              const Vec comm = sub(c.A.basis_product(i, j), c.A.basis_product(j, i));
              return is_zero_vec(ctx.m_left(comm, form.m0));
            }));
      c.record(id + ".1b", "m0.[b,b'] = 0",
            ConditionContext::pairs(c.dB, c.dB, [&](std::size_t i, std::size_t j) {
              const Vec comm = sub(c.B.basis_product(i, j), c.B.basis_product(j, i));
              return is_zero_vec(ctx.m_right(form.m0, comm));
            }));
      c.record(id + ".1c", "n0.[a,a'] = 0",
            ConditionContext::pairs(c.dA, c.dA, [&](std::size_t i, std::size_t j) {
              const Vec comm = sub(c.A.basis_product(i, j), c.A.basis_product(j, i));
              return is_zero_vec(ctx.n_right(form.n0, comm));
            }));
      c.record(id + ".1d", "[b,b'].n0 = 0",
            ConditionContext::pairs(c.dB, c.dB, [&](std::size_t i, std::size_t j) {
              const Vec comm = sub(c.B.basis_product(i, j), c.B.basis_product(j, i));
              return is_zero_vec(ctx.n_left(comm, form.n0));
            }));
      c.record(id + ".2a", "m0.n = 0 (phi(m0, n) = 0)",
            ConditionContext::each(c.dN, [&](std::size_t n) {
              return is_zero_vec(ctx.pair_phi(form.m0, c.basis(c.dN, n)));
            }));
      c.record(id + ".2b", "n.m0 = 0 (psi(n, m0) = 0)",
            ConditionContext::each(c.dN, [&](std::size_t n) {
              return is_zero_vec(ctx.pair_psi(c.basis(c.dN, n), form.m0));
            }));
      c.record(id + ".2c", "m.n0 = 0 (phi(m, n0) = 0)",
            ConditionContext::each(c.dM, [&](std::size_t m) {
              return is_zero_vec(ctx.pair_phi(c.basis(c.dM, m), form.n0));
            }));
      c.record(id + ".2d", "n0.m = 0 (psi(n0, m) = 0)",
            ConditionContext::each(c.dM, [&](std::size_t m) {
              return is_zero_vec(ctx.pair_psi(form.n0, c.basis(c.dM, m)));
            }));
      c.record(id + ".3a", "tau3(n.a) = a.tau3(n)", c.tau3_a_compat());
      c.record(id + ".3b", "tau3(b.n) = tau3(n).b", c.tau3_b_compat());
      c.record(id + ".3c", "n.tau3(n') = 0 for all n'", c.psi_n_tau3(true));
      c.record(id + ".3d", "tau3(n).n' = 0 for all n'", c.phi_tau3_n(true));
      c.record(id + ".4a", "nu2(a.m) = nu2(m).a", c.nu2_a_compat());
      c.record(id + ".4b", "nu2(m.b) = b.nu2(m)", c.nu2_b_compat());
      c.record(id + ".4c", "m.nu2(m') = 0 for all m'", c.phi_m_nu2(true));
      c.record(id + ".4d", "nu2(m).m' = 0 for all m'", c.psi_nu2_m(true));
      break;
    }
  }
  return c.report;
}

namespace {

// First nonzero entry of a pairing tensor, if any.
std::optional<std::vector<std::size_t>> first_nonzero(const Tensor3& t) {
  for (std::size_t i = 0; i < t.dim0(); ++i)
    for (std::size_t j = 0; j < t.dim1(); ++j)
      for (std::size_t k = 0; k < t.dim2(); ++k)
        if (!t.at(i, j, k).is_zero()) return std::vector<std::size_t>{i, j, k};
  return std::nullopt;
}

std::string index_string(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

}  // namespace

JordanDecomposition decompose_jordan(const GeneralizedMatrixAlgebra& g, const LinearMap& f) {
  const MoritaContext& ctx = g.context();
  if (const auto idx = first_nonzero(ctx.phi()))
    throw HypothesisError("pairing phi is nonzero at entry " + index_string(*idx));
  if (const auto idx = first_nonzero(ctx.psi()))
    throw HypothesisError("pairing psi is nonzero at entry " + index_string(*idx));
  if (characteristic_gate(g.algebra()) == CharClass::Two)
    throw HypothesisError("ground field has characteristic 2 (not 2-torsion free)");
  if (!is_faithful(ctx, WhichModule::M, ActionSide::Left))
    throw HypothesisError("M is not faithful as a left A-module");
  if (!is_faithful(ctx, WhichModule::M, ActionSide::Right))
    throw HypothesisError("M is not faithful as a right B-module");

  const JordanCanonicalForm form = extract_jordan_components(g, f);
  // Characteristic != 2 plus condition (3) forces these to vanish.
  if (!form.delta4.is_zero() || !form.mu1.is_zero())
    throw InternalInconsistencyError("extracted delta4 or mu1 is nonzero on a 2-torsion free GMA");

  JordanCanonicalForm der_form = form;
  der_form.tau3 = Matrix(g.field(), ctx.dim_m(), ctx.dim_n());
  der_form.nu2 = Matrix(g.field(), ctx.dim_n(), ctx.dim_m());
  JordanCanonicalForm anti_form = JordanCanonicalForm::zero(g);
  anti_form.tau3 = form.tau3;
  anti_form.nu2 = form.nu2;

  JordanDecomposition parts{rebuild_from_form(g, der_form), rebuild_from_form(g, anti_form)};
  if (parts.derivation_part + parts.antiderivation_part != f)
    throw InternalInconsistencyError("decomposition parts do not sum to the input map");
  if (!is_derivation(g.algebra(), parts.derivation_part))
    throw InternalInconsistencyError("derivation part fails the Leibniz identity");
  if (!is_antiderivation(g.algebra(), parts.antiderivation_part))
    throw InternalInconsistencyError("antiderivation part fails the reversed Leibniz identity");
  return parts;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Falsified: return "FALSIFIED";
  }
  return "?";
}

CertifyResult certify_no_antiderivations(const GeneralizedMatrixAlgebra& g) {
  CertifyResult r;
  const MoritaContext& ctx = g.context();
  const bool faithful_left = is_faithful(ctx, WhichModule::M, ActionSide::Left);
  const bool faithful_right = is_faithful(ctx, WhichModule::M, ActionSide::Right);
  const bool nd_phi = is_nondegenerate(ctx, PairingSide::Phi);
  const bool nd_psi = is_nondegenerate(ctx, PairingSide::Psi);
  r.facts.emplace_back("faithful_left", faithful_left ? "true" : "false");
  r.facts.emplace_back("faithful_right", faithful_right ? "true" : "false");
  r.facts.emplace_back("phi_nondegenerate", nd_phi ? "true" : "false");
  r.facts.emplace_back("psi_nondegenerate", nd_psi ? "true" : "false");
  if (!faithful_left || !faithful_right) {
    r.verdict = Verdict::NotApplicable;
    r.reason = "M is not faithful on both sides";
    return r;
  }
  if (!nd_phi && !nd_psi) {
    r.verdict = Verdict::NotApplicable;
    r.reason = "neither pairing is nondegenerate";
    return r;
  }
  const MapSubspace ader = antiderivation_space(g.algebra());
  r.facts.emplace_back("antiderivation_dim", std::to_string(ader.dimension()));
  if (ader.dimension() == 0) {
    r.verdict = Verdict::Certified;
  } else {
    r.verdict = Verdict::Falsified;
    r.reason = "antiderivation space has dimension " + std::to_string(ader.dimension()) +
               " despite a nondegenerate pairing";
  }
  return r;
}

CertifyResult certify_jordan_splitting(const GeneralizedMatrixAlgebra& g) {
  CertifyResult r;
  const MoritaContext& ctx = g.context();
  if (const auto idx = first_nonzero(ctx.phi())) {
    r.verdict = Verdict::NotApplicable;
    r.reason = "pairing phi is nonzero at entry " + index_string(*idx);
    return r;
  }
  if (const auto idx = first_nonzero(ctx.psi())) {
    r.verdict = Verdict::NotApplicable;
    r.reason = "pairing psi is nonzero at entry " + index_string(*idx);
    return r;
  }
  if (characteristic_gate(g.algebra()) == CharClass::Two) {
    r.verdict = Verdict::NotApplicable;
    r.reason = "ground field has characteristic 2 (not 2-torsion free)";
    return r;
  }
  if (!is_faithful(ctx, WhichModule::M, ActionSide::Left) ||
      !is_faithful(ctx, WhichModule::M, ActionSide::Right)) {
    r.verdict = Verdict::NotApplicable;
    r.reason = "M is not faithful on both sides";
    return r;
  }

  const MapSubspace der = derivation_space(g.algebra());
  const MapSubspace ader = antiderivation_space(g.algebra());
  const MapSubspace jder = jordan_derivation_space(g.algebra());
  const MapSubspace sum = subspace_sum(der, ader);
  const MapSubspace inter = subspace_intersection(der, ader);
  r.facts.emplace_back("derivation_dim", std::to_string(der.dimension()));
  r.facts.emplace_back("antiderivation_dim", std::to_string(ader.dimension()));
  r.facts.emplace_back("jordan_dim", std::to_string(jder.dimension()));
  r.facts.emplace_back("intersection_dim", std::to_string(inter.dimension()));

  bool ok = jder.dimension() == der.dimension() + ader.dimension() - inter.dimension();
  for (const auto& v : jder.basis)
    if (!contains(sum, v)) ok = false;
  for (const auto& v : sum.basis)
    if (!contains(jder, v)) ok = false;
  if (ok) {
    r.verdict = Verdict::Certified;
  } else {
    r.verdict = Verdict::Falsified;
    r.reason = "JDer != Der + ADer as subspaces";
  }
  return r;
}

}  // namespace gmaderiv
