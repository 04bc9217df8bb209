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
#include "gmaderiv/gallery.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace gmaderiv {

StructureAlgebra field_algebra(const Field& f) {
  Tensor3 c(f, 1, 1, 1);
  c.set(0, 0, 0, Scalar::one(f));
  return StructureAlgebra(f, std::move(c), Vec{Scalar::one(f)}, {"1"});
}

namespace {

// Basis index of e_{rs} (0-based, r <= s < n) in row-major order.
std::size_t tri_index(std::size_t n, std::size_t r, std::size_t s) {
  return r * n - r * (r - 1) / 2 + (s - r);
}

std::string cell_label(std::size_t r, std::size_t s) {
  return "e" + std::to_string(r + 1) + std::to_string(s + 1);
}

}  // namespace

StructureAlgebra upper_triangular_algebra(std::size_t n, const Field& f) {
  if (n == 0) throw DimensionError("triangular algebra needs n >= 1");
  const std::size_t dim = n * (n + 1) / 2;
  Tensor3 c(f, dim, dim, dim);
  std::vector<std::string> labels(dim);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r; s < n; ++s) labels[tri_index(n, r, s)] = cell_label(r, s);
  // e_{rs} e_{tu} = [s == t] e_{ru}
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r; s < n; ++s)
      for (std::size_t u = s; u < n; ++u)
        c.set(tri_index(n, r, s), tri_index(n, s, u), tri_index(n, r, u), Scalar::one(f));
  Vec unit = zero_vec(f, dim);
  for (std::size_t r = 0; r < n; ++r) unit[tri_index(n, r, r)] = Scalar::one(f);
  return StructureAlgebra(f, std::move(c), std::move(unit), std::move(labels));
}

StructureAlgebra full_matrix_algebra(std::size_t n, const Field& f) {
  if (n == 0) throw DimensionError("matrix algebra needs n >= 1");
  const std::size_t dim = n * n;
  const auto idx = [n](std::size_t r, std::size_t s) { return r * n + s; };
  Tensor3 c(f, dim, dim, dim);
  std::vector<std::string> labels(dim);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      labels[idx(r, s)] = cell_label(r, s);
      for (std::size_t u = 0; u < n; ++u)
        c.set(idx(r, s), idx(s, u), idx(r, u), Scalar::one(f));
    }
  Vec unit = zero_vec(f, dim);
  for (std::size_t r = 0; r < n; ++r) unit[idx(r, r)] = Scalar::one(f);
  return StructureAlgebra(f, std::move(c), std::move(unit), std::move(labels));
}

StructureAlgebra direct_sum_fields(const Field& f, std::size_t k) {
  if (k == 0) throw DimensionError("direct sum needs k >= 1");
  Tensor3 c(f, k, k, k);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    c.set(i, i, i, Scalar::one(f));
    labels[i] = "u" + std::to_string(i + 1);
  }
  return StructureAlgebra(f, std::move(c), Vec(k, Scalar::one(f)), std::move(labels));
}

MoritaContext trivial_gma(StructureAlgebra a, StructureAlgebra b, Bimodule m, Bimodule n) {
  const Field f = a.field();
  Pairing phi(f, m.dim, n.dim, a.dim());
  Pairing psi(f, n.dim, m.dim, b.dim());
  return MoritaContext(std::move(a), std::move(b), std::move(m), std::move(n), std::move(phi),
                       std::move(psi));
}

MoritaContext upper_triangular_context(std::size_t n, const Field& f) {
  if (n < 2) throw DimensionError("triangular slice needs n >= 2");
  const std::size_t k = n - 1;
  StructureAlgebra a = upper_triangular_algebra(k, f);
  StructureAlgebra b = field_algebra(f);

  Bimodule m{k, Tensor3(f, a.dim(), k, k), Tensor3(f, k, 1, k)};
  // e_{rs} acts on the column space by e_{rs} v_s = v_r.
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = r; s < k; ++s)
      m.left_action.set(tri_index(k, r, s), s, r, Scalar::one(f));
  for (std::size_t i = 0; i < k; ++i) m.right_action.set(i, 0, i, Scalar::one(f));

  Bimodule nmod{0, Tensor3(f, 1, 0, 0), Tensor3(f, 0, a.dim(), 0)};
  Pairing phi(f, k, 0, a.dim());
  Pairing psi(f, 0, k, 1);
  return MoritaContext(std::move(a), std::move(b), std::move(m), std::move(nmod), std::move(phi),
                       std::move(psi));
}

MoritaContext s_deformed_m2(const Field& f, const Scalar& s) {
  if (s.field() != f) throw FieldMismatchError("deformation parameter over the wrong field");
  StructureAlgebra a = field_algebra(f);
  StructureAlgebra b = field_algebra(f);
  const auto regular = [&f]() {
    Bimodule mod{1, Tensor3(f, 1, 1, 1), Tensor3(f, 1, 1, 1)};
    mod.left_action.set(0, 0, 0, Scalar::one(f));
    mod.right_action.set(0, 0, 0, Scalar::one(f));
    return mod;
  };
  Pairing phi(f, 1, 1, 1);
  phi.set(0, 0, 0, s);
  Pairing psi(f, 1, 1, 1);
  psi.set(0, 0, 0, s);
  return MoritaContext(std::move(a), std::move(b), regular(), regular(), std::move(phi),
                       std::move(psi));
}

void validate_group_action(const StructureAlgebra& alg, const GroupAction& action) {
  const std::size_t ng = action.table.size();
  if (ng == 0) throw AlgebraError("group action has no elements");
  for (const auto& row : action.table) {
    if (row.size() != ng) throw AlgebraError("group table is not square");
    for (std::size_t v : row)
      if (v >= ng) throw AlgebraError("group table entry out of range");
  }
  for (std::size_t g = 0; g < ng; ++g)
    if (action.table[0][g] != g || action.table[g][0] != g)
      throw AlgebraError("element 0 is not an identity of the group table");
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h)
      for (std::size_t k = 0; k < ng; ++k)
        if (action.table[action.table[g][h]][k] != action.table[g][action.table[h][k]])
          throw AlgebraError("group table is not associative");
  for (std::size_t g = 0; g < ng; ++g) {
    bool has_inverse = false;
    for (std::size_t h = 0; h < ng; ++h)
      if (action.table[g][h] == 0 && action.table[h][g] == 0) has_inverse = true;
    if (!has_inverse) throw AlgebraError("group table element without inverse");
  }

  if (action.matrices.size() != ng)
    throw AlgebraError("one automorphism matrix per group element required");
  const std::size_t d = alg.dim();
  for (const auto& p : action.matrices)
    if (p.rows() != d || p.cols() != d || p.field() != alg.field())
      throw AlgebraError("automorphism matrix has the wrong shape or field");
  if (action.matrices[0] != Matrix::identity(alg.field(), d))
    throw AlgebraError("identity element must act as the identity matrix");
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h)
      if (action.matrices[g] * action.matrices[h] != action.matrices[action.table[g][h]])
        throw AlgebraError("action matrices do not form a homomorphism at (" + std::to_string(g) +
                           ", " + std::to_string(h) + ")");
  for (std::size_t g = 0; g < ng; ++g) {
    const Matrix& p = action.matrices[g];
    if (p * alg.unit() != alg.unit())
      throw AlgebraError("automorphism " + std::to_string(g) + " does not fix the unit");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (p * alg.basis_product(i, j) !=
            alg.multiply(p.column(i), p.column(j)))
          throw AlgebraError("matrix " + std::to_string(g) + " is not multiplicative at (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
  }
}

MoritaContext skew_group_context(const StructureAlgebra& a, const GroupAction& action) {
  validate_group_action(a, action);
  const Field& f = a.field();
  const std::size_t dA = a.dim(), ng = action.table.size();

  std::vector<std::size_t> inv(ng);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h)
      if (action.table[g][h] == 0 && action.table[h][g] == 0) inv[g] = h;

  // Fixed ring A^G: common kernel of (P_g - id).
  Matrix stacked(f, ng * dA, dA);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t r = 0; r < dA; ++r)
      for (std::size_t c = 0; c < dA; ++c) {
        Scalar v = action.matrices[g].at(r, c);
        if (r == c) v -= Scalar::one(f);
        stacked.at(g * dA + r, c) = v;
      }
  const std::vector<Vec> fixed = nullspace_basis(stacked);
  const std::size_t dF = fixed.size();
  const Matrix iota = Matrix::from_columns(f, dA, fixed);
  const auto fixed_coords = [&iota](const Vec& v) {
    const auto x = solve(iota, v);
    if (!x)
      throw InternalInconsistencyError("fixed ring is not closed under the required product");
    return *x;
  };

  Tensor3 c_fixed(f, dF, dF, dF);
  for (std::size_t i = 0; i < dF; ++i)
    for (std::size_t j = 0; j < dF; ++j) {
      const Vec coords = fixed_coords(a.multiply(fixed[i], fixed[j]));
      for (std::size_t k = 0; k < dF; ++k) c_fixed.set(i, j, k, coords[k]);
    }
  StructureAlgebra fixed_ring(f, std::move(c_fixed), fixed_coords(a.unit()));

  // Skew group algebra A*G on basis (g, i) -> g*dA + i, with
  // (a_i g)(a_j h) = a_i a_j^{g^-1} (gh).
  const std::size_t dS = dA * ng;
  const auto basis_a = [&](std::size_t i) {
    Vec v = zero_vec(f, dA);
    v[i] = Scalar::one(f);
    return v;
  };
  Tensor3 c_skew(f, dS, dS, dS);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t i = 0; i < dA; ++i)
      for (std::size_t h = 0; h < ng; ++h)
        for (std::size_t j = 0; j < dA; ++j) {
          const Vec prod = a.multiply(basis_a(i), action.matrices[inv[g]] * basis_a(j));
          const std::size_t gh = action.table[g][h];
          for (std::size_t k = 0; k < dA; ++k)
            if (!prod[k].is_zero()) c_skew.set(g * dA + i, h * dA + j, gh * dA + k, prod[k]);
        }
  Vec unit_skew = zero_vec(f, dS);
  for (std::size_t k = 0; k < dA; ++k) unit_skew[k] = a.unit()[k];
  StructureAlgebra skew(f, std::move(c_skew), std::move(unit_skew));

  // M = A as (A^G, A*G)-bimodule: z.x = z x, x.(a_j h) = (x a_j)^h.
  Bimodule m{dA, Tensor3(f, dF, dA, dA), Tensor3(f, dA, dS, dA)};
  for (std::size_t i = 0; i < dF; ++i)
    for (std::size_t v = 0; v < dA; ++v) {
      const Vec prod = a.multiply(fixed[i], basis_a(v));
      for (std::size_t k = 0; k < dA; ++k)
        if (!prod[k].is_zero()) m.left_action.set(i, v, k, prod[k]);
    }
  for (std::size_t v = 0; v < dA; ++v)
    for (std::size_t h = 0; h < ng; ++h)
      for (std::size_t j = 0; j < dA; ++j) {
        const Vec prod = action.matrices[h] * a.multiply(basis_a(v), basis_a(j));
        for (std::size_t k = 0; k < dA; ++k)
          if (!prod[k].is_zero()) m.right_action.set(v, h * dA + j, k, prod[k]);
      }

  // N = A as (A*G, A^G)-bimodule: (a_j h).x = a_j x^{h^-1}, x.z = x z.
  Bimodule n{dA, Tensor3(f, dS, dA, dA), Tensor3(f, dA, dF, dA)};
  for (std::size_t h = 0; h < ng; ++h)
    for (std::size_t j = 0; j < dA; ++j)
      for (std::size_t v = 0; v < dA; ++v) {
        const Vec prod = a.multiply(basis_a(j), action.matrices[inv[h]] * basis_a(v));
        for (std::size_t k = 0; k < dA; ++k)
          if (!prod[k].is_zero()) n.left_action.set(h * dA + j, v, k, prod[k]);
      }
  for (std::size_t v = 0; v < dA; ++v)
    for (std::size_t i = 0; i < dF; ++i) {
      const Vec prod = a.multiply(basis_a(v), fixed[i]);
      for (std::size_t k = 0; k < dA; ++k)
        if (!prod[k].is_zero()) n.right_action.set(v, i, k, prod[k]);
    }

  // phi(x, y) = sum_g (x y)^g in A^G.
  Pairing phi(f, dA, dA, dF);
  for (std::size_t x = 0; x < dA; ++x)
    for (std::size_t y = 0; y < dA; ++y) {
      Vec total = zero_vec(f, dA);
      const Vec xy = a.multiply(basis_a(x), basis_a(y));
      for (std::size_t g = 0; g < ng; ++g) total = add(total, action.matrices[g] * xy);
      const Vec coords = fixed_coords(total);
      for (std::size_t k = 0; k < dF; ++k)
        if (!coords[k].is_zero()) phi.set(x, y, k, coords[k]);
    }

  // psi(x, y) = sum_g x y^{g^-1} g in A*G.
  Pairing psi(f, dA, dA, dS);
  for (std::size_t x = 0; x < dA; ++x)
    for (std::size_t y = 0; y < dA; ++y)
      for (std::size_t g = 0; g < ng; ++g) {
        const Vec prod = a.multiply(basis_a(x), action.matrices[inv[g]] * basis_a(y));
        for (std::size_t k = 0; k < dA; ++k)
          if (!prod[k].is_zero()) psi.set(x, y, g * dA + k, prod[k]);
      }

  return MoritaContext(std::move(fixed_ring), std::move(skew), std::move(m), std::move(n),
                       std::move(phi), std::move(psi));
}

MoritaContext c2_swap_context(const Field& f) {
  StructureAlgebra a = direct_sum_fields(f, 2);
  GroupAction action;
  action.table = {{0, 1}, {1, 0}};
  Matrix swap(f, 2, 2);
  swap.at(0, 1) = Scalar::one(f);
  swap.at(1, 0) = Scalar::one(f);
  action.matrices = {Matrix::identity(f, 2), std::move(swap)};
  return skew_group_context(a, action);
}

namespace {

LinearMap block_map(const GeneralizedMatrixAlgebra& g,
                    const std::function<void(LinearMap&, std::size_t, std::size_t, std::size_t,
                                             std::size_t)>& fill) {
  if (g.corner_dim(Corner::M) != g.corner_dim(Corner::N))
    throw DimensionError("map requires dim M = dim N (coordinate identification)");
  LinearMap out(g.field(), g.dim(), g.dim());
  const std::size_t offM = g.corner_offset(Corner::M), offN = g.corner_offset(Corner::N);
  for (std::size_t t = 0; t < g.corner_dim(Corner::M); ++t) fill(out, t, t, offM, offN);
  return out;
}

}  // namespace

LinearMap gamma_jord(const GeneralizedMatrixAlgebra& g) {
  return block_map(g, [&g](LinearMap& out, std::size_t t, std::size_t, std::size_t offM,
                           std::size_t offN) {
    const Scalar one = Scalar::one(g.field());
    out.at(offM + t, offM + t) = one;   // m -> m + ...
    out.at(offN + t, offM + t) = one;   // ... + m in the N corner
    out.at(offM + t, offN + t) = one;   // n -> n in the M corner ...
    out.at(offN + t, offN + t) = -one;  // ... - n in the N corner
  });
}

LinearMap theta1(const GeneralizedMatrixAlgebra& g) {
  return block_map(g, [&g](LinearMap& out, std::size_t t, std::size_t, std::size_t offM,
                           std::size_t offN) {
    const Scalar one = Scalar::one(g.field());
    out.at(offM + t, offM + t) = one;
    out.at(offN + t, offN + t) = -one;
  });
}

LinearMap theta2(const GeneralizedMatrixAlgebra& g) {
  return block_map(g, [&g](LinearMap& out, std::size_t t, std::size_t, std::size_t offM,
                           std::size_t offN) {
    const Scalar one = Scalar::one(g.field());
    out.at(offN + t, offM + t) = one;
    out.at(offM + t, offN + t) = one;
  });
}

namespace {

Field parse_field_param(const std::string& value) {
  if (value == "q" || value == "rational") return Field::rationals();
  if (value.size() > 2 && value.compare(0, 2, "gf") == 0) {
    try {
      return Field::prime(std::stoull(value.substr(2)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw std::invalid_argument("unknown field '" + value + "' (use q or gf<p>)");
}

}  // namespace

MoritaContext make_gallery(const std::string& name, const GalleryParams& params) {
  std::string fixture = name;
  GalleryParams p = params;
  if (fixture == "trivial-q") {  // documented alias
    fixture = "trivial";
    p["field"] = "q";
  }
  const auto take = [&p](const char* key, const char* fallback) {
    auto it = p.find(key);
    if (it == p.end()) return std::string(fallback);
    std::string v = it->second;
    p.erase(it);
    return v;
  };
  const auto done = [&p]() {
    if (!p.empty())
      throw std::invalid_argument("unknown gallery parameter '" + p.begin()->first + "'");
  };

  const Field field = parse_field_param(take("field", "q"));
  if (fixture == "trivial") {
    done();
    return s_deformed_m2(field, Scalar::zero(field));
  }
  if (fixture == "s-deformed") {
    const std::string s_text = take("s", "1");
    done();
    return s_deformed_m2(field, Scalar::parse(field, s_text));
  }
  if (fixture == "triangular") {
    const std::string n_text = take("n", "2");
    done();
    std::size_t n = 0;
    try {
      n = std::stoul(n_text);
    } catch (const std::exception&) {
      throw std::invalid_argument("parameter n must be an integer >= 2");
    }
    return upper_triangular_context(n, field);
  }
  if (fixture == "skew-c2") {
    done();
    return c2_swap_context(field);
  }
  throw std::invalid_argument("unknown gallery fixture '" + name + "'");
}

std::string GalleryPreset::label() const {
  std::string s = name;
  if (!params.empty()) {
    s += "(";
    bool first = true;
    for (const auto& [k, v] : params) {
      if (!first) s += ",";
      s += k + "=" + v;
      first = false;
    }
    s += ")";
  }
  return s;
}

std::vector<GalleryPreset> gallery_presets() {
  return {
      {"trivial", {{"field", "q"}}},
      {"trivial", {{"field", "gf3"}}},
      {"trivial", {{"field", "gf5"}}},
      {"trivial", {{"field", "gf7"}}},
      {"s-deformed", {{"field", "q"}, {"s", "0"}}},
      {"s-deformed", {{"field", "q"}, {"s", "1"}}},
      {"s-deformed", {{"field", "q"}, {"s", "2"}}},
      {"s-deformed", {{"field", "gf5"}, {"s", "2"}}},
      {"triangular", {{"field", "q"}, {"n", "2"}}},
      {"triangular", {{"field", "q"}, {"n", "3"}}},
      {"triangular", {{"field", "q"}, {"n", "4"}}},
      {"triangular", {{"field", "gf3"}, {"n", "2"}}},
      {"skew-c2", {{"field", "q"}}},
  };
}

}  // namespace gmaderiv
