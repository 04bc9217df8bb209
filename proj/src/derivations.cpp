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
#include "gmaderiv/derivations.hpp"

#include <utility>

namespace gmaderiv {

namespace {

void require_shape(const StructureAlgebra& alg, const LinearMap& f) {
  if (f.field() != alg.field()) throw FieldMismatchError("map field differs from algebra field");
  if (f.rows() != alg.dim() || f.cols() != alg.dim())
    throw DimensionError("map shape does not match algebra dimension");
}

}  // namespace

std::string IdentityViolation::describe(const char* what) const {
  std::string s(what);
  if (diagonal) return s + " fails at basis element " + std::to_string(i);
  return s + " fails at basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::optional<IdentityViolation> derivation_violation(const StructureAlgebra& alg,
                                                      const LinearMap& f) {
  require_shape(alg, f);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Vec bi = alg.basis_element(i);
    const Vec fbi = f.column(i);
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      const Vec bj = alg.basis_element(j);
      Vec lhs = f * alg.basis_product(i, j);
      Vec rhs = add(alg.multiply(fbi, bj), alg.multiply(bi, f.column(j)));
      if (lhs != rhs) return IdentityViolation{i, j, false};
    }
  }
  return std::nullopt;
}

bool is_derivation(const StructureAlgebra& alg, const LinearMap& f) {
  return !derivation_violation(alg, f).has_value();
}

std::optional<IdentityViolation> jordan_violation(const StructureAlgebra& alg,
                                                  const LinearMap& f) {
  require_shape(alg, f);
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vec bi = alg.basis_element(i);
    const Vec fbi = f.column(i);
    Vec q = f * alg.basis_product(i, i);
    q = sub(q, alg.multiply(fbi, bi));
    q = sub(q, alg.multiply(bi, fbi));
    if (!is_zero_vec(q)) return IdentityViolation{i, i, true};
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec bj = alg.basis_element(j);
      const Vec fbj = f.column(j);
      Vec p = f * add(alg.basis_product(i, j), alg.basis_product(j, i));
      p = sub(p, alg.multiply(fbi, bj));
      p = sub(p, alg.multiply(bi, fbj));
      p = sub(p, alg.multiply(fbj, bi));
      p = sub(p, alg.multiply(bj, fbi));
      if (!is_zero_vec(p)) return IdentityViolation{i, j, false};
    }
  }
  return std::nullopt;
}

bool is_jordan_derivation(const StructureAlgebra& alg, const LinearMap& f) {
  return !jordan_violation(alg, f).has_value();
}

std::optional<IdentityViolation> antiderivation_violation(const StructureAlgebra& alg,
                                                          const LinearMap& f) {
  require_shape(alg, f);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Vec bi = alg.basis_element(i);
    const Vec fbi = f.column(i);
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      const Vec bj = alg.basis_element(j);
      Vec lhs = f * alg.basis_product(i, j);
      Vec rhs = add(alg.multiply(f.column(j), bi), alg.multiply(bj, fbi));
      if (lhs != rhs) return IdentityViolation{i, j, false};
    }
  }
  return std::nullopt;
}

bool is_antiderivation(const StructureAlgebra& alg, const LinearMap& f) {
  return !antiderivation_violation(alg, f).has_value();
}

Vec jordan_defect(const StructureAlgebra& alg, const LinearMap& f, const Vec& x) {
  require_shape(alg, f);
  const Vec fx = f * x;
  Vec q = f * alg.multiply(x, x);
  q = sub(q, alg.multiply(fx, x));
  q = sub(q, alg.multiply(x, fx));
  return q;
}

namespace {

// Row-major flattening of a map: entry (r, c) at index r*d + c.
Vec flatten(const LinearMap& f) {
  Vec v;
  v.reserve(f.rows() * f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) v.push_back(f.at(r, c));
  return v;
}

LinearMap unflatten(const Field& field, std::size_t d, const Vec& v) {
  LinearMap f(field, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) f.at(r, c) = v[r * d + c];
  return f;
}

MapSubspace canonicalize(const Field& field, std::size_t d, const std::vector<Vec>& spanning,
                         MapKind kind) {
  Matrix rows(field, spanning.size(), d * d);
  for (std::size_t i = 0; i < spanning.size(); ++i)
    for (std::size_t j = 0; j < d * d; ++j) rows.at(i, j) = spanning[i][j];
  const RrefResult red = rref(rows);
  MapSubspace s{d, kind, {}};
  for (std::size_t i = 0; i < red.rank; ++i) s.basis.push_back(unflatten(field, d, red.reduced.row(i)));
  return s;
}

// One equation block per basis pair: rows (pair, output coordinate k),
// unknowns theta[r][c] at column r*d + c.
enum class System { Derivation, Jordan, Antiderivation };

MapSubspace solve_space(const StructureAlgebra& alg, System sys, MapKind kind) {
  const std::size_t d = alg.dim();
  const Field& field = alg.field();
  const Tensor3& c = alg.structure();
  std::vector<Vec> rows;

  const auto emit = [&](const Vec& row) {
    if (!is_zero_vec(row)) rows.push_back(row);
  };

  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t j_begin = sys == System::Jordan ? i : 0;
    for (std::size_t j = j_begin; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Vec row = zero_vec(field, d * d);
        switch (sys) {
          case System::Derivation:
            // f(b_i b_j) - f(b_i) b_j - b_i f(b_j) = 0, coordinate k.
            for (std::size_t l = 0; l < d; ++l) {
              row[k * d + l] += c.at(i, j, l);
              row[l * d + i] -= c.at(l, j, k);
              row[l * d + j] -= c.at(i, l, k);
            }
            break;
          case System::Antiderivation:
            // f(b_i b_j) - f(b_j) b_i - b_j f(b_i) = 0.
            for (std::size_t l = 0; l < d; ++l) {
              row[k * d + l] += c.at(i, j, l);
              row[l * d + j] -= c.at(l, i, k);
              row[l * d + i] -= c.at(j, l, k);
            }
            break;
          case System::Jordan:
            if (i == j) {
              // q(b_i) = 0.
              for (std::size_t l = 0; l < d; ++l) {
                row[k * d + l] += c.at(i, i, l);
                row[l * d + i] -= c.at(l, i, k) + c.at(i, l, k);
              }
            } else {
              // Polarized identity at (i, j).
              for (std::size_t l = 0; l < d; ++l) {
                row[k * d + l] += c.at(i, j, l) + c.at(j, i, l);
                row[l * d + i] -= c.at(l, j, k) + c.at(j, l, k);
                row[l * d + j] -= c.at(i, l, k) + c.at(l, i, k);
              }
            }
            break;
        }
        emit(row);
      }
    }
  }

  Matrix constraints(field, rows.size(), d * d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t cidx = 0; cidx < d * d; ++cidx) constraints.at(r, cidx) = rows[r][cidx];
  return canonicalize(field, d, nullspace_basis(constraints), kind);
}

}  // namespace

MapSubspace span_of(const Field& f, std::size_t algebra_dim, const std::vector<LinearMap>& maps,
                    MapKind kind) {
  std::vector<Vec> flat;
  flat.reserve(maps.size());
  for (const auto& m : maps) {
    if (m.rows() != algebra_dim || m.cols() != algebra_dim)
      throw DimensionError("map shape does not match algebra dimension");
    flat.push_back(flatten(m));
  }
  return canonicalize(f, algebra_dim, flat, kind);
}

MapSubspace derivation_space(const StructureAlgebra& alg) {
  return solve_space(alg, System::Derivation, MapKind::Derivation);
}

MapSubspace jordan_derivation_space(const StructureAlgebra& alg) {
  return solve_space(alg, System::Jordan, MapKind::Jordan);
}

MapSubspace antiderivation_space(const StructureAlgebra& alg) {
  return solve_space(alg, System::Antiderivation, MapKind::Antiderivation);
}

MapSubspace inner_derivation_space(const StructureAlgebra& alg) {
  std::vector<LinearMap> ads;
  ads.reserve(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i)
    ads.push_back(inner_derivation(alg, alg.basis_element(i)));
  return span_of(alg.field(), alg.dim(), ads, MapKind::Inner);
}

namespace {
void require_compatible(const MapSubspace& s1, const MapSubspace& s2) {
  if (s1.algebra_dim != s2.algebra_dim)
    throw DimensionError("map subspaces live on algebras of different dimension");
  if (!s1.basis.empty() && !s2.basis.empty() && s1.basis[0].field() != s2.basis[0].field())
    throw FieldMismatchError("map subspaces over different fields");
}
}  // namespace

MapSubspace subspace_sum(const MapSubspace& s1, const MapSubspace& s2) {
  require_compatible(s1, s2);
  std::vector<LinearMap> all = s1.basis;
  all.insert(all.end(), s2.basis.begin(), s2.basis.end());
  if (all.empty()) return MapSubspace{s1.algebra_dim, MapKind::Generic, {}};
  return span_of(all[0].field(), s1.algebra_dim, all);
}

MapSubspace subspace_intersection(const MapSubspace& s1, const MapSubspace& s2) {
  require_compatible(s1, s2);
  if (s1.basis.empty() || s2.basis.empty())
    return MapSubspace{s1.algebra_dim, MapKind::Generic, {}};
  const Field& f = s1.basis[0].field();
  const std::size_t d = s1.algebra_dim, len = d * d;
  // Kernel of [B1 | B2]: a combination sums to zero iff the B1 part lies
  // in the intersection.
  Matrix stacked(f, len, s1.basis.size() + s2.basis.size());
  for (std::size_t c = 0; c < s1.basis.size(); ++c) {
    const Vec v = flatten(s1.basis[c]);
    for (std::size_t r = 0; r < len; ++r) stacked.at(r, c) = v[r];
  }
  for (std::size_t c = 0; c < s2.basis.size(); ++c) {
    const Vec v = flatten(s2.basis[c]);
    for (std::size_t r = 0; r < len; ++r) stacked.at(r, s1.basis.size() + c) = v[r];
  }
  std::vector<Vec> members;
  for (const Vec& kernel_vec : nullspace_basis(stacked)) {
    Vec member = zero_vec(f, len);
    for (std::size_t c = 0; c < s1.basis.size(); ++c)
      add_scaled(member, kernel_vec[c], flatten(s1.basis[c]));
    members.push_back(std::move(member));
  }
  return canonicalize(f, d, members, MapKind::Generic);
}

bool contains(const MapSubspace& s, const LinearMap& f) {
  if (f.rows() != s.algebra_dim || f.cols() != s.algebra_dim)
    throw DimensionError("map shape does not match subspace algebra dimension");
  if (f.is_zero()) return true;
  if (s.basis.empty()) return false;
  const Field& field = f.field();
  const std::size_t len = s.algebra_dim * s.algebra_dim;
  Matrix basis_cols(field, len, s.basis.size());
  for (std::size_t c = 0; c < s.basis.size(); ++c) {
    const Vec v = flatten(s.basis[c]);
    for (std::size_t r = 0; r < len; ++r) basis_cols.at(r, c) = v[r];
  }
  return solve(basis_cols, flatten(f)).has_value();
}

bool same_subspace(const MapSubspace& s1, const MapSubspace& s2) {
  if (s1.algebra_dim != s2.algebra_dim || s1.basis.size() != s2.basis.size()) return false;
  for (std::size_t i = 0; i < s1.basis.size(); ++i)
    if (s1.basis[i] != s2.basis[i]) return false;
  return true;
}

}  // namespace gmaderiv
