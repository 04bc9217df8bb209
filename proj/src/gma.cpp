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
#include "gmaderiv/gma.hpp"

#include <utility>

namespace gmaderiv {

GeneralizedMatrixAlgebra::GeneralizedMatrixAlgebra(MoritaContext ctx, StructureAlgebra algebra)
    : ctx_(std::move(ctx)), alg_(std::move(algebra)) {
  e11_ = embed(Corner::A, ctx_.algebra_a().unit());
  e22_ = embed(Corner::B, ctx_.algebra_b().unit());
}

std::size_t GeneralizedMatrixAlgebra::corner_dim(Corner c) const {
  switch (c) {
    case Corner::A: return ctx_.dim_a();
    case Corner::M: return ctx_.dim_m();
    case Corner::N: return ctx_.dim_n();
    case Corner::B: return ctx_.dim_b();
  }
  return 0;
}

std::size_t GeneralizedMatrixAlgebra::corner_offset(Corner c) const {
  switch (c) {
    case Corner::A: return 0;
    case Corner::M: return ctx_.dim_a();
    case Corner::N: return ctx_.dim_a() + ctx_.dim_m();
    case Corner::B: return ctx_.dim_a() + ctx_.dim_m() + ctx_.dim_n();
  }
  return 0;
}

Vec GeneralizedMatrixAlgebra::embed(Corner c, const Vec& element) const {
  if (element.size() != corner_dim(c)) throw DimensionError("corner element length mismatch");
  Vec g = zero_vec(field(), dim());
  const std::size_t off = corner_offset(c);
  for (std::size_t i = 0; i < element.size(); ++i) g[off + i] = element[i];
  return g;
}

Vec GeneralizedMatrixAlgebra::project(const Vec& g, Corner c) const {
  if (g.size() != dim()) throw DimensionError("element length does not match algebra dimension");
  const std::size_t off = corner_offset(c);
  return Vec(g.begin() + static_cast<std::ptrdiff_t>(off),
             g.begin() + static_cast<std::ptrdiff_t>(off + corner_dim(c)));
}

GeneralizedMatrixAlgebra build_gma(const MoritaContext& ctx) {
  const Field& f = ctx.field();
  const std::size_t dA = ctx.dim_a(), dM = ctx.dim_m(), dN = ctx.dim_n(), dB = ctx.dim_b();
  const std::size_t offA = 0, offM = dA, offN = dA + dM, offB = dA + dM + dN;
  const std::size_t dim = dA + dM + dN + dB;

  Tensor3 c(f, dim, dim, dim);
  const auto put = [&c](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    if (!v.is_zero()) c.set(i, j, k, v);
  };

  // A-row blocks: a a' into A, a.m' into M.
  for (std::size_t i = 0; i < dA; ++i) {
    for (std::size_t j = 0; j < dA; ++j)
      for (std::size_t k = 0; k < dA; ++k)
        put(offA + i, offA + j, offA + k, ctx.algebra_a().structure().at(i, j, k));
    for (std::size_t j = 0; j < dM; ++j)
      for (std::size_t k = 0; k < dM; ++k)
        put(offA + i, offM + j, offM + k, ctx.module_m().left_action.at(i, j, k));
  }
  // M-row blocks: phi(m, n') into A, m.b' into M.
  for (std::size_t i = 0; i < dM; ++i) {
    for (std::size_t j = 0; j < dN; ++j)
      for (std::size_t k = 0; k < dA; ++k) put(offM + i, offN + j, offA + k, ctx.phi().at(i, j, k));
    for (std::size_t j = 0; j < dB; ++j)
      for (std::size_t k = 0; k < dM; ++k)
        put(offM + i, offB + j, offM + k, ctx.module_m().right_action.at(i, j, k));
  }
  // N-row blocks: n.a' into N, psi(n, m') into B.
  for (std::size_t i = 0; i < dN; ++i) {
    for (std::size_t j = 0; j < dA; ++j)
      for (std::size_t k = 0; k < dN; ++k)
        put(offN + i, offA + j, offN + k, ctx.module_n().right_action.at(i, j, k));
    for (std::size_t j = 0; j < dM; ++j)
      for (std::size_t k = 0; k < dB; ++k) put(offN + i, offM + j, offB + k, ctx.psi().at(i, j, k));
  }
  // B-row blocks: b.n' into N, b b' into B.
  for (std::size_t i = 0; i < dB; ++i) {
    for (std::size_t j = 0; j < dN; ++j)
      for (std::size_t k = 0; k < dN; ++k)
        put(offB + i, offN + j, offN + k, ctx.module_n().left_action.at(i, j, k));
    for (std::size_t j = 0; j < dB; ++j)
      for (std::size_t k = 0; k < dB; ++k)
        put(offB + i, offB + j, offB + k, ctx.algebra_b().structure().at(i, j, k));
  }

  Vec unit = zero_vec(f, dim);
  for (std::size_t i = 0; i < dA; ++i) unit[offA + i] = ctx.algebra_a().unit()[i];
  for (std::size_t i = 0; i < dB; ++i) unit[offB + i] = ctx.algebra_b().unit()[i];

  std::vector<std::string> labels;
  labels.reserve(dim);
  const auto corner_labels = [&labels](const std::vector<std::string>& src, std::size_t d,
                                       const char* prefix) {
    for (std::size_t i = 0; i < d; ++i)
      labels.push_back(i < src.size() ? prefix + ("." + src[i]) : prefix + std::to_string(i));
  };
  corner_labels(ctx.algebra_a().labels(), dA, "a");
  corner_labels({}, dM, "m");
  corner_labels({}, dN, "n");
  corner_labels(ctx.algebra_b().labels(), dB, "b");

  StructureAlgebra alg(f, std::move(c), std::move(unit), std::move(labels));
  return GeneralizedMatrixAlgebra(ctx, std::move(alg));
}

}  // namespace gmaderiv
