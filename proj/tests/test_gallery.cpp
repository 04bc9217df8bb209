#include <doctest.h>

#include "helpers.hpp"

using namespace gmaderiv;
using testutil::GF;
using testutil::QQ;

TEST_CASE("every preset context validates and builds") {
  for (const auto& preset : gallery_presets()) {
    INFO(preset.label());
    const MoritaContext ctx = make_gallery(preset.name, preset.params);
    CHECK(validate_context(ctx).ok());
    CHECK(build_gma(ctx).dim() ==
          ctx.dim_a() + ctx.dim_m() + ctx.dim_n() + ctx.dim_b());
  }
}

TEST_CASE("triangular slices have the dimensions of the triangular algebras") {
  for (const std::size_t n : {2u, 3u, 4u}) {
    const GeneralizedMatrixAlgebra g = build_gma(upper_triangular_context(n, QQ()));
    CHECK(g.dim() == n * (n + 1) / 2);
  }
  CHECK_THROWS_AS(upper_triangular_context(1, QQ()), DimensionError);
}

TEST_CASE("triangular slices: every Jordan derivation is a derivation") {
  // n = 2: dims 2 over the rationals and over GF(3).
  for (const Field& f : {QQ(), GF(3)}) {
    const GeneralizedMatrixAlgebra g = build_gma(upper_triangular_context(2, f));
    CHECK(derivation_space(g.algebra()).dimension() == 2);
    CHECK(jordan_derivation_space(g.algebra()).dimension() == 2);
  }
  const GeneralizedMatrixAlgebra g3 = build_gma(upper_triangular_context(3, QQ()));
  CHECK(derivation_space(g3.algebra()).dimension() == 5);
  CHECK(jordan_derivation_space(g3.algebra()).dimension() == 5);
}

TEST_CASE("triangular algebras: solver dimension matches the inner-derivation oracle") {
  for (const std::size_t n : {2u, 3u, 4u}) {
    const StructureAlgebra tn = upper_triangular_algebra(n, QQ());
    const std::size_t der = derivation_space(tn).dimension();
    const std::size_t jder = jordan_derivation_space(tn).dimension();
    const std::size_t inner = inner_derivation_space(tn).dimension();
    const std::size_t oracle = tn.dim() - center_basis(tn).size();
    CHECK(der == jder);
    CHECK(der == inner);
    CHECK(der == oracle);
    CHECK(der == n * (n + 1) / 2 - 1);
  }
}

TEST_CASE("the s-deformation sweep over small prime fields") {
  for (const std::uint64_t p : {3ull, 5ull, 7ull}) {
    const Field f = GF(p);
    for (std::uint64_t s = 0; s < p; ++s) {
      const GeneralizedMatrixAlgebra g =
          build_gma(s_deformed_m2(f, Scalar::of(f, static_cast<long long>(s))));
      const MapSubspace der = derivation_space(g.algebra());
      const MapSubspace ader = antiderivation_space(g.algebra());
      const MapSubspace jder = jordan_derivation_space(g.algebra());
      if (s == 0) {
        CHECK(same_subspace(subspace_sum(der, ader), jder));
        CHECK(certify_jordan_splitting(g).verdict == Verdict::Certified);
      } else {
        CHECK(ader.dimension() == 0);
        CHECK(same_subspace(der, jder));
      }
    }
  }
}

TEST_CASE("s-deformed dimensions over the rationals") {
  const GeneralizedMatrixAlgebra s0 = build_gma(s_deformed_m2(QQ(), Scalar::zero(QQ())));
  CHECK(derivation_space(s0.algebra()).dimension() == 4);
  CHECK(antiderivation_space(s0.algebra()).dimension() == 4);
  CHECK(jordan_derivation_space(s0.algebra()).dimension() == 6);

  const GeneralizedMatrixAlgebra s1 = build_gma(s_deformed_m2(QQ(), Scalar::one(QQ())));
  CHECK(derivation_space(s1.algebra()).dimension() == 3);
  CHECK(jordan_derivation_space(s1.algebra()).dimension() == 3);
  CHECK(antiderivation_space(s1.algebra()).dimension() == 0);
}

TEST_CASE("trivial_gma rejects two zero modules and validates good blocks") {
  const Field f = QQ();
  const StructureAlgebra t2 = upper_triangular_algebra(2, f);
  // T3 sliced by hand: A = T2, B = field, M = field^2, N = 0.
  Bimodule m{2, Tensor3(f, t2.dim(), 2, 2), Tensor3(f, 2, 1, 2)};
  m.left_action.set(0, 0, 0, Scalar::one(f));  // e11 . v0 = v0
  m.left_action.set(1, 1, 0, Scalar::one(f));  // e12 . v1 = v0
  m.left_action.set(2, 1, 1, Scalar::one(f));  // e22 . v1 = v1
  m.right_action.set(0, 0, 0, Scalar::one(f));
  m.right_action.set(1, 0, 1, Scalar::one(f));
  Bimodule n{0, Tensor3(f, 1, 0, 0), Tensor3(f, 0, t2.dim(), 0)};
  const MoritaContext ctx = trivial_gma(t2, field_algebra(f), m, n);
  CHECK(validate_context(ctx).ok());
  // Same structure as the built-in slice.
  const MoritaContext slice = upper_triangular_context(3, f);
  CHECK(build_gma(ctx).algebra().structure() == build_gma(slice).algebra().structure());

  // Corrupting a module axiom invalidates the context.
  Bimodule bad = m;
  bad.left_action.set(0, 0, 1, Scalar::one(f));
  const MoritaContext broken = trivial_gma(t2, field_algebra(f), bad, n);
  CHECK_FALSE(validate_context(broken).ok());
}

TEST_CASE("gamma = theta1 + theta2 wherever the identification exists") {
  for (const auto& preset : gallery_presets()) {
    const MoritaContext ctx = make_gallery(preset.name, preset.params);
    if (ctx.dim_m() != ctx.dim_n()) continue;
    const GeneralizedMatrixAlgebra g = build_gma(ctx);
    CHECK(gamma_jord(g) == theta1(g) + theta2(g));
  }
  const GeneralizedMatrixAlgebra slice = build_gma(upper_triangular_context(3, QQ()));
  CHECK_THROWS_AS(gamma_jord(slice), DimensionError);  // dim M = 2, dim N = 0
}

TEST_CASE("theta1 is a derivation and theta2 an antiderivation on zero-pairing instances") {
  for (const Field& f : {QQ(), GF(3), GF(5), GF(7)}) {
    const GeneralizedMatrixAlgebra g = build_gma(s_deformed_m2(f, Scalar::zero(f)));
    CHECK(is_derivation(g.algebra(), theta1(g)));
    CHECK(is_antiderivation(g.algebra(), theta2(g)));
    CHECK(is_jordan_derivation(g.algebra(), gamma_jord(g)));
  }
}

TEST_CASE("the C2 swap instance has the expected shape and nondegenerate pairings") {
  const MoritaContext ctx = c2_swap_context(QQ());
  CHECK(ctx.dim_a() == 1);  // fixed ring of the swap
  CHECK(ctx.dim_b() == 4);  // skew group algebra
  CHECK(ctx.dim_m() == 2);
  CHECK(ctx.dim_n() == 2);
  CHECK(validate_context(ctx).ok());
  const GeneralizedMatrixAlgebra g = build_gma(ctx);
  CHECK(g.dim() == 9);
  CHECK(is_nondegenerate(ctx, PairingSide::Phi));
  CHECK(is_nondegenerate(ctx, PairingSide::Psi));
  CHECK(is_faithful(ctx, WhichModule::M, ActionSide::Left));
  CHECK(is_faithful(ctx, WhichModule::M, ActionSide::Right));
  CHECK(antiderivation_space(g.algebra()).dimension() == 0);
}

TEST_CASE("the trivial group leaves the algebra as its own fixed ring") {
  const Field f = QQ();
  const StructureAlgebra a = direct_sum_fields(f, 2);
  GroupAction one;
  one.table = {{0}};
  one.matrices = {Matrix::identity(f, 2)};
  const MoritaContext ctx = skew_group_context(a, one);
  CHECK(ctx.dim_a() == 2);  // A^G = A
  CHECK(ctx.dim_b() == 2);  // A*G = A
  CHECK(validate_context(ctx).ok());
  // Pairings reduce to plain multiplication: phi(u1, u1) = u1 (in the
  // fixed-ring coordinates), phi(u1, u2) = 0.
  const Vec u1 = {Scalar::one(f), Scalar::zero(f)};
  const Vec u2 = {Scalar::zero(f), Scalar::one(f)};
  CHECK_FALSE(is_zero_vec(ctx.pair_phi(u1, u1)));
  CHECK(is_zero_vec(ctx.pair_phi(u1, u2)));
}

TEST_CASE("invalid group actions are rejected") {
  const Field f = QQ();
  const StructureAlgebra a = direct_sum_fields(f, 2);

  GroupAction broken_table;
  broken_table.table = {{0, 1}, {0, 1}};  // element 1 has no inverse row
  broken_table.matrices = {Matrix::identity(f, 2), Matrix::identity(f, 2)};
  CHECK_THROWS_AS(validate_group_action(a, broken_table), AlgebraError);

  GroupAction not_an_automorphism;
  not_an_automorphism.table = {{0, 1}, {1, 0}};
  Matrix shear = Matrix::identity(f, 2);
  shear.at(0, 1) = Scalar::one(f);  // sends the unit (1,1) to (2,1)
  not_an_automorphism.matrices = {Matrix::identity(f, 2), shear};
  CHECK_THROWS_AS(validate_group_action(a, not_an_automorphism), AlgebraError);
}

TEST_CASE("gallery lookup errors") {
  CHECK_THROWS_AS(make_gallery("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(make_gallery("trivial", {{"bogus", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(make_gallery("trivial", {{"field", "gf6"}}), std::invalid_argument);
  CHECK_THROWS_AS(make_gallery("triangular", {{"n", "1"}}), DimensionError);
}

TEST_CASE("the trivial-q alias matches the explicit parameters") {
  const MoritaContext a = make_gallery("trivial-q");
  const MoritaContext b = make_gallery("trivial", {{"field", "q"}});
  CHECK(a.phi() == b.phi());
  CHECK(a.dim_a() == b.dim_a());
  CHECK(a.field() == b.field());
}
