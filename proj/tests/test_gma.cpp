#include <doctest.h>

#include "helpers.hpp"

using namespace gmaderiv;
using testutil::GF;
using testutil::QQ;

TEST_CASE("the trivial 4-dimensional instance realizes the zero-pairing product rule") {
  const GeneralizedMatrixAlgebra g = build_gma(s_deformed_m2(QQ(), Scalar::zero(QQ())));
  CHECK(g.dim() == 4);
  // m * n = 0 and n * m = 0 under zero pairings.
  const Vec m_hat = g.embed(Corner::M, {Scalar::one(QQ())});
  const Vec n_hat = g.embed(Corner::N, {Scalar::one(QQ())});
  CHECK(is_zero_vec(g.algebra().multiply(m_hat, n_hat)));
  CHECK(is_zero_vec(g.algebra().multiply(n_hat, m_hat)));
  // a * m follows the left action, m * b the right action.
  const Vec a_hat = g.embed(Corner::A, {Scalar::of(QQ(), 3)});
  CHECK(g.algebra().multiply(a_hat, m_hat) ==
        g.embed(Corner::M, {Scalar::of(QQ(), 3)}));
}

TEST_CASE("the s = 1 deformation is the full 2x2 matrix algebra") {
  const GeneralizedMatrixAlgebra g = build_gma(s_deformed_m2(QQ(), Scalar::one(QQ())));
  // Basis order (A, M, N, B) matches (e11, e12, e21, e22).
  CHECK(g.algebra().structure() == full_matrix_algebra(2, QQ()).structure());
  CHECK(g.algebra().unit() == full_matrix_algebra(2, QQ()).unit());
}

TEST_CASE("e11 and e22 are complementary idempotents") {
  for (const auto& preset : gallery_presets()) {
    const GeneralizedMatrixAlgebra g = build_gma(make_gallery(preset.name, preset.params));
    const StructureAlgebra& alg = g.algebra();
    CHECK(add(g.e11(), g.e22()) == alg.unit());
    CHECK(alg.multiply(g.e11(), g.e11()) == g.e11());
    CHECK(alg.multiply(g.e22(), g.e22()) == g.e22());
    CHECK(is_zero_vec(alg.multiply(g.e11(), g.e22())));
  }
}

TEST_CASE("embed and project are mutually inverse and exhaustive") {
  std::mt19937_64 rng(3);
  const GeneralizedMatrixAlgebra g = build_gma(upper_triangular_context(3, QQ()));
  CHECK(g.dim() == 6);
  for (const Corner corner : {Corner::A, Corner::M, Corner::N, Corner::B}) {
    const Vec e = testutil::random_vec(QQ(), g.corner_dim(corner), rng);
    CHECK(g.project(g.embed(corner, e), corner) == e);
  }
  // The four projections, re-embedded, sum back to the element.
  const Vec x = testutil::random_vec(QQ(), g.dim(), rng);
  Vec sum = zero_vec(QQ(), g.dim());
  for (const Corner corner : {Corner::A, Corner::M, Corner::N, Corner::B})
    sum = add(sum, g.embed(corner, g.project(x, corner)));
  CHECK(sum == x);
  // Cross-corner projection of an embedded element is zero.
  const Vec m = testutil::random_vec(QQ(), g.corner_dim(Corner::M), rng);
  CHECK(is_zero_vec(g.project(g.embed(Corner::M, m), Corner::N)));
}

TEST_CASE("embedding the corner units reproduces the unit of the whole algebra") {
  const GeneralizedMatrixAlgebra g = build_gma(upper_triangular_context(4, QQ()));
  CHECK(add(g.embed(Corner::A, g.context().algebra_a().unit()),
            g.embed(Corner::B, g.context().algebra_b().unit())) == g.algebra().unit());
}

TEST_CASE("corner multiplication agrees with the corner algebras") {
  const GeneralizedMatrixAlgebra g = build_gma(c2_swap_context(QQ()));
  const StructureAlgebra& a = g.context().algebra_a();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec lhs = g.algebra().multiply(g.embed(Corner::A, a.basis_element(i)),
                                           g.embed(Corner::A, a.basis_element(j)));
      CHECK(lhs == g.embed(Corner::A, a.basis_product(i, j)));
    }
  const StructureAlgebra& b = g.context().algebra_b();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Vec lhs = g.algebra().multiply(g.embed(Corner::B, b.basis_element(i)),
                                           g.embed(Corner::B, b.basis_element(j)));
      CHECK(lhs == g.embed(Corner::B, b.basis_product(i, j)));
    }
}

TEST_CASE("products across the off-diagonal corners go through the pairings") {
  const MoritaContext ctx = s_deformed_m2(GF(5), Scalar::of(GF(5), 2));
  const GeneralizedMatrixAlgebra g = build_gma(ctx);
  for (std::size_t m = 0; m < ctx.dim_m(); ++m)
    for (std::size_t n = 0; n < ctx.dim_n(); ++n) {
      Vec em = zero_vec(GF(5), ctx.dim_m());
      em[m] = Scalar::one(GF(5));
      Vec en = zero_vec(GF(5), ctx.dim_n());
      en[n] = Scalar::one(GF(5));
      CHECK(g.algebra().multiply(g.embed(Corner::M, em), g.embed(Corner::N, en)) ==
            g.embed(Corner::A, ctx.pair_phi(em, en)));
      CHECK(g.algebra().multiply(g.embed(Corner::N, en), g.embed(Corner::M, em)) ==
            g.embed(Corner::B, ctx.pair_psi(en, em)));
    }
}

TEST_CASE("the s-deformed product rule on generic elements") {
  // [a m; n b][e m'; n' f] = [a e + s m n', a m' + m f; n e + b n', s n m' + b f]
  std::mt19937_64 rng(41);
  const auto check_rule = [&rng](const Field& f, const Scalar& s) {
    const GeneralizedMatrixAlgebra g = build_gma(s_deformed_m2(f, s));
    for (int trial = 0; trial < 4; ++trial) {
      const Vec x = testutil::random_vec(f, 4, rng);
      const Vec y = testutil::random_vec(f, 4, rng);
      const Vec expected = {x[0] * y[0] + s * x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                            x[2] * y[0] + x[3] * y[2], s * x[2] * y[1] + x[3] * y[3]};
      CHECK(g.algebra().multiply(x, y) == expected);
    }
  };
  for (const std::string& s : {"0", "1", "2", "-3", "1/2"})
    check_rule(QQ(), Scalar::parse(QQ(), s));
  for (int s = 0; s < 7; ++s) check_rule(GF(7), Scalar::of(GF(7), s));
}

TEST_CASE("e11 g e11 picks out the A corner") {
  std::mt19937_64 rng(17);
  const GeneralizedMatrixAlgebra g = build_gma(upper_triangular_context(3, QQ()));
  const Vec x = testutil::random_vec(QQ(), g.dim(), rng);
  const Vec pinched = g.algebra().multiply(g.e11(), g.algebra().multiply(x, g.e11()));
  CHECK(g.project(pinched, Corner::A) == g.project(x, Corner::A));
  CHECK(pinched == g.embed(Corner::A, g.project(x, Corner::A)));
}

TEST_CASE("corner element shape errors are rejected") {
  const GeneralizedMatrixAlgebra g = build_gma(s_deformed_m2(QQ(), Scalar::one(QQ())));
  CHECK_THROWS_AS(g.embed(Corner::M, zero_vec(QQ(), 2)), DimensionError);
  CHECK_THROWS_AS(g.project(zero_vec(QQ(), 3), Corner::A), DimensionError);
}
