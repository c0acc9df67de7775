#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "klr_random.hpp"
#include "oracles.hpp"
#include "quiverpar/klr.hpp"

using namespace quiverpar;

namespace {

Quiver A1() { return Quiver({"i"}, {}); }
Quiver A2() { return Quiver({"i", "j"}, {{0, 1}}); }

MPoly var(int m, int k) { return MPoly::var(m, k); }

}  // namespace

TEST(Klr, NilHeckeExamples) {
  KlrAlgebra A(A1(), {2});
  const Seq ii{0, 0};
  auto t = A.tau(ii, 0);
  EXPECT_TRUE(A.multiply(t, t).is_zero());
  EXPECT_EQ(A.multiply(t, A.x(ii, 0)) - A.multiply(A.x(ii, 1), t), -A.idem(ii));
  EXPECT_EQ(A.degree(t), -2);
  EXPECT_EQ(A.degree(A.x(ii, 0)), 2);
}

TEST(Klr, MixedQuadraticRelation) {
  KlrAlgebra A(A2(), {1, 1});
  const Seq ij{0, 1}, ji{1, 0};
  auto lhs = A.multiply(A.tau(ji, 0), A.tau(ij, 0));
  EXPECT_EQ(lhs, A.poly(ij, -(var(2, 0) - var(2, 1))));
  EXPECT_EQ(A.degree(A.tau(ij, 0)), 1);
}

TEST(Klr, ActionExamples) {
  KlrAlgebra A(A1(), {2});
  const Seq ii{0, 0};
  PolElement f{{ii, var(2, 0)}};
  auto g = A.act(A.tau(ii, 0), f);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.at(ii), MPoly::constant(2, -1));

  KlrAlgebra B(A2(), {1, 1});
  const Seq ij{0, 1}, ji{1, 0};
  PolElement h{{ij, var(2, 0) * var(2, 0)}, {ji, var(2, 1)}};
  auto p = B.act(B.idem(ij), h);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.at(ij), h.at(ij));
  // s_l(i) != i: tau 1_i f = (x_l - x_{l+1})^{h_{i_l, i_{l+1}}} s_l(f); h(i,j) = 1, h(j,i) = 0.
  auto r1 = B.act(B.tau(ij, 0), PolElement{{ij, var(2, 0)}});
  auto r2 = B.act(B.tau(ji, 0), PolElement{{ji, var(2, 0)}});
  EXPECT_EQ(r1.at(ji), (var(2, 0) - var(2, 1)) * var(2, 1));
  EXPECT_EQ(r2.at(ij), var(2, 1));
}

TEST(Klr, CheckRelationsSmall) {
  EXPECT_EQ(check_relations(A2(), {1, 1}).failures(), 0u);
  EXPECT_EQ(check_relations(A1(), {3}).failures(), 0u);
  EXPECT_EQ(check_relations(Quiver::type_A(3), {1, 1, 1}).failures(), 0u);
  EXPECT_EQ(check_relations(Quiver::type_A(3, {true, false}), {1, 1, 1}).failures(), 0u);
}

TEST(Klr, DividedIdempotent) {
  for (int m = 1; m <= 4; ++m) {
    KlrAlgebra A(A1(), {m});
    auto e = divided_idempotent(A, 0);
    EXPECT_EQ(A.multiply(e, e), e) << m;
    EXPECT_EQ(A.degree(e), 0) << m;
  }
  KlrAlgebra A(A1(), {1});
  EXPECT_EQ(divided_idempotent(A, 0), A.idem({0}));
  // m = 2: e = -x(1) tau, the sign making e^2 = e under tau x(1) - x(2) tau = -1.
  KlrAlgebra B(A1(), {2});
  EXPECT_EQ(divided_idempotent(B, 0), -B.multiply(B.x({0, 0}, 0), B.tau({0, 0}, 0)));
}

TEST(Klr, GradedRankExamples) {
  KlrAlgebra A(A2(), {1, 1});
  EXPECT_EQ(A.graded_rank({0, 1}, {0, 1}), LaurentPoly(1));
  EXPECT_EQ(A.graded_rank({1, 0}, {0, 1}), LaurentPoly::monomial(1));
  KlrAlgebra B(A1(), {2});
  EXPECT_EQ(B.graded_rank({0, 0}, {0, 0}), LaurentPoly(1) + LaurentPoly::monomial(-2));
}

TEST(Klr, InductionExamples) {
  auto q = A2();
  KlrAlgebra Ai(q, {1, 0}), Aj(q, {0, 1}), A(q, {1, 1});
  EXPECT_EQ(induction_embed(Ai, Aj, A, Ai.idem({0}), Aj.idem({1})), A.idem({0, 1}));
  EXPECT_EQ(induction_embed(Ai, Aj, A, Ai.x({0}, 0), Aj.idem({1})), A.x({0, 1}, 0));
  KlrAlgebra A2i(q, {2, 0}), A2j(q, {0, 2}), B(q, {2, 2});
  EXPECT_EQ(induction_embed(A2i, A2j, B, A2i.idem({0, 0}), A2j.tau({1, 1}, 0)), B.tau({0, 0, 1, 1}, 2));
}

TEST(KlrProperty, IdempotentsOrthogonal) {
  KlrAlgebra A(Quiver::type_A(3), {1, 1, 1});
  std::mt19937 g(3);
  for (const auto& i : A.sequences())
    for (const auto& j : A.sequences()) {
      auto p = A.multiply(A.idem(i), A.idem(j));
      EXPECT_EQ(p, i == j ? A.idem(i) : KlrElement{});
    }
  for (int it = 0; it < 30; ++it) {
    auto u = testing_klr::random_element(A, g, 3, 2);
    EXPECT_EQ(A.multiply(A.one(), u), u);
    EXPECT_EQ(A.multiply(u, A.one()), u);
  }
}

TEST(KlrProperty, ActionIsAssociative) {
  std::mt19937 g(5);
  for (const auto& q : {A2(), Quiver::type_A(3)})
    for (const auto& nu : dimension_vectors_up_to(q.num_vertices(), 3)) {
      KlrAlgebra A(q, nu);
      for (int it = 0; it < 20; ++it) {
        auto u = testing_klr::random_element(A, g, 2, 1);
        auto v = testing_klr::random_element(A, g, 2, 1);
        auto f = testing_klr::random_pol(A, g, 2);
        EXPECT_EQ(A.act(A.multiply(u, v), f), A.act(u, A.act(v, f)));
      }
    }
}

TEST(KlrProperty, ProductsAreHomogeneous) {
  std::mt19937 g(9);
  KlrAlgebra A(Quiver::type_D(4), {1, 1, 1, 1});
  for (int it = 0; it < 60; ++it) {
    auto u = testing_klr::random_term(A, g, 2), v = testing_klr::random_term(A, g, 2);
    auto p = A.multiply(u, v);
    if (p.is_zero()) continue;
    auto d = A.degree(p);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(*d, *A.degree(u) + *A.degree(v));
  }
}

TEST(KlrProperty, InductionIsHomomorphism) {
  std::mt19937 g(13);
  auto q = Quiver::type_A(3);
  KlrAlgebra A1(q, {1, 1, 0}), A2(q, {0, 1, 1}), A(q, {1, 2, 1});
  for (int it = 0; it < 25; ++it) {
    auto u1 = testing_klr::random_element(A1, g, 2, 1), v1 = testing_klr::random_element(A1, g, 2, 1);
    auto u2 = testing_klr::random_element(A2, g, 2, 1), v2 = testing_klr::random_element(A2, g, 2, 1);
    EXPECT_EQ(A.multiply(induction_embed(A1, A2, A, u1, u2), induction_embed(A1, A2, A, v1, v2)),
              induction_embed(A1, A2, A, A1.multiply(u1, v1), A2.multiply(u2, v2)));
  }
}

// R 1_(i..i) = sum over w of P_{i,m}[2l(w) - l_m], as graded dimensions.
TEST(KlrProperty, NilHeckeDecomposition) {
  for (int m = 1; m <= 3; ++m) {
    KlrAlgebra A(A1(), {m});
    const Seq i(static_cast<std::size_t>(m), 0);
    auto e = divided_idempotent(A, 0);
    const int dmin = -m * (m - 1), dmax = dmin + 6;
    auto whole = free_graded_dims(A, i, dmin, dmax);
    auto pe = left_ideal_graded_dims(A, e, i, dmin, dmax);
    LaurentPoly mult;  // sum_w q^{2l(w)}
    for (const auto& w : all_perms(m)) mult += LaurentPoly::monomial(2 * perm_length(w));
    EXPECT_EQ(mult, qfact(m).shifted(static_cast<int>(lm(m))));
    for (int d = dmin; d <= dmax; ++d) {
      long s = 0;
      for (const auto& [k, c] : mult.terms())
        if (d - k >= dmin) s += c.get_si() * pe[static_cast<std::size_t>(d - k - dmin)];
      EXPECT_EQ(whole[static_cast<std::size_t>(d - dmin)], s) << "m=" << m << " d=" << d;
    }
  }
}

TEST(KlrProperty, ProjectiveOfExpansion) {
  auto q = A2();
  for (const auto& nu : dimension_vectors_up_to(2, 3)) {
    KlrAlgebra A(q, nu);
    for (const auto& y : enumerate_flag_types(q, nu)) {
      const auto pc = projective_class(y);
      const int dmin = -A.m() * (A.m() - 1) - 2, dmax = dmin + 6;
      auto ey = flag_idempotent(A, y);
      EXPECT_EQ(A.multiply(ey, ey), ey);
      auto py = left_ideal_graded_dims(A, ey, pc.ui, dmin, dmax);
      auto pui = free_graded_dims(A, pc.ui, dmin, dmax);
      const LaurentPoly mult = pc.afact.shifted(static_cast<int>(pc.la));
      for (int d = dmin; d <= dmax; ++d) {
        long s = 0;
        for (const auto& [k, c] : mult.terms())
          if (d - k >= dmin) s += c.get_si() * py[static_cast<std::size_t>(d - k - dmin)];
        EXPECT_EQ(pui[static_cast<std::size_t>(d - dmin)], s) << y.to_string(q) << " d=" << d;
      }
    }
  }
}
