#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "oracles.hpp"
#include "quiverpar/qf.hpp"
#include "quiverpar/representation.hpp"

using namespace quiverpar;

namespace {

Quiver A1() { return Quiver({"i"}, {}); }
Quiver A2() { return Quiver({"i", "j"}, {{0, 1}}); }

RationalFunction rq(int e) { return RationalFunction(LaurentPoly::monomial(e)); }

TensorWordVector tensor(const QWord& a, const QWord& b, const RationalFunction& r = 1) {
  TensorWordVector t;
  t.add(a, b, r);
  return t;
}

// (r (x) id) r and (id (x) r) r, as maps to triple tensors keyed by word triples.
using Triple = std::map<std::tuple<QWord, QWord, QWord>, RationalFunction>;

void add(Triple& t, const QWord& a, const QWord& b, const QWord& c, const RationalFunction& r) {
  auto& slot = t[{a, b, c}];
  slot += r;
  if (slot.is_zero()) t.erase({a, b, c});
}

Triple left_coassoc(const QuantumGroup& f, const WordVector& u) {
  Triple out;
  for (const auto& [k, r] : f.coproduct(u).c)
    for (const auto& [k2, r2] : f.coproduct_word(k.first).c) add(out, k2.first, k2.second, k.second, r * r2);
  return out;
}

Triple right_coassoc(const QuantumGroup& f, const WordVector& u) {
  Triple out;
  for (const auto& [k, r] : f.coproduct(u).c)
    for (const auto& [k2, r2] : f.coproduct_word(k.second).c) add(out, k.first, k2.first, k2.second, r * r2);
  return out;
}

}  // namespace

TEST(QF, ProductsAndDividedPowers) {
  QuantumGroup f(A2());
  auto p = f.product(f.theta(0), f.theta(1));
  ASSERT_EQ(p.c.size(), 1u);
  EXPECT_EQ(p.c.at({0, 1}), RationalFunction(1));
  auto d = f.divided_power(0, 2);
  EXPECT_EQ(d.c.at({0, 0}), RationalFunction(LaurentPoly(1), qint(2)));
  for (const auto& nu : dimension_vectors_up_to(2, 4))
    for (const auto& y : enumerate_flag_types(A2(), nu)) {
      // theta_{expansion(y)} = [a]! theta_y, and [a]! theta_y has integral coefficients
      auto lhs = f.theta_monomial(y.expanded());
      auto rhs = f.theta_monomial(y).scaled(RationalFunction(multifact(y.mults())));
      EXPECT_EQ(lhs, rhs);
      for (const auto& [w, r] : rhs.c) EXPECT_TRUE(r.is_laurent());
    }
}

TEST(QF, CoproductExamples) {
  QuantumGroup f(A2());
  EXPECT_EQ(f.coproduct(f.theta(0)), [] {
    auto t = tensor({0}, {});
    t += tensor({}, {0});
    return t;
  }());
  EXPECT_EQ(f.coproduct(f.word({})), tensor({}, {}));
  // r(theta_i theta_j) expanded through the twisted product equals the
  // deshuffle formula: the middle terms pick up q^{-i.j} = q on (j)(x)(i).
  auto rij = f.twisted_product(f.coproduct(f.theta(0)), f.coproduct(f.theta(1)));
  EXPECT_EQ(rij, f.coproduct(f.product(f.theta(0), f.theta(1))));
  TensorWordVector expect = tensor({0, 1}, {});
  expect += tensor({0}, {1});
  expect += tensor({1}, {0}, rq(1));
  expect += tensor({}, {0, 1});
  EXPECT_EQ(rij, expect);
}

TEST(QFProperty, CoproductIsHomomorphism) {
  std::mt19937 g(17);
  for (const auto& q : {A2(), Quiver::type_A(3), Quiver::type_D(4)}) {
    QuantumGroup f(q);
    std::uniform_int_distribution<int> vert(0, q.num_vertices() - 1), len(0, 2);
    for (int it = 0; it < 40; ++it) {
      QWord a, b;
      for (int k = len(g); k > 0; --k) a.push_back(vert(g));
      for (int k = len(g) + 1; k > 0; --k) b.push_back(vert(g));
      EXPECT_EQ(f.coproduct(f.product(f.word(a), f.word(b))),
                f.twisted_product(f.coproduct(f.word(a)), f.coproduct(f.word(b))));
    }
  }
}

TEST(QFProperty, Coassociativity) {
  for (const auto& q : {A2(), Quiver::type_A(3)}) {
    QuantumGroup f(q);
    for (const auto& nu : dimension_vectors_up_to(q.num_vertices(), 4))
      for (const auto& y : enumerate_flag_types(q, nu)) {
        auto u = f.theta_monomial(y);
        EXPECT_EQ(left_coassoc(f, u), right_coassoc(f, u)) << y.to_string(q);
      }
  }
}

TEST(QF, FormExamples) {
  QuantumGroup f(A2());
  EXPECT_TRUE(f.form(f.theta(0), f.theta(1)).is_zero());
  EXPECT_EQ(f.form(f.theta(0), f.theta(0)), RationalFunction(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::monomial(2)));
  EXPECT_EQ(f.dim_f({1, 1}), 2u);
  QuantumGroup g(A1());
  EXPECT_EQ(g.dim_f({2}), 1u);
  // (theta_i^(2), theta_i^(2)) = 1 / ((1-q^2)(1-q^4)) in this normalization
  auto d2 = g.divided_power(0, 2);
  LaurentPoly den = (LaurentPoly(1) - LaurentPoly::monomial(2)) * (LaurentPoly(1) - LaurentPoly::monomial(4));
  EXPECT_EQ(g.form(d2, d2), RationalFunction(LaurentPoly(1), den));
}

TEST(QFProperty, FormSymmetric) {
  std::mt19937 g(23);
  QuantumGroup f(Quiver::type_A(3));
  const DimVector nu{1, 2, 1};
  auto ws = f.words(nu);
  std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int it = 0; it < 40; ++it) {
    WordVector u = f.word(ws[pick(g)]).scaled(rq(e(g))) + f.word(ws[pick(g)]);
    WordVector v = f.word(ws[pick(g)]) + f.word(ws[pick(g)]).scaled(rq(e(g)));
    EXPECT_EQ(f.form(u, v), f.form(v, u));
  }
}

TEST(QFProperty, FormIsAdjointToCoproduct) {
  // (x y, z) = (x (x) y, r(z)) with the product form on f (x) f.
  QuantumGroup f(A2());
  for (const auto& nu : dimension_vectors_up_to(2, 3))
    for (const auto& z : f.words(nu))
      for (std::size_t cut = 0; cut <= z.size(); ++cut) {
        for (const auto& x : f.words(f.weight(QWord(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(cut)))))
          for (const auto& y : f.words(f.weight(QWord(z.begin() + static_cast<std::ptrdiff_t>(cut), z.end())))) {
            RationalFunction rhs;
            for (const auto& [k, r] : f.coproduct_word(z).c)
              rhs += r * f.form(f.word(x), f.word(k.first)) * f.form(f.word(y), f.word(k.second));
            EXPECT_EQ(f.form(f.product(f.word(x), f.word(y)), f.word(z)), rhs);
          }
      }
}

// dim f_nu against orbit counts of E_V over F_2 (brute force).
TEST(QFProperty, DimensionEqualsOrbitCount) {
  for (const auto& q : {A2(), Quiver::type_A(3), Quiver::type_A(3, {true, false}), Quiver::type_D(4)}) {
    QuantumGroup f(q);
    for (const auto& nu : dimension_vectors_up_to(q.num_vertices(), 4)) {
      if (oracle::rep_space_dim(q, nu) > 14) continue;
      EXPECT_EQ(f.dim_f(nu), oracle::count_distinct(oracle::orbits_over_F2(q, nu))) << q.canonical_string();
    }
  }
}

TEST(QF, SerreExamples) {
  QuantumGroup f(Quiver::type_A(3));
  auto s = f.serre_element(0, 2);
  EXPECT_EQ(s, f.word({2, 0}) - f.word({0, 2}));  // sum_a (-1)^a th_i^(a) th_j th_i^(n-a)
  EXPECT_TRUE(f.is_zero_in_f(s));
  auto t = f.serre_element(0, 1);
  for (const auto& [w, r] : t.c) EXPECT_EQ(f.weight(w), (DimVector{2, 1, 0}));
  EXPECT_TRUE(f.is_zero_in_f(t));
  EXPECT_FALSE(f.is_zero_in_f(f.word({0, 1})));
  for (const auto& q : {A2(), Quiver::type_D(4)})
    for (const auto& r : serre_check(QuantumGroup(q))) EXPECT_TRUE(r.in_radical);
}

TEST(QF, RankInF) {
  QuantumGroup f(A2());
  std::vector<WordVector> v = {f.word({0, 1}), f.word({1, 0}), f.word({0, 1}) + f.word({1, 0})};
  EXPECT_EQ(f.rank_in_f(v, {1, 1}), 2u);
  std::vector<WordVector> w = {f.word({0, 0, 1}), f.word({0, 1, 0}), f.word({1, 0, 0})};
  EXPECT_EQ(f.rank_in_f(w, {2, 1}), 2u);
}

TEST(QF, MonomialString) {
  QuantumGroup f(A2());
  EXPECT_EQ(f.monomial_string(parse_flag_type(A2(), "(i^(2) j)")), "θ[i]^{(2)}θ[j]");
}
