#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "oracles.hpp"
#include "quiverpar/flagcount.hpp"
#include "quiverpar/typea.hpp"

using namespace quiverpar;

namespace {

Quiver A1() { return Quiver({"i"}, {}); }
Quiver A2() { return Quiver({"i", "j"}, {{0, 1}}); }

LaurentPoly t(int e, long c = 1) { return LaurentPoly::monomial(e, c); }

Representation random_rep(const Quiver& q, const DimVector& nu, int p, std::mt19937& g) {
  const int D = oracle::rep_space_dim(q, nu);
  long code = 0;
  for (int k = 0; k < D; ++k) code = code * p + std::uniform_int_distribution<int>(0, p - 1)(g);
  return oracle::decode_rep(q, nu, code, p);
}

}  // namespace

TEST(FiniteField, Axioms) {
  for (int q : {2, 3, 4, 8, 9, 16, 25, 27}) {
    const FiniteField& F = field(q);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(static_cast<FiniteField::Elem>(a), F.neg(static_cast<FiniteField::Elem>(a))), 0);
      if (a) EXPECT_EQ(F.mul(static_cast<FiniteField::Elem>(a), F.inv(static_cast<FiniteField::Elem>(a))), 1);
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; c += 3) {
          auto A = static_cast<FiniteField::Elem>(a), B = static_cast<FiniteField::Elem>(b),
               C = static_cast<FiniteField::Elem>(c);
          EXPECT_EQ(F.mul(A, F.add(B, C)), F.add(F.mul(A, B), F.mul(A, C)));
          EXPECT_EQ(F.mul(F.mul(A, B), C), F.mul(A, F.mul(B, C)));
        }
    }
  }
  EXPECT_TRUE(is_prime_power(49));
  EXPECT_FALSE(is_prime_power(12));
  EXPECT_EQ(default_prime_powers(6), (std::vector<int>{2, 3, 4, 5, 7, 8}));
}

TEST(Gaussian, MatchesSubspaceCount) {
  for (int p : {2, 3})
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        EXPECT_EQ(gaussian_value(n, k, p), oracle::count_subspaces(p, n, k)) << n << " " << k;
        EXPECT_EQ(gaussian_poly(n, k).eval(p), BigRat(oracle::count_subspaces(p, n, k)));
      }
  EXPECT_EQ(gaussian_poly(2, 1), t(0) + t(1));
}

TEST(CountFiber, Examples) {
  auto a2 = A2();
  auto y_ij = parse_flag_type(a2, "(i j)");
  auto zero = zero_representation(a2, {1, 1});
  Representation gen = zero;
  gen.maps[0].at(0, 0) = 1;
  for (int q : {2, 3, 4, 5, 7}) {
    EXPECT_EQ(count_fiber(a2, zero, y_ij, q), 1);
    EXPECT_EQ(count_fiber(a2, gen, y_ij, q), 0);
    EXPECT_EQ(count_fiber(A1(), zero_representation(A1(), {2}), parse_flag_type(A1(), "(i i)"), q), q + 1);
  }
}

// count_fiber against exhaustive enumeration of subspaces, for random points
// of E_V over F_2 and F_3.
TEST(CountFiberProperty, MatchesBruteForce) {
  std::mt19937 g(31);
  std::vector<Quiver> qs = oracle::path_orientations(3);
  qs.push_back(A2());
  qs.push_back(Quiver::type_D(4));
  for (const auto& q : qs)
    for (const auto& nu : dimension_vectors_up_to(q.num_vertices(), 4)) {
      auto ys = enumerate_flag_types(q, nu);
      for (int p : {2, 3}) {
        if (p == 3 && total(nu) > 3) continue;
        for (int it = 0; it < 3; ++it) {
          auto x = random_rep(q, nu, p, g);
          const auto& y = ys[std::uniform_int_distribution<std::size_t>(0, ys.size() - 1)(g)];
          EXPECT_EQ(count_fiber(q, x, y, p), oracle::fiber_count(q, x, y, p))
              << q.canonical_string() << " " << y.to_string(q) << " p=" << p;
        }
      }
    }
}

TEST(CountFiber, Budget) {
  auto q = Quiver::type_A(3);
  auto x = zero_representation(q, {2, 2, 2});
  // sources first: no subspace is enumerated, so no budget is spent
  EXPECT_NO_THROW(count_fiber(q, x, parse_flag_type(q, "(1 1 2 2 3 3)"), 5, 10));
  auto y = parse_flag_type(q, "(3 2 1 3 2 1)");
  EXPECT_THROW(count_fiber(q, x, y, 5, 10), BudgetExceeded);
  EXPECT_EQ(count_fiber(q, x, y, 5, 1000000), count_fiber(q, x, y, 5));
}

TEST(FlagVariety, Examples) {
  auto a1 = A1();
  auto y = parse_flag_type(a1, "(i i)");
  EXPECT_EQ(count_flagvar_poly(a1, y), t(0) + t(1));
  EXPECT_EQ(dim_Ftilde(a1, y), 1);
  EXPECT_EQ(dim_F(a1, y), 1);
  EXPECT_EQ(dim_Ftilde(a1, parse_flag_type(a1, "(i^(2))")), 0);
  auto a2 = A2();
  EXPECT_EQ(dim_Ftilde(a2, parse_flag_type(a2, "(i j)")), 0);
  EXPECT_EQ(dim_Ftilde(a2, parse_flag_type(a2, "(j i)")), 1);
}

// sum_x #fiber(x) = #F~_y = #F_y * q^{dim F~_y - dim F_y}, by enumerating E_V(F_2).
TEST(FlagVarietyProperty, TotalSpaceCount) {
  for (const auto& q : {A2(), Quiver::type_A(3, {true, false}), Quiver::type_D(4)})
    for (const auto& nu : dimension_vectors_up_to(q.num_vertices(), 3)) {
      const int D = oracle::rep_space_dim(q, nu);
      if (D > 8) continue;
      for (const auto& y : enumerate_flag_types(q, nu)) {
        BigInt sum = 0;
        for (long c = 0; c < (1L << D); ++c) sum += count_fiber(q, oracle::decode_rep(q, nu, c, 2), y, 2);
        const BigInt fl = count_flagvar(q, y, 2);
        EXPECT_EQ(fl, oracle::fiber_count(q, zero_representation(q, nu), y, 2));
        EXPECT_EQ(sum, fl * (BigInt(1) << static_cast<unsigned long>(dim_Ftilde(q, y) - dim_F(q, y))))
            << y.to_string(q);
      }
    }
}

TEST(Interpolation, RecoversPolynomials) {
  std::vector<int> qs = {2, 3, 4, 5, 7};
  std::vector<BigInt> c;
  for (int q : qs) c.push_back(BigInt(q * q + q + 1));
  auto r = interpolate_counts(qs, c, 2, 3);
  EXPECT_FALSE(r.alert);
  EXPECT_EQ(r.poly, t(2) + t(1) + 1);
  // not a polynomial: parity of q leaks into the count
  std::vector<BigInt> bad;
  for (int q : qs) bad.push_back(BigInt(q + (q % 2)));
  EXPECT_TRUE(interpolate_counts(qs, bad, 2, 3).alert);
  // negative coefficient
  std::vector<BigInt> neg;
  for (int q : qs) neg.push_back(BigInt(q * q - q + 1));
  EXPECT_TRUE(interpolate_counts(qs, neg, 2, 3).alert);
  // degree above the bound
  std::vector<BigInt> cube;
  for (int q : qs) cube.push_back(BigInt(q * q * q));
  EXPECT_TRUE(interpolate_counts(qs, cube, 1, 2).alert);
  // empty-fiber bound
  EXPECT_FALSE(interpolate_counts(qs, std::vector<BigInt>(5, 0), -1, 0).alert);
  EXPECT_TRUE(interpolate_counts(qs, std::vector<BigInt>(5, 1), -1, 0).alert);
}

TEST(Interpolation, SampleSets) {
  for (long D = -1; D <= 8; ++D) {
    auto s = sample_prime_powers(D);
    EXPECT_GE(s.size(), static_cast<std::size_t>(std::max<long>(D + 3, 5)));
    for (int q : s) EXPECT_TRUE(is_prime_power(q));
  }
  auto pref = sample_prime_powers(1, {2, 3, 5, 7, 11});
  EXPECT_EQ(pref, (std::vector<int>{2, 3, 5, 7, 11}));
}

TEST(Poincare, Examples) {
  auto a1 = A1();
  auto r = poincare_fiber(a1, zero_representation(a1, {2}), parse_flag_type(a1, "(i i)"), 1, sample_prime_powers(1));
  EXPECT_EQ(r.poly, t(0) + t(1));
  auto a2 = A2();
  auto s = poincare_fiber(a2, zero_representation(a2, {1, 1}), parse_flag_type(a2, "(i j)"), 0, sample_prime_powers(0));
  EXPECT_EQ(s.poly, LaurentPoly(1));
  Representation gen = zero_representation(a2, {1, 1});
  gen.maps[0].at(0, 0) = 1;
  auto e = poincare_fiber(a2, gen, parse_flag_type(a2, "(i j)"), -1, sample_prime_powers(-1));
  EXPECT_TRUE(e.poly.is_zero());
  EXPECT_FALSE(e.alert);
}

TEST(Scan, A2Cap3IsEvenConsistent) {
  ScanOptions opt;
  opt.nu_cap = 3;
  auto rep = evenness_scan(A2(), opt);
  EXPECT_EQ(rep.verdict, "even-consistent");
  EXPECT_EQ(rep.alerts, 0u);
  EXPECT_EQ(rep.fibers.size(), 38u);
}

TEST(Scan, A3ExpandedCap4) {
  ScanOptions opt;
  opt.nu_cap = 4;
  opt.expanded_only = true;
  EXPECT_EQ(evenness_scan(Quiver::type_A(3), opt).verdict, "even-consistent");
}

TEST(Scan, D4SubspaceOrientationFitsOnPrimes) {
  auto q = Quiver::type_D(4, true);
  ScanOptions opt;
  opt.prime_powers = {2, 3, 5, 7, 11};
  auto recs = scan_weight(q, root_system(q), {1, 2, 1, 1}, opt);
  for (const auto& r : recs) {
    EXPECT_FALSE(r.result.alert) << r.y.to_string(q);
    if (r.result.degree_bound <= 2) EXPECT_EQ(r.result.qs, opt.prime_powers);
  }
}

TEST(ScanProperty, DegreeBoundAndJobsDeterminism) {
  auto q = Quiver::type_A(3, {false, true});
  auto rs = root_system(q);
  ScanOptions one, many;
  many.jobs = 3;
  for (const auto& nu : dimension_vectors_up_to(3, 3)) {
    auto a = scan_weight(q, rs, nu, one), b = scan_weight(q, rs, nu, many);
    ASSERT_EQ(a.size(), b.size());
    auto orb = orbits(q, rs, nu);
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].result.poly, b[k].result.poly);
      if (!a[k].result.poly.is_zero())
        EXPECT_LE(a[k].result.poly.max_exp(), dim_Ftilde(q, a[k].y) - orb[static_cast<std::size_t>(a[k].orbit)].dim);
    }
  }
}

TEST(TypeA, XCountMatchesBruteForce) {
  // W the standard flag with steps v; count U of dim k with dim U cap W_a = d_a.
  for (int p : {2, 3}) {
    for (const auto& v : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 2}}) {
      const int n = std::accumulate(v.begin(), v.end(), 0);
      if (p == 3 && n > 3) continue;
      oracle::Space S{p, n};
      std::vector<oracle::Sub> W;
      int acc = 0;
      for (int a : v) {
        acc += a;
        oracle::Sub U{0};
        for (int e = 0; e < acc; ++e) {
          std::vector<int> d(static_cast<std::size_t>(n), 0);
          d[static_cast<std::size_t>(e)] = 1;
          U = oracle::span_with(S, U, S.code(d));
        }
        W.push_back(U);
      }
      std::map<std::pair<std::vector<int>, int>, long> brute;
      for (const auto& U : oracle::all_subspaces(S)) {
        std::vector<int> d;
        for (const auto& Wa : W) d.push_back(oracle::sub_dim(S, oracle::intersect(U, Wa)));
        ++brute[{d, oracle::sub_dim(S, U)}];
      }
      for (const auto& [key, cnt] : brute)
        EXPECT_EQ(typeA_X_count(v, key.first, key.second).eval(p), BigRat(cnt));
    }
  }
  EXPECT_EQ(typeA_X_count({1, 1}, {0, 1}, 1), t(1));  // lines of a plane off a fixed line
  EXPECT_EQ(typeA_X_count({1, 1}, {1, 1}, 1), LaurentPoly(1));
}

TEST(TypeAProperty, CellRecursionEqualsInterpolation) {
  for (const auto& q : oracle::path_orientations(3)) {
    auto rs = root_system(q);
    for (const auto& nu : dimension_vectors_up_to(3, 4)) {
      auto orb = orbits(q, rs, nu);
      for (const auto& r : scan_weight(q, rs, nu, ScanOptions{}))
        EXPECT_EQ(typeA_cell_recursion(q, orb[static_cast<std::size_t>(r.orbit)].rep, r.y), r.result.poly)
            << q.canonical_string() << " " << r.y.to_string(q);
    }
  }
  auto a2 = A2();
  EXPECT_EQ(typeA_cell_recursion(a2, zero_representation(a2, {1, 1}), parse_flag_type(a2, "(i j)")), LaurentPoly(1));
  EXPECT_THROW(typeA_cell_recursion(Quiver::type_D(4), zero_representation(Quiver::type_D(4), {1, 1, 1, 1}),
                                    parse_flag_type(Quiver::type_D(4), "(1 2 3 4)")),
               std::invalid_argument);
}
