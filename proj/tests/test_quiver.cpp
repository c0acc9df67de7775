#include <gtest/gtest.h>

#include "printers.hpp"

#include <set>

#include "oracles.hpp"
#include "quiverpar/finite_field.hpp"
#include "quiverpar/quiver.hpp"
#include "quiverpar/representation.hpp"

using namespace quiverpar;

namespace {

// Sequences of steps (vertex, mult >= 1) exhausting nu: an independent count of Y_nu.
long count_flag_types(const DimVector& nu) {
  if (total(nu) == 0) return 1;
  long s = 0;
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (int a = 1; a <= nu[i]; ++a) {
      DimVector r = nu;
      r[i] -= a;
      s += count_flag_types(r);
    }
  return s;
}

Representation simple(const Quiver& q, int i) {
  DimVector d(static_cast<std::size_t>(q.num_vertices()), 0);
  d[static_cast<std::size_t>(i)] = 1;
  return zero_representation(q, d);
}

}  // namespace

TEST(Quiver, SymmetricForm) {
  auto a2 = Quiver::type_A(2);
  EXPECT_EQ(a2.symform(0, 1), -1);
  EXPECT_EQ(a2.symform(1, 0), -1);
  EXPECT_EQ(a2.symform(0, 0), 2);
  EXPECT_EQ(a2.h(0, 1), 1);
  EXPECT_EQ(a2.h(1, 0), 0);
  auto a3 = Quiver::type_A(3);
  EXPECT_EQ(a3.symform(0, 2), 0);
}

TEST(Quiver, TypeDetection) {
  EXPECT_EQ(Quiver::type_D(4).type_string(), "D4");
  EXPECT_EQ(Quiver::type_E(6).type_string(), "E6");
  EXPECT_EQ(Quiver({"a", "b", "c"}, {{0, 1}}).type_string(), "A2xA1");
  EXPECT_THROW(Quiver({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Quiver({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(Quiver({"a", "b"}, {{0, 1}}, "A3"), std::invalid_argument);
  EXPECT_THROW(Quiver({"a", "a"}, {}), std::invalid_argument);
}

TEST(FlagTypes, Examples) {
  Quiver a1({"i"}, {});
  auto ys = enumerate_flag_types(a1, {2});
  ASSERT_EQ(ys.size(), 2u);
  std::set<std::string> names;
  for (const auto& y : ys) names.insert(y.to_string(a1));
  EXPECT_EQ(names, (std::set<std::string>{"(i i)", "(i^(2))"}));
  EXPECT_EQ(enumerate_flag_types(a1, {1}).size(), 1u);
  Quiver a2({"i", "j"}, {{0, 1}});
  auto y = parse_flag_type(a2, "(i^(2) j)");
  EXPECT_EQ(y.expansion(), (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(y.weight(2), (DimVector{2, 1}));
}

TEST(FlagTypes, CountMatchesCompositions) {
  auto d4 = Quiver::type_D(4);
  for (const auto& nu : dimension_vectors_up_to(4, 4))
    EXPECT_EQ(static_cast<long>(enumerate_flag_types(d4, nu).size()), count_flag_types(nu));
  EXPECT_THROW(enumerate_flag_types(d4, {2, 2, 2, 2}, 10), BudgetExceeded);
}

TEST(FlagTypes, SequencesAreMultinomial) {
  EXPECT_EQ(enumerate_sequences({2, 1, 1}).size(), 12u);
  EXPECT_EQ(enumerate_sequences({0, 3}).size(), 1u);
}

TEST(Roots, Examples) {
  auto a2 = Quiver::type_A(2);
  auto rs = root_system(a2);
  std::set<DimVector> roots(rs.roots.begin(), rs.roots.end());
  EXPECT_EQ(roots, (std::set<DimVector>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(root_system(Quiver({"i"}, {})).roots.size(), 1u);
  EXPECT_EQ(root_system(Quiver::type_D(4)).roots.size(), 12u);
}

TEST(RootsProperty, CountsMatchADE) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(root_system(Quiver::type_A(n)).roots.size(), static_cast<std::size_t>(n * (n + 1) / 2));
  for (int n = 4; n <= 6; ++n) EXPECT_EQ(root_system(Quiver::type_D(n)).roots.size(), static_cast<std::size_t>(n * (n - 1)));
  EXPECT_EQ(root_system(Quiver::type_E(6)).roots.size(), 36u);
  EXPECT_EQ(root_system(Quiver::type_E(7)).roots.size(), 63u);
  EXPECT_EQ(root_system(Quiver::type_E(8)).roots.size(), 120u);
}

TEST(RootsProperty, TitsScanAgreesAndRepsAreBricks) {
  for (const auto& q : {Quiver::type_A(4), Quiver::type_D(4), Quiver::type_D(5), Quiver::type_E(6)}) {
    auto rs = root_system(q);
    auto scan = roots_by_tits_scan(q, 12);
    EXPECT_EQ(std::set<DimVector>(rs.roots.begin(), rs.roots.end()), std::set<DimVector>(scan.begin(), scan.end()))
        << q.type_string();
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      EXPECT_EQ(rs.reps[k].dims, rs.roots[k]);
      EXPECT_EQ(hom_dim(q, rs.reps[k], rs.reps[k]), 1) << root_name(rs.roots[k]);
    }
  }
}

TEST(RootsProperty, EulerFormConsistency) {
  for (const auto& q : {Quiver::type_A(3), Quiver::type_D(4)}) {
    auto rs = root_system(q);
    for (std::size_t a = 0; a < rs.roots.size(); ++a)
      for (std::size_t b = 0; b < rs.roots.size(); ++b) {
        const long h = hom_dim(q, rs.reps[a], rs.reps[b]);
        const long e = euler_form(q, rs.roots[a], rs.roots[b]);
        EXPECT_GE(h, std::max(0L, e));
        // Over a Dynkin quiver Hom or Ext vanishes between indecomposables.
        EXPECT_TRUE(h == 0 || h == e);
      }
  }
}

TEST(HomDim, Examples) {
  auto a2 = Quiver::type_A(2);
  auto rs = root_system(a2);
  EXPECT_EQ(hom_dim(a2, simple(a2, 0), simple(a2, 0)), 1);
  EXPECT_EQ(hom_dim(a2, simple(a2, 0), simple(a2, 1)), 0);
  const auto& m = rs.reps[static_cast<std::size_t>(rs.find({1, 1}))];
  EXPECT_EQ(hom_dim(a2, m, simple(a2, 1)), 0);
  EXPECT_EQ(hom_dim(a2, m, simple(a2, 0)), 1);
  EXPECT_EQ(hom_dim(a2, simple(a2, 1), m), 1);
  FiniteField F2(2);
  EXPECT_EQ(hom_dim(a2, m, m, F2), 1);
}

TEST(Kostant, Examples) {
  auto a2 = Quiver::type_A(2);
  auto rs = root_system(a2);
  EXPECT_EQ(kostant_partitions(rs, {1, 1}).size(), 2u);
  EXPECT_EQ(kostant_partitions(rs, {0, 0}).size(), 1u);
  auto p = kostant_partitions(rs, {2, 1});
  std::set<std::string> names;
  for (const auto& k : p) names.insert(partition_name(rs, k));
  EXPECT_EQ(names, (std::set<std::string>{"{a1, a1+a2}", "{a1, a1, a2}"}));
}

TEST(KostantProperty, OrientationIndependent) {
  auto qs = oracle::path_orientations(3);
  for (const auto& nu : dimension_vectors_up_to(3, 5)) {
    const auto n0 = kostant_partitions(root_system(qs[0]), nu).size();
    for (const auto& q : qs) EXPECT_EQ(kostant_partitions(root_system(q), nu).size(), n0);
  }
  auto in = Quiver::type_D(4, true), out = Quiver::type_D(4, false);
  for (const auto& nu : dimension_vectors_up_to(4, 4))
    EXPECT_EQ(kostant_partitions(root_system(in), nu).size(), kostant_partitions(root_system(out), nu).size());
}

TEST(Orbits, A2Examples) {
  auto a2 = Quiver::type_A(2);
  auto orb = orbits(a2, root_system(a2), {1, 1});
  ASSERT_EQ(orb.size(), 2u);
  EXPECT_EQ(orb[0].name, "{a1, a2}");
  EXPECT_EQ(orb[0].dim, 0);
  EXPECT_EQ(orb[1].name, "{a1+a2}");
  EXPECT_EQ(orb[1].dim, 1);
  for (const auto& nu : dimension_vectors_up_to(2, 4)) EXPECT_EQ(orbits(a2, root_system(a2), nu).front().dim, 0);
}

// Orbit classification checked against brute-force GL_V(F_2)-orbits on E_V(F_2).
TEST(OrbitsProperty, ClassificationOverF2) {
  std::vector<Quiver> qs = oracle::path_orientations(3);
  qs.push_back(Quiver::type_A(2));
  qs.push_back(Quiver::type_D(4));
  for (const auto& q : qs) {
    auto rs = root_system(q);
    for (const auto& nu : dimension_vectors_up_to(q.num_vertices(), 4)) {
      if (oracle::rep_space_dim(q, nu) > 12) continue;
      auto id = oracle::orbits_over_F2(q, nu);
      auto orb = orbits(q, rs, nu);
      EXPECT_EQ(oracle::count_distinct(id), orb.size()) << q.canonical_string();
      std::set<long> reps;
      for (const auto& o : orb) reps.insert(id[static_cast<std::size_t>(oracle::encode_rep(o.rep, 2))]);
      EXPECT_EQ(reps.size(), orb.size()) << "orbit representatives collide over F_2";
      // only the zero orbit is closed
      EXPECT_EQ(orb.front().dim, 0);
      for (std::size_t k = 1; k < orb.size(); ++k) EXPECT_GT(orb[k].dim, 0);
    }
  }
}

TEST(OrbitsProperty, DimensionFromStabilizer) {
  // d_lambda = dim G_V - dim End(x_lambda).
  auto q = Quiver::type_D(4);
  auto rs = root_system(q);
  for (const auto& nu : dimension_vectors_up_to(4, 4))
    for (const auto& o : orbits(q, rs, nu)) {
      long g = 0;
      for (int v : nu) g += static_cast<long>(v) * v;
      EXPECT_EQ(o.dim, g - hom_dim(q, o.rep, o.rep));
      EXPECT_LE(o.dim, oracle::rep_space_dim(q, nu));
    }
}
