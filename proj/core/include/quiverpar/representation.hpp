#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quiverpar/finite_field.hpp"
#include "quiverpar/quiver.hpp"

namespace quiverpar {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
  long& at(int r, int c) { return a[static_cast<std::size_t>(r * cols + c)]; }
  long at(int r, int c) const { return a[static_cast<std::size_t>(r * cols + c)]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// Integral representation; maps[h] has shape dims[to(h)] x dims[from(h)].
struct Representation {
  DimVector dims;
  std::vector<IntMatrix> maps;
};

Representation zero_representation(const Quiver& q, const DimVector& dims);
Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts);
void validate_representation(const Quiver& q, const Representation& r);

long hom_dim(const Quiver& q, const Representation& m, const Representation& n);
long hom_dim(const Quiver& q, const Representation& m, const Representation& n, const FiniteField& F);
long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

// Positive roots in canonical order (height, then lexicographic) with an
// indecomposable integral representative for each.
struct RootSystem {
  std::vector<DimVector> roots;
  std::vector<Representation> reps;
  int find(const DimVector& root) const;  // -1 if absent
};

RootSystem root_system(const Quiver& q);
// Brute-force: vectors with Tits form 1 and connected support, up to the given height.
std::vector<DimVector> roots_by_tits_scan(const Quiver& q, int max_height);
std::string root_name(const DimVector& root);

struct KostantPartition {
  std::vector<int> parts;  // root indices, ascending, with repetition
  friend auto operator<=>(const KostantPartition&, const KostantPartition&) = default;
};

std::vector<KostantPartition> kostant_partitions(const RootSystem& rs, const DimVector& nu,
                                                 std::size_t cap = 1000000);
std::string partition_name(const RootSystem& rs, const KostantPartition& p);

struct Orbit {
  KostantPartition lambda;
  Representation rep;
  long dim = 0;  // orbit dimension d_lambda
  std::string name;
};

Representation orbit_rep(const Quiver& q, const RootSystem& rs, const KostantPartition& p);
long orbit_dim(const Quiver& q, const Representation& rep);
// All orbits of E_V sorted by (dimension, partition); this total order refines closure.
std::vector<Orbit> orbits(const Quiver& q, const RootSystem& rs, const DimVector& nu);
bool orbit_less(const Orbit& a, const Orbit& b);

}  // namespace quiverpar
