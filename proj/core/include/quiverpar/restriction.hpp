#pragma once

#include <vector>

#include "quiverpar/laurent.hpp"
#include "quiverpar/qf.hpp"
#include "quiverpar/quiver.hpp"

namespace quiverpar {

// A split a = a' + a'' of the multiplicities of y. y1 carries a' (the
// quotient V1 = V/V2), y2 carries a'' (the subspace V2). Zero steps dropped.
struct Split {
  std::vector<int> a1, a2;
  FlagType y1, y2;
  DimVector nu1, nu2;
};

std::vector<Split> splits(const Quiver& q, const FlagType& y);

// M_{V1,V2} = sum_h dim(V1)_{h'} dim(V2)_{h''} - sum_i dim(V1)_i dim(V2)_i.
long shift_constant(const Quiver& q, const DimVector& nu1, const DimVector& nu2);

// #F~(y1,y2)(F_q): pairs (x, phi) with x(V2) <= V2 and phi x-stable, phi cap V2
// of type y2 and phi/V2 of type y1. Enumerates flags over F_q.
BigInt count_split_pairs(const Quiver& q, const FlagType& y, const Split& s, int qq);

struct RestrictionTerm {
  Split split;
  long m = 0;
  long M = 0;
  int shift = 0;  // exponent of q in front of [dL_{y2}] (x) [dL_{y1}]
};

struct RestrictionDatum {
  FlagType y;
  std::vector<RestrictionTerm> terms;
  bool bundle_ok = true;  // q^m identity held at every sample
};

// m is extracted from counts at each q in qs and must agree.
RestrictionDatum restriction_constants(const Quiver& q, const FlagType& y, const std::vector<int>& qs = {2, 3});

// Res of [dL_y] pushed to f (x) f: sum of q^shift theta_{y2} (x) theta_{y1}.
TensorWordVector res_class(const QuantumGroup& f, const RestrictionDatum& d);

}  // namespace quiverpar
