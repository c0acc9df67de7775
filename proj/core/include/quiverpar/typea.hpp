#pragma once

#include <vector>

#include "quiverpar/laurent.hpp"
#include "quiverpar/quiver.hpp"
#include "quiverpar/representation.hpp"

namespace quiverpar {

// #X_{v,d,k}: k-dimensional U in a space with a flag W of type v
// (v_a = dim W_a/W_{a-1}) such that dim U cap W_a = d_a. Polynomial in q.
LaurentPoly typeA_X_count(const std::vector<int>& v, const std::vector<int>& d, int k);

// Relative position of a flag phi (phi_a = dims f, a = 1..s, phi_s = ambient)
// against a flag psi (dims g, b = 1..t, psi_t = ambient): c[a][b] = dim phi_a cap psi_b.
struct FlagPair {
  std::vector<int> f, g;
  std::vector<std::vector<int>> c;
};

// #Y_{phi,psi,v,D}: flags U_1 <= ... <= U_s = ambient, dim U_a/U_{a-1} = v_a,
// dim U_a cap psi_b = D[a][b], phi_a <= U_a.
LaurentPoly typeA_Y_count(const FlagPair& fp, const std::vector<int>& v,
                          const std::vector<std::vector<int>>& D);

// Poincare polynomial (in t) of pi_y^{-1}(x) via the affine cell recursion.
// Every component of the quiver must be of type A.
LaurentPoly typeA_cell_recursion(const Quiver& q, const Representation& x, const FlagType& y);

}  // namespace quiverpar
