#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverpar/flagcount.hpp"
#include "quiverpar/laurent.hpp"
#include "quiverpar/qf.hpp"
#include "quiverpar/quiver.hpp"
#include "quiverpar/representation.hpp"

namespace quiverpar {

// Stalk tables of pi_{y*}k for every y in Y_nu over every orbit, in t.
struct StalkData {
  DimVector nu;
  std::vector<Orbit> orbits;  // default order: dimension, then partition
  std::vector<FlagType> ys;
  std::vector<long> dFt;                          // dim F~_y
  std::vector<std::vector<LaurentPoly>> table;    // table[y][orbit]
  std::vector<FiberRecord> fibers;
  std::size_t alerts = 0, incomplete = 0;
};

StalkData stalk_tables(const Quiver& q, const RootSystem& rs, const DimVector& nu, const ScanOptions& opt);

// y indices with dim F~_y = d_lambda, stalk 1 at lambda and 0 at every other
// orbit of dimension >= d_lambda. Sorted by preference (fewest steps first).
std::vector<int> resolution_candidates(const StalkData& s, int orbit);
std::optional<int> find_resolution(const StalkData& s, int orbit);

struct PeelResult {
  std::vector<int> order;       // orbit indices, increasing
  std::vector<int> resolution;  // y index per orbit, -1 if none
  std::vector<std::vector<LaurentPoly>> parity;         // parity[lambda][mu], unshifted, in t
  std::vector<std::vector<LaurentPoly>> decomposition;  // c[y][lambda] in t
  std::vector<std::string> alerts;                      // PARITY-ALERT findings
  bool ok() const { return alerts.empty(); }
};

std::vector<int> default_order(const StalkData& s);
PeelResult peel(const StalkData& s, const std::vector<int>& order);

// Splits the top summand off a resolution table: returns the table of the
// summand supported on the closure of lambda (entry 1 at lambda).
std::vector<LaurentPoly> split_top(const StalkData& s, const std::vector<int>& order,
                                   const std::vector<std::vector<LaurentPoly>>& parity,
                                   const std::vector<LaurentPoly>& table, int lambda,
                                   std::vector<std::string>* alerts);

// [dL_y] = sum_lambda C[y][lambda] [E(lambda)], C in q.
std::vector<std::vector<LaurentPoly>> k_decomposition(const StalkData& s, const PeelResult& p);

struct ParityBasis {
  std::vector<WordVector> b;                         // per orbit
  std::vector<std::vector<LaurentPoly>> transition;  // b_lambda = sum_mu T[lambda][mu] theta_{y_mu}
  std::size_t rank = 0;
  std::size_t dim_f = 0;
  bool theta_consistent = false;  // theta_y = sum_lambda C[y][lambda] b_lambda in f, all y
  bool unitriangular = false;
  bool ok() const { return theta_consistent && unitriangular && rank == b.size() && rank == dim_f; }
};

ParityBasis parity_basis(const QuantumGroup& f, const StalkData& s, const PeelResult& p);

struct Conj14Entry {
  int orbit = 0;
  bool table_ok = false;        // support, normalization and degree conditions
  bool resolutions_agree = false;
  std::size_t resolutions_tested = 0;
  bool bar_invariant = false;
  bool coincide = false;
};

struct Conj14Report {
  bool evenness_certificate = false;
  std::vector<Conj14Entry> entries;
  bool all_coincide() const;
};

Conj14Report conjecture14_check(const QuantumGroup& f, const StalkData& s, const PeelResult& p,
                                const ParityBasis& b);

// Orders refining dimension order, obtained by permuting equal-dimension orbits.
std::vector<std::vector<int>> refining_orders(const StalkData& s, std::size_t cap = 24);

}  // namespace quiverpar
