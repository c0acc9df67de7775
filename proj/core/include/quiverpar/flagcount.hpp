#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quiverpar/finite_field.hpp"
#include "quiverpar/laurent.hpp"
#include "quiverpar/quiver.hpp"
#include "quiverpar/representation.hpp"

namespace quiverpar {

// Process-wide cache; fields are immutable once built.
const FiniteField& field(int q);

// {2,3,4,5,7,8,9,11,13,16,17,...}: the first n prime powers <= 256.
std::vector<int> default_prime_powers(std::size_t n);

namespace fq {

using Vec = std::vector<FiniteField::Elem>;
using Basis = std::vector<Vec>;  // rows

Basis identity(std::size_t dim);
Basis rref_basis(const FiniteField& F, const Basis& rows, std::size_t dim);
// Functionals vanishing on span(rows), as rows.
Basis annihilator(const FiniteField& F, const Basis& rows, std::size_t dim);
// Kernel of the linear map given by the row functionals.
Basis kernel(const FiniteField& F, const Basis& functionals, std::size_t dim);
// Vectors of A completing the basis of W (W must lie in A).
Basis complement(const FiniteField& F, const Basis& W, const Basis& A, std::size_t dim);
// Calls f(U) for every U with W <= U <= W + span(C), dim U = dim W + a.
// Returns false if f asked to stop.
bool for_each_extension(const FiniteField& F, const Basis& W, const Basis& C, int a,
                        const std::function<bool(const Basis&)>& f);

}  // namespace fq

// Gaussian binomial [n choose k] in the unbalanced normalization, as a polynomial in q.
const LaurentPoly& gaussian_poly(int n, int k);
BigInt gaussian_value(int n, int k, int q);

long dim_F(const Quiver& q, const FlagType& y);
long dim_Ftilde(const Quiver& q, const FlagType& y);
LaurentPoly count_flagvar_poly(const Quiver& q, const FlagType& y);
BigInt count_flagvar(const Quiver& q, const FlagType& y, int qq);

// Number of x-stable flags of type y over F_q; x is reduced from integers.
// Throws BudgetExceeded once more than `budget` subspaces were enumerated.
BigInt count_fiber(const Quiver& q, const Representation& x, const FlagType& y, int qq,
                   std::uint64_t budget = 200000000);

struct PoincareResult {
  LaurentPoly poly;  // in t; coefficient of t^k is dim H^{2k}
  long degree_bound = 0;
  std::vector<int> qs;
  std::vector<BigInt> counts;
  std::size_t fit_points = 0;  // the remaining samples are held out
  bool alert = false;
  std::string alert_reason;
};

// Interpolates counts at prime powers; the polynomial must have degree at
// most degree_bound, integer nonnegative coefficients, and fit every sample.
PoincareResult interpolate_counts(const std::vector<int>& qs, const std::vector<BigInt>& counts,
                                  long degree_bound, std::size_t fit_points);

// degree_bound < 0 means the fiber must be empty.
PoincareResult poincare_fiber(const Quiver& q, const Representation& x, const FlagType& y,
                              long degree_bound, const std::vector<int>& qs,
                              std::uint64_t budget = 200000000);

// Sample set for a given degree bound: at least 5 prime powers, two held out.
std::vector<int> sample_prime_powers(long degree_bound, const std::vector<int>& preferred = {});

struct FiberRecord {
  DimVector nu;
  FlagType y;
  int orbit = 0;  // index into orbits(q, rs, nu)
  PoincareResult result;
  bool budget_exceeded = false;
};

struct EvenScanReport {
  std::vector<FiberRecord> fibers;
  std::size_t alerts = 0;
  std::size_t incomplete = 0;
  std::string verdict;  // "even-consistent", "alerts", "incomplete"
};

struct ScanOptions {
  int nu_cap = 3;
  std::vector<int> prime_powers;  // preferred samples, may be empty
  std::uint64_t budget = 200000000;
  bool expanded_only = false;  // only y in I^nu
  std::size_t flag_cap = 1000000;  // bound on #Y_nu
  unsigned jobs = 1;
  std::function<void(const FiberRecord&)> on_record;  // called in deterministic order
  // Replaces count_fiber, e.g. to serve counts from a cache. May throw BudgetExceeded.
  std::function<BigInt(const FlagType&, const Orbit&, int qq)> count;
};

std::vector<FiberRecord> scan_weight(const Quiver& q, const RootSystem& rs, const DimVector& nu,
                                     const ScanOptions& opt);
EvenScanReport evenness_scan(const Quiver& q, const ScanOptions& opt);

// Runs f(0..n-1) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f);

}  // namespace quiverpar
