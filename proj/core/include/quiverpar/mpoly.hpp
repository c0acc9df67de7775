#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quiverpar/laurent.hpp"

namespace quiverpar {

// Polynomial in x_1..x_n with integer coefficients.
class MPoly {
 public:
  using Mono = std::vector<std::uint8_t>;

  MPoly() = default;
  explicit MPoly(int nvars) : n_(nvars) {}
  static MPoly constant(int nvars, const BigInt& c);
  static MPoly var(int nvars, int k);  // 0-based
  static MPoly monomial(const Mono& m, const BigInt& c = 1);

  int nvars() const { return n_; }
  const std::map<Mono, BigInt>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Mono& m, const BigInt& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const BigInt& s);
  MPoly operator-() const;
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return a.t_ != b.t_; }

  MPoly swapped(int l) const;  // s_l: x_l <-> x_{l+1}
  MPoly times_var(int k) const;
  // f / (x_p - x_q), exact; throws std::logic_error on a nonzero remainder.
  MPoly divided_by_difference(int p, int q) const;
  // (f - s_l f) / (x_l - x_{l+1})
  MPoly demazure(int l) const;
  // Same polynomial in a larger variable set, variables shifted by offset.
  MPoly embedded(int nvars_total, int offset) const;

  static int mono_degree(const Mono& m);
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Mono, BigInt> t_;
};

MPoly pow(const MPoly& p, unsigned e);

}  // namespace quiverpar
