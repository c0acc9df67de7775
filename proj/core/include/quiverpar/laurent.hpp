#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quiverpar {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Element of Z[q, q^-1]. Sparse, never stores a zero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  explicit LaurentPoly(const BigInt& c);

  static LaurentPoly monomial(int exp, const BigInt& coeff = 1);

  const std::map<int, BigInt>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  int min_exp() const;
  int max_exp() const;
  BigInt coeff(int exp) const;
  const BigInt& leading_coeff() const;
  BigInt content() const;  // gcd of coefficients, positive; 0 for the zero poly

  void add_term(int exp, const BigInt& coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigInt& s);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ < b.c_; }

  LaurentPoly shifted(int k) const;  // multiply by q^k
  LaurentPoly bar() const;
  LaurentPoly divided_by(const BigInt& s) const;  // exact; throws if not divisible
  BigRat eval(const BigRat& z) const;
  bool nonnegative() const;

  // "q^2 + 3q^-1", variable name configurable (stalk tables print in t).
  std::string to_string(const std::string& var = "q") const;

 private:
  std::map<int, BigInt> c_;
};

LaurentPoly bar(const LaurentPoly& p);
LaurentPoly pow(const LaurentPoly& p, unsigned n);

LaurentPoly qint(int m);
LaurentPoly qfact(int m);
LaurentPoly multifact(const std::vector<int>& a);
long lm(int m);
long lvec(const std::vector<int>& a);

// a / b in Z[q,q^-1] when b divides a, otherwise nullopt.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// gcd in Z[q] of the polynomial parts (q-powers stripped); positive leading
// coefficient, lowest exponent 0. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Rank over Q(q) by fraction-free elimination.
std::size_t rank_over_fractions(std::vector<std::vector<LaurentPoly>> m);

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction bar() const;
  std::string to_string() const;

 private:
  void canonicalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace quiverpar
