#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "quiverpar/laurent.hpp"
#include "quiverpar/quiver.hpp"

namespace quiverpar {

using QWord = std::vector<int>;

struct WordVector {
  std::map<QWord, RationalFunction> c;

  bool is_zero() const { return c.empty(); }
  void add(const QWord& w, const RationalFunction& r);
  WordVector& operator+=(const WordVector& o);
  WordVector& operator-=(const WordVector& o);
  WordVector scaled(const RationalFunction& r) const;
  WordVector bar() const;  // bar on coefficients; words are bar-invariant
  friend WordVector operator+(WordVector a, const WordVector& b) { return a += b; }
  friend WordVector operator-(WordVector a, const WordVector& b) { return a -= b; }
  friend bool operator==(const WordVector& a, const WordVector& b) { return a.c == b.c; }
};

struct TensorWordVector {
  std::map<std::pair<QWord, QWord>, RationalFunction> c;

  void add(const QWord& a, const QWord& b, const RationalFunction& r);
  TensorWordVector& operator+=(const TensorWordVector& o);
  friend bool operator==(const TensorWordVector& a, const TensorWordVector& b) { return a.c == b.c; }
};

class QuantumGroup {
 public:
  explicit QuantumGroup(const Quiver& q) : q_(q) {}

  const Quiver& quiver() const { return q_; }
  DimVector weight(const QWord& w) const;
  int pairing_exponent(const DimVector& a, const DimVector& b) const;  // a . b

  WordVector word(const QWord& w) const;
  WordVector theta(int i) const { return word({i}); }
  WordVector divided_power(int i, int a) const;
  WordVector product(const WordVector& u, const WordVector& v) const;
  WordVector theta_monomial(const FlagType& y) const;

  TensorWordVector coproduct(const WordVector& u) const;
  TensorWordVector coproduct_word(const QWord& w) const;
  TensorWordVector twisted_product(const TensorWordVector& a, const TensorWordVector& b) const;

  // (1-q^2)^m (u, v) for words of length m; zero for different weights.
  LaurentPoly normalized_pairing(const QWord& u, const QWord& v) const;
  RationalFunction form(const WordVector& u, const WordVector& v) const;
  std::vector<QWord> words(const DimVector& nu) const;
  std::vector<std::vector<LaurentPoly>> gram(const DimVector& nu) const;
  bool is_zero_in_f(const WordVector& u) const;
  std::size_t dim_f(const DimVector& nu) const;
  // rank over Q(q) of a family of elements of f_nu (via the Gram matrix)
  std::size_t rank_in_f(const std::vector<WordVector>& elems, const DimVector& nu) const;

  WordVector serre_element(int i, int j) const;

  std::string to_string(const WordVector& u) const;
  std::string monomial_string(const FlagType& y) const;

 private:
  Quiver q_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<QWord, QWord>, LaurentPoly> pair_cache_;
};

struct SerreResult {
  int i, j;
  bool in_radical;
};
std::vector<SerreResult> serre_check(const QuantumGroup& f);

}  // namespace quiverpar
