#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quiverpar/finite_field.hpp"
#include "quiverpar/laurent.hpp"

namespace quiverpar {

struct QOps {
  using Elem = BigRat;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return Elem(1) / a; }
  Elem from_int(long v) const { return v; }
};

template <class K>
struct Mat {
  using Elem = typename K::Elem;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, const K& k) : rows(r), cols(c), a(r * c, k.zero()) {}
  Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// In-place reduced row echelon form; returns pivot columns.
template <class K>
std::vector<std::size_t> rref(const K& k, Mat<K>& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && k.is_zero(m.at(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    auto iv = k.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = k.mul(m.at(r, j), iv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || k.is_zero(m.at(i, c))) continue;
      auto f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class K>
std::size_t rank(const K& k, Mat<K> m) {
  return rref(k, m).size();
}

// Basis of {v : m v = 0}.
template <class K>
std::vector<std::vector<typename K::Elem>> nullspace(const K& k, Mat<K> m) {
  auto piv = rref(k, m);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<typename K::Elem>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<typename K::Elem> v(m.cols, k.zero());
    v[f] = k.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = k.sub(k.zero(), m.at(r, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace quiverpar
