#include "quiverpar/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace quiverpar {

bool is_prime_power(long q, int* p, int* k) {
  if (q < 2) return false;
  long base = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      base = d;
      break;
    }
  if (base == 0) base = q;
  long v = q;
  int e = 0;
  while (v % base == 0) {
    v /= base;
    ++e;
  }
  if (v != 1) return false;
  if (p) *p = static_cast<int>(base);
  if (k) *k = e;
  return true;
}

namespace {

using Poly = std::vector<int>;  // coefficients mod p, index = degree

std::vector<int> digits(int e, int p, int k) {
  std::vector<int> d(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    d[static_cast<std::size_t>(i)] = e % p;
    e /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int e = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) e = e * p + *it;
  return e;
}

// remainder of a modulo monic m, over F_p
Poly poly_mod(Poly a, const Poly& m, int p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    int c = a.back() % p;
    std::size_t s = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[i + s] = ((a[i + s] - c * m[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  // try every monic divisor of degree 1..n/2
  for (int d = 1; 2 * d <= n; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int e = 0; e < count; ++e) {
      Poly g = digits(e, p, d);
      g.push_back(1);
      Poly r = poly_mod(f, g, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  if (q > 256 || !is_prime_power(q, &p_, &k_))
    throw std::invalid_argument("unsupported field order " + std::to_string(q));
  Poly modulus;
  if (k_ > 1) {
    int count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (int e = 0; e < count; ++e) {
      Poly f = digits(e, p_, k_);
      f.push_back(1);
      if (is_irreducible(f, p_)) {
        modulus = f;
        break;
      }
    }
  }
  const std::size_t n = static_cast<std::size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p_, k_);
    std::vector<int> dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[static_cast<std::size_t>(a)] = static_cast<Elem>(undigits(dn, p_));
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p_, k_);
      std::vector<int> s(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p_;
      add_[static_cast<std::size_t>(a * q + b)] = static_cast<Elem>(undigits(s, p_));
      Poly prod(static_cast<std::size_t>(2 * k_ - 1), 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
      if (k_ > 1) prod = poly_mod(prod, modulus, p_);
      prod.resize(static_cast<std::size_t>(k_), 0);
      mul_[static_cast<std::size_t>(a * q + b)] = static_cast<Elem>(undigits(prod, p_));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[static_cast<std::size_t>(a * q + b)] == 1) {
        inv_[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
        break;
      }
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in finite field");
  return inv_[a];
}

FiniteField::Elem FiniteField::from_int(long v) const {
  long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

}  // namespace quiverpar
