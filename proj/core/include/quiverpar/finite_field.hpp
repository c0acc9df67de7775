#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace quiverpar {

bool is_prime_power(long q, int* p = nullptr, int* k = nullptr);

// GF(q) with table lookups, q <= 256. Element e encodes sum_k d_k X^k where
// d_k are the base-p digits of e, so 0..p-1 is the prime subfield.
class FiniteField {
 public:
  using Elem = std::uint8_t;

  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;  // throws on 0
  Elem from_int(long v) const;

 private:
  int q_, p_, k_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

// Field policies consumed by the generic elimination routines.
struct FqOps {
  const FiniteField* F;
  using Elem = FiniteField::Elem;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return F->add(a, b); }
  Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
  Elem inv(Elem a) const { return F->inv(a); }
  Elem from_int(long v) const { return F->from_int(v); }
};

}  // namespace quiverpar
