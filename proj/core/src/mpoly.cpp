#include "quiverpar/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace quiverpar {

MPoly MPoly::constant(int nvars, const BigInt& c) {
  MPoly p(nvars);
  p.add_term(Mono(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MPoly MPoly::var(int nvars, int k) {
  Mono m(static_cast<std::size_t>(nvars), 0);
  m.at(static_cast<std::size_t>(k)) = 1;
  return monomial(m);
}

MPoly MPoly::monomial(const Mono& m, const BigInt& c) {
  MPoly p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

void MPoly::add_term(const Mono& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, ins] = t_.emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const BigInt& s) {
  if (s == 0) t_.clear();
  else
    for (auto& [m, c] : t_) c *= s;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.n_, b.n_));
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      MPoly::Mono m(ma);
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = static_cast<std::uint8_t>(m[k] + mb[k]);
      r.add_term(m, ca * cb);
    }
  return r;
}

MPoly MPoly::swapped(int l) const {
  MPoly r(n_);
  for (const auto& [m, c] : t_) {
    Mono s(m);
    std::swap(s[static_cast<std::size_t>(l)], s[static_cast<std::size_t>(l) + 1]);
    r.t_.emplace(std::move(s), c);
  }
  return r;
}

MPoly MPoly::times_var(int k) const {
  MPoly r(n_);
  for (const auto& [m, c] : t_) {
    Mono s(m);
    ++s[static_cast<std::size_t>(k)];
    r.t_.emplace(std::move(s), c);
  }
  return r;
}

MPoly MPoly::divided_by_difference(int p, int q) const {
  MPoly rem = *this, quo(n_);
  const auto P = static_cast<std::size_t>(p), Q = static_cast<std::size_t>(q);
  while (!rem.is_zero()) {
    // eliminate a term of maximal x_p-degree
    auto best = rem.t_.begin();
    for (auto it = rem.t_.begin(); it != rem.t_.end(); ++it)
      if (it->first[P] > best->first[P]) best = it;
    if (best->first[P] == 0) throw std::logic_error("divided difference: nonzero remainder");
    Mono m = best->first;
    BigInt c = best->second;
    --m[P];
    quo.add_term(m, c);
    rem.add_term(best->first, -c);
    Mono m2 = m;
    ++m2[Q];
    rem.add_term(m2, c);
  }
  return quo;
}

MPoly MPoly::demazure(int l) const { return (*this - swapped(l)).divided_by_difference(l, l + 1); }

MPoly MPoly::embedded(int nvars_total, int offset) const {
  MPoly r(nvars_total);
  for (const auto& [m, c] : t_) {
    Mono s(static_cast<std::size_t>(nvars_total), 0);
    for (std::size_t k = 0; k < m.size(); ++k) s[k + static_cast<std::size_t>(offset)] = m[k];
    r.t_.emplace(std::move(s), c);
  }
  return r;
}

int MPoly::mono_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

std::string MPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    os << (first ? "" : " + ") << "(" << c << ")";
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k]) os << "*x" << k + 1 << (m[k] > 1 ? "^" + std::to_string(m[k]) : "");
    first = false;
  }
  return os.str();
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly r = MPoly::constant(p.nvars(), 1);
  for (unsigned k = 0; k < e; ++k) r = r * p;
  return r;
}

}  // namespace quiverpar
