#include "quiverpar/qf.hpp"

#include <sstream>
#include <stdexcept>

namespace quiverpar {

void WordVector::add(const QWord& w, const RationalFunction& r) {
  if (r.is_zero()) return;
  auto [it, ins] = c.emplace(w, r);
  if (!ins) {
    it->second += r;
    if (it->second.is_zero()) c.erase(it);
  }
}

WordVector& WordVector::operator+=(const WordVector& o) {
  for (const auto& [w, r] : o.c) add(w, r);
  return *this;
}

WordVector& WordVector::operator-=(const WordVector& o) {
  for (const auto& [w, r] : o.c) add(w, -r);
  return *this;
}

WordVector WordVector::scaled(const RationalFunction& r) const {
  WordVector out;
  if (r.is_zero()) return out;
  for (const auto& [w, x] : c) out.c.emplace(w, x * r);
  return out;
}

WordVector WordVector::bar() const {
  WordVector out;
  for (const auto& [w, x] : c) out.c.emplace(w, x.bar());
  return out;
}

void TensorWordVector::add(const QWord& a, const QWord& b, const RationalFunction& r) {
  if (r.is_zero()) return;
  auto [it, ins] = c.emplace(std::make_pair(a, b), r);
  if (!ins) {
    it->second += r;
    if (it->second.is_zero()) c.erase(it);
  }
}

TensorWordVector& TensorWordVector::operator+=(const TensorWordVector& o) {
  for (const auto& [k, r] : o.c) add(k.first, k.second, r);
  return *this;
}

DimVector QuantumGroup::weight(const QWord& w) const {
  DimVector v(static_cast<std::size_t>(q_.num_vertices()), 0);
  for (int i : w) ++v.at(static_cast<std::size_t>(i));
  return v;
}

int QuantumGroup::pairing_exponent(const DimVector& a, const DimVector& b) const {
  int s = 0;
  for (int i = 0; i < q_.num_vertices(); ++i)
    for (int j = 0; j < q_.num_vertices(); ++j)
      if (a[static_cast<std::size_t>(i)] && b[static_cast<std::size_t>(j)])
        s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * q_.symform(i, j);
  return s;
}

WordVector QuantumGroup::word(const QWord& w) const {
  WordVector v;
  v.add(w, RationalFunction(1));
  return v;
}

WordVector QuantumGroup::divided_power(int i, int a) const {
  WordVector v;
  v.add(QWord(static_cast<std::size_t>(a), i), RationalFunction(LaurentPoly(1), qfact(a)));
  return v;
}

WordVector QuantumGroup::product(const WordVector& u, const WordVector& v) const {
  WordVector out;
  for (const auto& [a, ra] : u.c)
    for (const auto& [b, rb] : v.c) {
      QWord w = a;
      w.insert(w.end(), b.begin(), b.end());
      out.add(w, ra * rb);
    }
  return out;
}

WordVector QuantumGroup::theta_monomial(const FlagType& y) const {
  WordVector out = word({});
  for (const auto& s : y.steps) out = product(out, divided_power(s.vertex, s.mult));
  return out;
}

TensorWordVector QuantumGroup::coproduct_word(const QWord& w) const {
  TensorWordVector out;
  const std::size_t m = w.size();
  if (m > 20) throw std::invalid_argument("coproduct: word too long");
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    QWord left, right;
    int e = 0;
    for (std::size_t a = 0; a < m; ++a) {
      if (mask >> a & 1UL) {
        left.push_back(w[a]);
      } else {
        right.push_back(w[a]);
        for (std::size_t b = a + 1; b < m; ++b)
          if (mask >> b & 1UL) e -= q_.symform(w[a], w[b]);
      }
    }
    out.add(left, right, RationalFunction(LaurentPoly::monomial(e)));
  }
  return out;
}

TensorWordVector QuantumGroup::coproduct(const WordVector& u) const {
  TensorWordVector out;
  for (const auto& [w, r] : u.c) {
    auto t = coproduct_word(w);
    for (const auto& [k, s] : t.c) out.add(k.first, k.second, s * r);
  }
  return out;
}

TensorWordVector QuantumGroup::twisted_product(const TensorWordVector& a,
                                               const TensorWordVector& b) const {
  TensorWordVector out;
  for (const auto& [ka, ra] : a.c)
    for (const auto& [kb, rb] : b.c) {
      int e = -pairing_exponent(weight(ka.second), weight(kb.first));
      QWord l = ka.first, r = ka.second;
      l.insert(l.end(), kb.first.begin(), kb.first.end());
      r.insert(r.end(), kb.second.begin(), kb.second.end());
      out.add(l, r, ra * rb * RationalFunction(LaurentPoly::monomial(e)));
    }
  return out;
}

LaurentPoly QuantumGroup::normalized_pairing(const QWord& u, const QWord& v) const {
  if (u.size() != v.size()) return {};
  if (u.empty()) return LaurentPoly(1);
  if (weight(u) != weight(v)) return {};
  auto key = std::make_pair(u, v);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
  }
  // (u, v' theta_j) = (r(u), v' (x) theta_j): peel one letter j off u.
  const int j = v.back();
  QWord vp(v.begin(), v.end() - 1);
  LaurentPoly res;
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p] != j) continue;
    int e = 0;
    for (std::size_t b = p + 1; b < u.size(); ++b) e -= q_.symform(u[p], u[b]);
    QWord up = u;
    up.erase(up.begin() + static_cast<std::ptrdiff_t>(p));
    res += normalized_pairing(up, vp).shifted(e);
  }
  std::lock_guard<std::mutex> lk(mu_);
  pair_cache_.emplace(key, res);
  return res;
}

RationalFunction QuantumGroup::form(const WordVector& u, const WordVector& v) const {
  RationalFunction s;
  for (const auto& [a, ra] : u.c)
    for (const auto& [b, rb] : v.c) {
      LaurentPoly n = normalized_pairing(a, b);
      if (n.is_zero()) continue;
      LaurentPoly d = pow(LaurentPoly(1) - LaurentPoly::monomial(2), static_cast<unsigned>(a.size()));
      s += ra * rb * RationalFunction(n, d);
    }
  return s;
}

std::vector<QWord> QuantumGroup::words(const DimVector& nu) const { return enumerate_sequences(nu); }

std::vector<std::vector<LaurentPoly>> QuantumGroup::gram(const DimVector& nu) const {
  auto ws = words(nu);
  std::vector<std::vector<LaurentPoly>> g(ws.size(), std::vector<LaurentPoly>(ws.size()));
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = 0; b < ws.size(); ++b) g[a][b] = normalized_pairing(ws[a], ws[b]);
  return g;
}

namespace {

// Scales a row of rational functions to Laurent polynomials.
std::vector<LaurentPoly> clear_denominators(const std::vector<RationalFunction>& row) {
  LaurentPoly l(1);
  for (const auto& r : row) {
    if (r.is_zero() || r.is_laurent()) continue;
    LaurentPoly g = poly_gcd(l, r.den());
    l = l * *divide_exact(r.den(), g);
  }
  std::vector<LaurentPoly> out;
  out.reserve(row.size());
  for (const auto& r : row) {
    if (r.is_zero()) {
      out.emplace_back();
      continue;
    }
    auto f = divide_exact(l * r.num(), r.den());
    if (!f) throw std::logic_error("clear_denominators: inexact division");
    out.push_back(*f);
  }
  return out;
}

}  // namespace

std::size_t QuantumGroup::rank_in_f(const std::vector<WordVector>& elems, const DimVector& nu) const {
  auto ws = words(nu);
  std::vector<std::vector<LaurentPoly>> m;
  for (const auto& e : elems) {
    std::vector<RationalFunction> row(ws.size());
    for (std::size_t b = 0; b < ws.size(); ++b)
      for (const auto& [w, r] : e.c) {
        LaurentPoly n = normalized_pairing(w, ws[b]);
        if (!n.is_zero()) row[b] += r * RationalFunction(n);
      }
    m.push_back(clear_denominators(row));
  }
  return rank_over_fractions(std::move(m));
}

bool QuantumGroup::is_zero_in_f(const WordVector& u) const {
  if (u.is_zero()) return true;
  DimVector nu = weight(u.c.begin()->first);
  for (const auto& [w, r] : u.c)
    if (weight(w) != nu) return false;  // inhomogeneous: components are independent
  for (const auto& wp : words(nu)) {
    RationalFunction s;
    for (const auto& [w, r] : u.c) {
      LaurentPoly n = normalized_pairing(wp, w);
      if (!n.is_zero()) s += r * RationalFunction(n);
    }
    if (!s.is_zero()) return false;
  }
  return true;
}

std::size_t QuantumGroup::dim_f(const DimVector& nu) const { return rank_over_fractions(gram(nu)); }

WordVector QuantumGroup::serre_element(int i, int j) const {
  if (i == j) throw std::invalid_argument("serre_element: i == j");
  const int n = 1 - q_.symform(i, j);
  WordVector out;
  for (int a = 0; a <= n; ++a) {
    WordVector t = product(product(divided_power(i, a), theta(j)), divided_power(i, n - a));
    out += a % 2 ? t.scaled(RationalFunction(-1)) : t;
  }
  return out;
}

std::string QuantumGroup::to_string(const WordVector& u) const {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, r] : u.c) {
    os << (first ? "" : " + ") << "(" << r.to_string() << ")*[";
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << q_.name(w[k]);
    os << "]";
    first = false;
  }
  return os.str();
}

std::string QuantumGroup::monomial_string(const FlagType& y) const {
  std::string s;
  for (const auto& st : y.steps) {
    s += "θ[" + q_.name(st.vertex) + "]";
    if (st.mult > 1) s += "^{(" + std::to_string(st.mult) + ")}";
  }
  return s.empty() ? "1" : s;
}

std::vector<SerreResult> serre_check(const QuantumGroup& f) {
  std::vector<SerreResult> out;
  const int n = f.quiver().num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back({i, j, f.is_zero_in_f(f.serre_element(i, j))});
  return out;
}

}  // namespace quiverpar
