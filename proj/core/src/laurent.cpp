#include "quiverpar/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace quiverpar {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace(0, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) c_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exp, const BigInt& coeff) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::logic_error("min_exp of zero Laurent polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::logic_error("max_exp of zero Laurent polynomial");
  return c_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? BigInt(0) : it->second;
}

const BigInt& LaurentPoly::leading_coeff() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero");
  return c_.rbegin()->second;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void LaurentPoly::add_term(int exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = c_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const BigInt& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [e, c] : c_) c *= s;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace_hint(r.c_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::divided_by(const BigInt& s) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) {
    if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
      throw std::domain_error("inexact scalar division of Laurent polynomial");
    r.c_.emplace_hint(r.c_.end(), e, BigInt(c / s));
  }
  return r;
}

BigRat LaurentPoly::eval(const BigRat& z) const {
  BigRat acc = 0;
  for (const auto& [e, c] : c_) {
    BigRat t = 1;
    BigRat base = e >= 0 ? z : BigRat(1) / z;
    for (int k = 0; k < std::abs(e); ++k) t *= base;
    acc += t * BigRat(c);
  }
  acc.canonicalize();
  return acc;
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const int e = it->first;
    BigInt c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
  LaurentPoly r(1), b = p;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return r;
}

LaurentPoly qint(int m) {
  if (m < 0) throw std::invalid_argument("qint of negative integer");
  LaurentPoly r;
  for (int l = 1; l <= m; ++l) r.add_term(m + 1 - 2 * l, 1);
  return r;
}

LaurentPoly qfact(int m) {
  if (m < 0) throw std::invalid_argument("qfact of negative integer");
  LaurentPoly r(1);
  for (int l = 2; l <= m; ++l) r *= qint(l);
  return r;
}

LaurentPoly multifact(const std::vector<int>& a) {
  LaurentPoly r(1);
  for (int x : a) r *= qfact(x);
  return r;
}

long lm(int m) {
  if (m < 0) throw std::invalid_argument("lm of negative integer");
  return static_cast<long>(m) * (m - 1) / 2;
}

long lvec(const std::vector<int>& a) {
  long s = 0;
  for (int x : a) s += lm(x);
  return s;
}

namespace {

// Dense polynomial helpers, index = degree. Inputs are stripped of q-powers.
using Dense = std::vector<BigInt>;

Dense to_dense(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  const int lo = p.min_exp();
  Dense d(static_cast<std::size_t>(p.max_exp() - lo + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly p;
  for (std::size_t k = 0; k < d.size(); ++k) p.add_term(static_cast<int>(k), d[k]);
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

BigInt dense_content(const Dense& d) {
  BigInt g = 0;
  for (const auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void make_primitive(Dense& d) {
  BigInt g = dense_content(d);
  if (g == 0 || g == 1) return;
  for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b
Dense pseudo_rem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    BigInt la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly();
  const int shift = a.min_exp() - b.min_exp();
  Dense r = to_dense(a);
  const Dense d = to_dense(b);
  if (r.size() < d.size()) return std::nullopt;
  Dense quo(r.size() - d.size() + 1);
  const BigInt& ld = d.back();
  while (!r.empty() && r.size() >= d.size()) {
    const std::size_t s = r.size() - d.size();
    if (!mpz_divisible_p(r.back().get_mpz_t(), ld.get_mpz_t())) return std::nullopt;
    BigInt c = r.back() / ld;
    quo[s] = c;
    for (std::size_t k = 0; k < d.size(); ++k) r[k + s] -= c * d[k];
    trim(r);
  }
  if (!r.empty()) return std::nullopt;
  return from_dense(quo).shifted(shift);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  Dense x = to_dense(a), y = to_dense(b);
  if (x.empty()) std::swap(x, y);
  if (y.empty()) {
    make_primitive(x);
    if (x.back() < 0)
      for (auto& c : x) c = -c;
    return from_dense(x) * LaurentPoly(a.is_zero() ? b.content() : a.content());
  }
  BigInt cont = gcd(dense_content(x), dense_content(y));
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = pseudo_rem(x, y);
    x = std::move(y);
    make_primitive(r);
    y = std::move(r);
  }
  make_primitive(x);
  if (x.back() < 0)
    for (auto& c : x) c = -c;
  LaurentPoly g = from_dense(x);
  g *= cont;
  return g;
}

std::size_t rank_over_fractions(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  LaurentPoly prev(1);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t c = k; c < cols && pr == rows; ++c)
      for (std::size_t r = k; r < rows; ++r)
        if (!m[r][c].is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    std::swap(m[k], m[pr]);
    if (pc != k)
      for (auto& row : m) std::swap(row[k], row[pc]);
    ++rank;
    for (std::size_t r = k + 1; r < rows; ++r) {
      for (std::size_t c = k + 1; c < cols; ++c) {
        LaurentPoly v = m[r][c] * m[k][k] - m[r][k] * m[k][c];
        auto q = divide_exact(v, prev);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        m[r][c] = std::move(*q);
      }
      m[r][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return rank;
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int e = den_.min_exp();
  if (e != 0) {
    num_ = num_.shifted(-e);
    den_ = den_.shifted(-e);
  }
  if (den_.size() == 1) {
    // monomial denominator after the shift: a constant
    BigInt d = den_.leading_coeff();
    BigInt g = gcd(num_.content(), d);
    if (d < 0) g = -g;
    if (g != 1) {
      num_ = num_.divided_by(g);
      den_ = LaurentPoly(BigInt(d / g));
    }
    return;
  }
  LaurentPoly g = poly_gcd(num_, den_);
  if (g != LaurentPoly(1)) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_ != LaurentPoly(1)) canonicalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  num_ *= o.num_;
  if (den_ == LaurentPoly(1) && o.den_ == LaurentPoly(1)) return *this;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::bar() const { return RationalFunction(num_.bar(), den_.bar()); }

std::string RationalFunction::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace quiverpar
