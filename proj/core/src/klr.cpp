#include "quiverpar/klr.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quiverpar/linalg.hpp"

namespace quiverpar {

Perm identity_perm(int m) {
  Perm p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm simple_perm(int m, int l) {
  Perm p = identity_perm(m);
  std::swap(p.at(static_cast<std::size_t>(l)), p.at(static_cast<std::size_t>(l) + 1));
  return p;
}

Perm compose(const Perm& u, const Perm& v) {
  Perm r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = u[v[k]];
  return r;
}

Perm word_perm(int m, const Word& w) {
  Perm p = identity_perm(m);
  for (int l : w) p = compose(p, simple_perm(m, l));
  return p;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
  return inv;
}

Seq act_on_seq(const Perm& w, const Seq& i) {
  Seq r(i.size());
  for (std::size_t k = 0; k < i.size(); ++k) r[w[k]] = i[k];
  return r;
}

std::vector<Perm> all_perms(int m) {
  std::vector<Perm> out;
  Perm p = identity_perm(m);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void KlrElement::add(const KlrKey& k, const MPoly& p) {
  if (p.is_zero()) return;
  auto [it, ins] = terms.emplace(k, p);
  if (!ins) {
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
  }
}

KlrElement& KlrElement::operator+=(const KlrElement& o) {
  for (const auto& [k, p] : o.terms) add(k, p);
  return *this;
}

KlrElement& KlrElement::operator-=(const KlrElement& o) {
  for (const auto& [k, p] : o.terms) add(k, -p);
  return *this;
}

KlrElement KlrElement::operator-() const { return scaled(-1); }

KlrElement KlrElement::scaled(const BigInt& s) const {
  KlrElement r;
  if (s == 0) return r;
  r = *this;
  for (auto& [k, p] : r.terms) p *= s;
  return r;
}

KlrAlgebra::KlrAlgebra(const Quiver& q, DimVector nu)
    : q_(q), nu_(std::move(nu)), m_(total(nu_)), seqs_(enumerate_sequences(nu_)) {
  if (static_cast<int>(nu_.size()) != q_.num_vertices())
    throw std::invalid_argument("dimension vector does not match quiver");
  if (m_ > 8) throw std::invalid_argument("KLR algebra: |nu| too large");
}

KlrElement KlrAlgebra::idem(const Seq& i) const { return poly(i, MPoly::constant(m_, 1)); }

KlrElement KlrAlgebra::x(const Seq& i, int k) const { return poly(i, MPoly::var(m_, k)); }

KlrElement KlrAlgebra::tau(const Seq& i, int l) const {
  if (l < 0 || l + 1 >= m_) throw std::out_of_range("tau index out of range");
  KlrElement e;
  e.add({i, simple_perm(m_, l)}, MPoly::constant(m_, 1));
  return e;
}

KlrElement KlrAlgebra::poly(const Seq& i, const MPoly& p) const {
  if (static_cast<int>(i.size()) != m_) throw std::invalid_argument("idempotent of wrong length");
  KlrElement e;
  e.add({i, identity_perm(m_)}, p);
  return e;
}

KlrElement KlrAlgebra::one() const {
  KlrElement e;
  for (const auto& i : seqs_) e += idem(i);
  return e;
}

const Word& KlrAlgebra::canonical_word(const Perm& w) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = canon_.find(w);
    if (it != canon_.end()) return it->second;
  }
  Word word;
  Perm cur = w;
  while (perm_length(cur) > 0) {
    Perm inv(cur.size());
    for (std::size_t k = 0; k < cur.size(); ++k) inv[cur[k]] = static_cast<std::uint8_t>(k);
    int l = 0;
    while (inv[static_cast<std::size_t>(l)] < inv[static_cast<std::size_t>(l) + 1]) ++l;
    word.push_back(l);
    cur = compose(simple_perm(m_, l), cur);
  }
  std::lock_guard<std::mutex> lk(mu_);
  return canon_.emplace(w, std::move(word)).first->second;
}

int KlrAlgebra::tau_degree(const Perm& w, const Seq& i) const {
  const Word& word = canonical_word(w);
  Seq c = i;
  int d = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto l = static_cast<std::size_t>(*it);
    d -= q_.symform(c[l], c[l + 1]);
    std::swap(c[l], c[l + 1]);
  }
  return d;
}

std::optional<int> KlrAlgebra::degree(const KlrElement& e) const {
  std::optional<int> deg;
  for (const auto& [k, p] : e.terms) {
    const int td = tau_degree(k.w, k.idem);
    for (const auto& [mono, c] : p.terms()) {
      int d = 2 * MPoly::mono_degree(mono) + td;
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  if (!deg) return 0;
  return deg;
}

MPoly KlrAlgebra::q_poly(const Seq& i, int l, int u, int v) const {
  const int a = i[static_cast<std::size_t>(l)], b = i[static_cast<std::size_t>(l) + 1];
  if (a == b) return MPoly(m_);
  const int h = q_.h(a, b);
  const int e = -q_.symform(a, b);
  MPoly r = pow(MPoly::var(m_, u) - MPoly::var(m_, v), static_cast<unsigned>(e));
  if (h % 2) r = -r;
  return r;
}

MPoly KlrAlgebra::braid_correction(const Seq& i, int l) const {
  if (i[static_cast<std::size_t>(l)] != i[static_cast<std::size_t>(l) + 2]) return MPoly(m_);
  MPoly num = q_poly(i, l, l + 2, l + 1) - q_poly(i, l, l, l + 1);
  if (num.is_zero()) return MPoly(m_);
  return num.divided_by_difference(l + 2, l);
}

KlrElement KlrAlgebra::mul_poly_left(const MPoly& p, const KlrElement& e) const {
  KlrElement r;
  for (const auto& [k, poly] : e.terms) r.add(k, p * poly);
  return r;
}

KlrElement KlrAlgebra::mul_x_left(int k, const KlrElement& e) const {
  KlrElement r;
  for (const auto& [key, poly] : e.terms) r.add(key, poly.times_var(k));
  return r;
}

KlrElement KlrAlgebra::project_left(const Seq& j, const KlrElement& e) const {
  KlrElement r;
  for (const auto& [k, p] : e.terms)
    if (act_on_seq(k.w, k.idem) == j) r.add(k, p);
  return r;
}

KlrElement KlrAlgebra::mul_tau_left(int l, const KlrElement& e) const {
  KlrElement r;
  for (const auto& [key, P] : e.terms) {
    const Seq j = act_on_seq(key.w, key.idem);
    const KlrElement n = tau_times_canonical(l, key.w, key.idem);
    const MPoly sP = P.swapped(l);
    for (const auto& [k2, P2] : n.terms) r.add(k2, sP * P2);
    if (j[static_cast<std::size_t>(l)] == j[static_cast<std::size_t>(l) + 1]) r.add(key, -P.demazure(l));
  }
  return r;
}

KlrElement KlrAlgebra::word_element(const Word& w, const Seq& i) const {
  KlrElement e = idem(i);
  for (auto it = w.rbegin(); it != w.rend(); ++it) e = mul_tau_left(*it, e);
  return e;
}

// Normal form of tau_l tau_{c(w)} 1_i.
KlrElement KlrAlgebra::tau_times_canonical(int l, const Perm& w, const Seq& i) const {
  auto key = std::make_tuple(l, w, i);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = tau_cache_.find(key);
    if (it != tau_cache_.end()) return it->second;
  }
  const Perm sw = compose(simple_perm(m_, l), w);
  KlrElement res;
  if (perm_length(sw) > perm_length(w)) {
    Word from{l};
    const Word& cw = canonical_word(w);
    from.insert(from.end(), cw.begin(), cw.end());
    res.add({i, sw}, MPoly::constant(m_, 1));
    res += rewrite_correction(from, canonical_word(sw), i);
  } else {
    Word r0{l};
    const Word& csw = canonical_word(sw);
    r0.insert(r0.end(), csw.begin(), csw.end());
    const KlrElement corr = rewrite_correction(canonical_word(w), r0, i);
    const Seq k = act_on_seq(sw, i);
    KlrElement base;
    base.add({i, sw}, q_poly(k, l, l, l + 1));
    res = base + mul_tau_left(l, corr);
  }
  std::lock_guard<std::mutex> lk(mu_);
  return tau_cache_.emplace(key, std::move(res)).first->second;
}

std::vector<std::pair<int, bool>> KlrAlgebra::braid_path(const Word& from, const Word& to) const {
  auto key = std::make_pair(from, to);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = path_cache_.find(key);
    if (it != path_cache_.end()) return it->second;
  }
  std::map<Word, std::pair<Word, std::pair<int, bool>>> parent;
  std::deque<Word> queue{from};
  parent[from] = {from, {-1, false}};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    const int n = static_cast<int>(cur.size());
    for (int p = 0; p + 1 < n; ++p) {
      const auto P = static_cast<std::size_t>(p);
      if (std::abs(cur[P] - cur[P + 1]) > 1) {
        Word nx = cur;
        std::swap(nx[P], nx[P + 1]);
        if (!parent.count(nx)) {
          parent[nx] = {cur, {p, false}};
          queue.push_back(nx);
        }
      }
      if (p + 2 < n && cur[P] == cur[P + 2] && std::abs(cur[P] - cur[P + 1]) == 1) {
        Word nx = cur;
        std::swap(nx[P], nx[P + 1]);
        nx[P + 2] = nx[P];
        if (!parent.count(nx)) {
          parent[nx] = {cur, {p, true}};
          queue.push_back(nx);
        }
      }
    }
  }
  if (!parent.count(to)) throw std::logic_error("no braid path between reduced words");
  std::vector<std::pair<int, bool>> path;
  for (Word cur = to; cur != from; cur = parent[cur].first) path.push_back(parent[cur].second);
  std::reverse(path.begin(), path.end());
  std::lock_guard<std::mutex> lk(mu_);
  return path_cache_.emplace(key, std::move(path)).first->second;
}

// tau_from 1_i - tau_to 1_i in normal form, for two reduced words of one permutation.
KlrElement KlrAlgebra::rewrite_correction(const Word& from, const Word& to, const Seq& i) const {
  if (from == to) return {};
  auto key = std::make_tuple(from, to, i);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = corr_cache_.find(key);
    if (it != corr_cache_.end()) return it->second;
  }
  KlrElement acc;
  Word cur = from;
  for (const auto& [p, braid] : braid_path(from, to)) {
    const auto P = static_cast<std::size_t>(p);
    if (!braid) {
      std::swap(cur[P], cur[P + 1]);
      continue;
    }
    const int a = std::min(cur[P], cur[P + 1]);
    const bool forward = cur[P] == a;  // (a, a+1, a) -> (a+1, a, a+1)
    const Word A(cur.begin(), cur.begin() + p);
    const Word B(cur.begin() + p + 3, cur.end());
    const Seq j = act_on_seq(word_perm(m_, B), i);
    const MPoly C = braid_correction(j, a);
    if (!C.is_zero()) {
      KlrElement e = mul_poly_left(C, word_element(B, i));
      for (auto it = A.rbegin(); it != A.rend(); ++it) e = mul_tau_left(*it, e);
      if (forward) acc -= e;
      else acc += e;
    }
    if (forward) {
      cur[P] = a + 1;
      cur[P + 1] = a;
      cur[P + 2] = a + 1;
    } else {
      cur[P] = a;
      cur[P + 1] = a + 1;
      cur[P + 2] = a;
    }
  }
  if (cur != to) throw std::logic_error("braid path did not reach its target");
  std::lock_guard<std::mutex> lk(mu_);
  return corr_cache_.emplace(key, std::move(acc)).first->second;
}

KlrElement KlrAlgebra::multiply(const KlrElement& u, const KlrElement& v) const {
  // group u's terms by right idempotent and permutation
  KlrElement r;
  std::map<Seq, KlrElement> v_by_left;
  for (const auto& [k, p] : v.terms) v_by_left[act_on_seq(k.w, k.idem)].add(k, p);
  for (const auto& [k, P] : u.terms) {
    auto it = v_by_left.find(k.idem);
    if (it == v_by_left.end()) continue;
    KlrElement e = it->second;
    const Word& word = canonical_word(k.w);
    for (auto w = word.rbegin(); w != word.rend(); ++w) e = mul_tau_left(*w, e);
    r += mul_poly_left(P, e);
  }
  return r;
}

MPoly KlrAlgebra::act_tau(int l, const Seq& c, const MPoly& g) const {
  const int a = c[static_cast<std::size_t>(l)], b = c[static_cast<std::size_t>(l) + 1];
  if (a == b) return -g.demazure(l);
  MPoly s = g.swapped(l);
  const int h = q_.h(a, b);
  if (h == 0) return s;
  return pow(MPoly::var(m_, l) - MPoly::var(m_, l + 1), static_cast<unsigned>(h)) * s;
}

PolElement KlrAlgebra::act(const KlrElement& u, const PolElement& f) const {
  PolElement out;
  for (const auto& [k, P] : u.terms) {
    auto it = f.find(k.idem);
    if (it == f.end() || it->second.is_zero()) continue;
    MPoly g = it->second;
    Seq c = k.idem;
    const Word& word = canonical_word(k.w);
    for (auto w = word.rbegin(); w != word.rend(); ++w) {
      g = act_tau(*w, c, g);
      std::swap(c[static_cast<std::size_t>(*w)], c[static_cast<std::size_t>(*w) + 1]);
    }
    MPoly& slot = out[c];
    if (slot.nvars() == 0) slot = MPoly(m_);
    slot += P * g;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

LaurentPoly KlrAlgebra::graded_rank(const Seq& j, const Seq& i) const {
  LaurentPoly r;
  for (const auto& w : all_perms(m_))
    if (act_on_seq(w, i) == j) r += LaurentPoly::monomial(tau_degree(w, i));
  return r;
}

std::string KlrAlgebra::to_string(const KlrElement& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, p] : e.terms) {
    const Word& word = canonical_word(k.w);
    for (const auto& [mono, c] : p.terms()) {
      if (!first) os << " + ";
      first = false;
      os << c << " * x^(";
      for (std::size_t t = 0; t < mono.size(); ++t) os << (t ? "," : "") << int(mono[t]);
      os << ") * tau[";
      for (std::size_t t = 0; t < word.size(); ++t) os << (t ? " " : "") << "s" << word[t] + 1;
      os << "] * e(";
      for (std::size_t t = 0; t < k.idem.size(); ++t) os << (t ? " " : "") << q_.name(k.idem[t]);
      os << ")";
    }
  }
  return os.str();
}

KlrElement KlrAlgebra::parse(const std::string& s) const {
  KlrElement out;
  std::string body = s;
  auto trim = [](std::string t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    return t;
  };
  if (trim(body) == "0") return out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(" + ", pos);
    std::string term = trim(body.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    pos = next == std::string::npos ? body.size() : next + 3;
    auto bad = [&]() { return std::invalid_argument("malformed KLR term: " + term); };
    std::size_t star = term.find('*');
    if (star == std::string::npos) throw bad();
    BigInt c(trim(term.substr(0, star)));
    std::size_t xo = term.find("x^(", star), xc = term.find(')', xo);
    std::size_t to = term.find("tau[", xc), tc = term.find(']', to);
    std::size_t eo = term.find("e(", tc), ec = term.find(')', eo);
    if (xo == std::string::npos || xc == std::string::npos || to == std::string::npos ||
        tc == std::string::npos || eo == std::string::npos || ec == std::string::npos)
      throw bad();
    MPoly::Mono mono;
    {
      std::string xs = term.substr(xo + 3, xc - xo - 3);
      for (char& ch : xs)
        if (ch == ',') ch = ' ';
      std::istringstream is(xs);
      int v;
      while (is >> v) mono.push_back(static_cast<std::uint8_t>(v));
    }
    Word word;
    {
      std::istringstream is(term.substr(to + 4, tc - to - 4));
      std::string tok;
      while (is >> tok) {
        if (tok.size() < 2 || tok[0] != 's') throw bad();
        word.push_back(std::stoi(tok.substr(1)) - 1);
      }
    }
    Seq idem;
    {
      std::istringstream is(term.substr(eo + 2, ec - eo - 2));
      std::string tok;
      while (is >> tok) idem.push_back(q_.index(tok));
    }
    if (static_cast<int>(mono.size()) != m_ || static_cast<int>(idem.size()) != m_) throw bad();
    for (int l : word)
      if (l < 0 || l + 1 >= m_) throw bad();
    out += mul_poly_left(MPoly::monomial(mono, c), word_element(word, idem));
  }
  return out;
}

KlrElement divided_idempotent(const KlrAlgebra& A, int vertex) {
  const int m = A.m();
  DimVector expect(A.nu().size(), 0);
  expect.at(static_cast<std::size_t>(vertex)) = m;
  if (A.nu() != expect) throw std::invalid_argument("divided idempotent needs nu = m*i");
  const Seq i(static_cast<std::size_t>(m), vertex);
  Perm w0(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) w0[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(m - 1 - k);
  MPoly::Mono delta(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) delta[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(m - 1 - k);
  const BigInt sign = lm(m) % 2 ? -1 : 1;
  KlrElement e = A.mul_poly_left(MPoly::monomial(delta, sign), A.word_element(A.canonical_word(w0), i));
  if (A.multiply(e, e) != e) throw std::logic_error("divided idempotent is not idempotent");
  return e;
}

KlrElement induction_embed(const KlrAlgebra& A1, const KlrAlgebra& A2, const KlrAlgebra& A,
                           const KlrElement& u1, const KlrElement& u2) {
  const int m1 = A1.m(), m2 = A2.m(), m = A.m();
  if (m1 + m2 != m || A1.nu() + A2.nu() != A.nu()) throw std::invalid_argument("induction weights do not add up");
  KlrElement r;
  for (const auto& [k1, p1] : u1.terms)
    for (const auto& [k2, p2] : u2.terms) {
      KlrKey k;
      k.idem = k1.idem;
      k.idem.insert(k.idem.end(), k2.idem.begin(), k2.idem.end());
      k.w = k1.w;
      for (auto v : k2.w) k.w.push_back(static_cast<std::uint8_t>(v + m1));
      r.add(k, p1.embedded(m, 0) * p2.embedded(m, m1));
    }
  (void)m2;
  return r;
}

KlrElement flag_idempotent(const KlrAlgebra& A, const FlagType& y) {
  const int n = A.quiver().num_vertices();
  if (y.weight(n) != A.nu()) throw std::invalid_argument("flag type weight does not match algebra");
  std::vector<std::unique_ptr<KlrAlgebra>> keep;
  std::unique_ptr<KlrAlgebra> prefix;
  KlrElement acc;
  for (const auto& st : y.steps) {
    DimVector nu_r(static_cast<std::size_t>(n), 0);
    nu_r[static_cast<std::size_t>(st.vertex)] = st.mult;
    auto Ar = std::make_unique<KlrAlgebra>(A.quiver(), nu_r);
    KlrElement e = divided_idempotent(*Ar, st.vertex);
    if (!prefix) {
      prefix = std::move(Ar);
      acc = e;
      continue;
    }
    auto next = std::make_unique<KlrAlgebra>(A.quiver(), prefix->nu() + nu_r);
    acc = induction_embed(*prefix, *Ar, *next, acc, e);
    keep.push_back(std::move(prefix));
    keep.push_back(std::move(Ar));
    prefix = std::move(next);
  }
  return acc;
}

ProjectiveClass projective_class(const FlagType& y) {
  return {y, y.expansion(), multifact(y.mults()), lvec(y.mults())};
}

namespace {

std::vector<MPoly::Mono> monomials_of_degree(int nvars, int d) {
  std::vector<MPoly::Mono> out;
  MPoly::Mono cur(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars - 1) {
      cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(v);
      rec(pos + 1, left - v);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(0, d);
  return out;
}

}  // namespace

std::vector<long> free_graded_dims(const KlrAlgebra& A, const Seq& i, int dmin, int dmax) {
  std::vector<long> out(static_cast<std::size_t>(dmax - dmin + 1), 0);
  for (const auto& w : all_perms(A.m())) {
    const int td = A.tau_degree(w, i);
    for (int d = dmin; d <= dmax; ++d) {
      if ((d - td) < 0 || (d - td) % 2) continue;
      out[static_cast<std::size_t>(d - dmin)] +=
          static_cast<long>(monomials_of_degree(A.m(), (d - td) / 2).size());
    }
  }
  return out;
}

std::vector<long> left_ideal_graded_dims(const KlrAlgebra& A, const KlrElement& e, const Seq& i,
                                         int dmin, int dmax) {
  std::vector<long> out;
  const auto perms = all_perms(A.m());
  for (int d = dmin; d <= dmax; ++d) {
    std::vector<KlrElement> prods;
    for (const auto& w : perms) {
      const int td = A.tau_degree(w, i);
      if ((d - td) < 0 || (d - td) % 2) continue;
      KlrElement tw;
      tw.add({i, w}, MPoly::constant(A.m(), 1));
      const KlrElement twe = A.multiply(tw, e);
      for (const auto& mono : monomials_of_degree(A.m(), (d - td) / 2))
        prods.push_back(A.mul_poly_left(MPoly::monomial(mono), twe));
    }
    std::map<std::pair<KlrKey, MPoly::Mono>, std::size_t> cols;
    for (const auto& p : prods)
      for (const auto& [k, poly] : p.terms)
        for (const auto& [mono, c] : poly.terms()) cols.emplace(std::make_pair(k, mono), cols.size());
    QOps K;
    Mat<QOps> M(prods.size(), cols.size(), K);
    for (std::size_t r = 0; r < prods.size(); ++r)
      for (const auto& [k, poly] : prods[r].terms)
        for (const auto& [mono, c] : poly.terms()) M.at(r, cols.at({k, mono})) = BigRat(c);
    out.push_back(static_cast<long>(rank(K, M)));
  }
  return out;
}

std::size_t RelationReport::failures() const {
  std::size_t f = 0;
  for (const auto& r : results) f += !(r.straightening_ok && r.action_ok);
  return f;
}

namespace {

struct Gen {
  char kind;  // 'x', 't', 'e'
  int idx = 0;
  Seq seq{};
};

struct GenTerm {
  MPoly left;  // multiplies on the far left
  std::vector<Gen> gens;
};

struct Relation {
  std::string family;
  std::string instance;
  Seq right;
  std::vector<GenTerm> terms;  // sum is expected to vanish
};

KlrElement straighten(const KlrAlgebra& A, const Relation& rel) {
  KlrElement total;
  for (const auto& t : rel.terms) {
    KlrElement e = A.idem(rel.right);
    for (auto g = t.gens.rbegin(); g != t.gens.rend(); ++g) {
      if (g->kind == 'x') e = A.mul_x_left(g->idx, e);
      else if (g->kind == 't') e = A.mul_tau_left(g->idx, e);
      else e = A.project_left(g->seq, e);
    }
    total += A.mul_poly_left(t.left, e);
  }
  return total;
}

PolElement apply_gens(const KlrAlgebra& A, const GenTerm& t, PolElement f) {
  for (auto g = t.gens.rbegin(); g != t.gens.rend(); ++g) {
    PolElement nf;
    for (auto& [c, p] : f) {
      if (g->kind == 'x') nf[c] = p.times_var(g->idx);
      else if (g->kind == 'e') {
        if (c == g->seq) nf[c] = p;
      } else {
        Seq c2 = c;
        std::swap(c2[static_cast<std::size_t>(g->idx)], c2[static_cast<std::size_t>(g->idx) + 1]);
        nf[c2] = A.act_tau(g->idx, c, p);
      }
    }
    f = std::move(nf);
  }
  for (auto& [c, p] : f) p = t.left * p;
  return f;
}

bool action_vanishes(const KlrAlgebra& A, const Relation& rel, int degree_bound) {
  for (int d = 0; d <= degree_bound; ++d)
    for (const auto& mono : monomials_of_degree(A.m(), d)) {
      PolElement f{{rel.right, MPoly::monomial(mono)}};
      PolElement sum;
      for (const auto& t : rel.terms)
        for (auto& [c, p] : apply_gens(A, t, f)) {
          MPoly& s = sum[c];
          if (s.nvars() == 0) s = MPoly(A.m());
          s += p;
        }
      for (const auto& [c, p] : sum)
        if (!p.is_zero()) return false;
    }
  return true;
}

std::string seq_str(const Quiver& q, const Seq& s) {
  std::string r = "(";
  for (std::size_t k = 0; k < s.size(); ++k) r += (k ? " " : "") + q.name(s[k]);
  return r + ")";
}

}  // namespace

RelationReport check_relations(const Quiver& q, const DimVector& nu, int degree_bound) {
  KlrAlgebra A(q, nu);
  const int m = A.m();
  const MPoly one = MPoly::constant(m, 1), mone = MPoly::constant(m, -1);
  std::vector<Relation> rels;
  for (const auto& i : A.sequences()) {
    const std::string is = seq_str(q, i);
    for (const auto& j : A.sequences()) {
      Relation r{"idempotent", seq_str(q, j) + "*" + is, i, {{one, {Gen{'e', 0, j}}}}};
      if (i == j) r.terms.push_back({mone, {}});
      rels.push_back(r);
    }
    for (int l = 0; l + 1 < m; ++l) {
      Seq sl = i;
      std::swap(sl[static_cast<std::size_t>(l)], sl[static_cast<std::size_t>(l) + 1]);
      for (const auto& k : A.sequences()) {
        Relation r{"tau-idempotent", "1" + seq_str(q, k) + " tau" + std::to_string(l + 1) + " 1" + is, i,
                   {{one, {Gen{'e', 0, k}, Gen{'t', l}}}}};
        if (k == sl) r.terms.push_back({mone, {Gen{'t', l}}});
        rels.push_back(r);
      }
    }
    for (int k = 0; k < m; ++k)
      for (const auto& j : A.sequences()) {
        Relation r{"x-idempotent", "1" + seq_str(q, j) + " x" + std::to_string(k + 1) + " 1" + is, i,
                   {{one, {Gen{'e', 0, j}, Gen{'x', k}}}}};
        if (j == i) r.terms.push_back({mone, {Gen{'x', k}}});
        rels.push_back(r);
      }
    for (int k = 0; k < m; ++k)
      for (int k2 = k + 1; k2 < m; ++k2)
        rels.push_back({"x-commute", is, i, {{one, {Gen{'x', k}, Gen{'x', k2}}}, {mone, {Gen{'x', k2}, Gen{'x', k}}}}});
    for (int l = 0; l + 1 < m; ++l)
      rels.push_back({"quadratic", "l=" + std::to_string(l + 1) + " " + is, i,
                      {{one, {Gen{'t', l}, Gen{'t', l}}}, {-A.q_poly(i, l, l, l + 1), {}}}});
    for (int l = 0; l + 1 < m; ++l)
      for (int l2 = l + 2; l2 + 1 < m; ++l2)
        rels.push_back({"tau-commute", std::to_string(l + 1) + "," + std::to_string(l2 + 1) + " " + is, i,
                        {{one, {Gen{'t', l}, Gen{'t', l2}}}, {mone, {Gen{'t', l2}, Gen{'t', l}}}}});
    for (int l = 0; l + 1 < m; ++l)
      for (int k = 0; k < m; ++k) {
        const bool same = i[static_cast<std::size_t>(l)] == i[static_cast<std::size_t>(l) + 1];
        const int sk = k == l ? l + 1 : (k == l + 1 ? l : k);
        Relation r{"tau-x", "l=" + std::to_string(l + 1) + " k=" + std::to_string(k + 1) + " " + is, i,
                   {{one, {Gen{'t', l}, Gen{'x', k}}}, {mone, {Gen{'x', sk}, Gen{'t', l}}}}};
        if (same && k == l) r.terms.push_back({one, {}});        // LHS - RHS with RHS = -1
        if (same && k == l + 1) r.terms.push_back({mone, {}});   // RHS = +1
        rels.push_back(r);
      }
    for (int l = 0; l + 2 < m; ++l)
      rels.push_back({"braid", "l=" + std::to_string(l + 1) + " " + is, i,
                      {{one, {Gen{'t', l + 1}, Gen{'t', l}, Gen{'t', l + 1}}},
                       {mone, {Gen{'t', l}, Gen{'t', l + 1}, Gen{'t', l}}},
                       {-A.braid_correction(i, l), {}}}});
  }
  RelationReport rep;
  for (const auto& r : rels) {
    RelationResult res{r.family, r.instance, straighten(A, r).is_zero(), action_vanishes(A, r, degree_bound)};
    rep.results.push_back(res);
  }
  return rep;
}

}  // namespace quiverpar
