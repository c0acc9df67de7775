#include "quiverpar/flagcount.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "quiverpar/linalg.hpp"

namespace quiverpar {

const FiniteField& field(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<FiniteField>(q);
  return *slot;
}

std::vector<int> default_prime_powers(std::size_t n) {
  std::vector<int> out;
  for (int q = 2; q <= 256 && out.size() < n; ++q)
    if (is_prime_power(q)) out.push_back(q);
  if (out.size() < n) throw std::invalid_argument("not enough prime powers <= 256");
  return out;
}

namespace fq {

namespace {

Mat<FqOps> to_mat(const FiniteField& F, const Basis& rows, std::size_t dim) {
  FqOps k{&F};
  Mat<FqOps> m(rows.size(), dim, k);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace

Basis identity(std::size_t dim) {
  Basis b(dim, Vec(dim, 0));
  for (std::size_t k = 0; k < dim; ++k) b[k][k] = 1;
  return b;
}

Basis rref_basis(const FiniteField& F, const Basis& rows, std::size_t dim) {
  auto m = to_mat(F, rows, dim);
  auto piv = rref(FqOps{&F}, m);
  Basis out;
  for (std::size_t r = 0; r < piv.size(); ++r)
    out.emplace_back(m.a.begin() + static_cast<std::ptrdiff_t>(r * dim),
                     m.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim));
  return out;
}

Basis annihilator(const FiniteField& F, const Basis& rows, std::size_t dim) {
  return nullspace(FqOps{&F}, to_mat(F, rows, dim));
}

Basis kernel(const FiniteField& F, const Basis& functionals, std::size_t dim) {
  return nullspace(FqOps{&F}, to_mat(F, functionals, dim));
}

Basis complement(const FiniteField& F, const Basis& W, const Basis& A, std::size_t dim) {
  Basis cur = W, out;
  std::size_t r = rank(FqOps{&F}, to_mat(F, cur, dim));
  for (const auto& v : A) {
    cur.push_back(v);
    std::size_t r2 = rank(FqOps{&F}, to_mat(F, cur, dim));
    if (r2 > r) {
      out.push_back(v);
      r = r2;
    } else {
      cur.pop_back();
    }
  }
  return out;
}

bool for_each_extension(const FiniteField& F, const Basis& W, const Basis& C, int a,
                        const std::function<bool(const Basis&)>& f) {
  const int s = static_cast<int>(C.size());
  if (a < 0 || a > s) return true;
  const std::size_t dim = W.empty() ? (C.empty() ? 0 : C[0].size()) : W[0].size();
  const int q = F.order();
  std::vector<int> piv(static_cast<std::size_t>(a));
  // free positions of the a x s RREF matrix for a given pivot set
  std::function<bool(int, int)> choose = [&](int r, int start) -> bool {
    if (r == a) {
      std::vector<std::pair<int, int>> freepos;
      std::vector<bool> is_piv(static_cast<std::size_t>(s), false);
      for (int p : piv) is_piv[static_cast<std::size_t>(p)] = true;
      for (int rr = 0; rr < a; ++rr)
        for (int c = piv[static_cast<std::size_t>(rr)] + 1; c < s; ++c)
          if (!is_piv[static_cast<std::size_t>(c)]) freepos.emplace_back(rr, c);
      std::vector<int> val(freepos.size(), 0);
      while (true) {
        Basis U = W;
        for (int rr = 0; rr < a; ++rr) {
          Vec v = C[static_cast<std::size_t>(piv[static_cast<std::size_t>(rr)])];
          for (std::size_t t = 0; t < freepos.size(); ++t) {
            if (freepos[t].first != rr || val[t] == 0) continue;
            const auto& cv = C[static_cast<std::size_t>(freepos[t].second)];
            auto coef = static_cast<FiniteField::Elem>(val[t]);
            for (std::size_t k = 0; k < dim; ++k) v[k] = F.add(v[k], F.mul(coef, cv[k]));
          }
          U.push_back(std::move(v));
        }
        if (!f(U)) return false;
        std::size_t t = 0;
        while (t < val.size() && ++val[t] == q) val[t++] = 0;
        if (t == val.size()) break;
      }
      return true;
    }
    for (int p = start; p <= s - (a - r); ++p) {
      piv[static_cast<std::size_t>(r)] = p;
      if (!choose(r + 1, p + 1)) return false;
    }
    return true;
  };
  return choose(0, 0);
}

}  // namespace fq

const LaurentPoly& gaussian_poly(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  LaurentPoly r;
  if (k < 0 || k > n) r = LaurentPoly();
  else if (k == 0 || k == n) r = LaurentPoly(1);
  else r = gaussian_poly(n - 1, k - 1) + gaussian_poly(n - 1, k).shifted(k);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(std::make_pair(n, k), r).first->second;
}

BigInt gaussian_value(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1, Q = q;
  for (int t = 0; t < k; ++t) {
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(n - t));
    mpz_pow_ui(b.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(t + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

namespace {

std::vector<DimVector> cumulative_dims(const Quiver& q, const FlagType& y) {
  std::vector<DimVector> v{DimVector(static_cast<std::size_t>(q.num_vertices()), 0)};
  for (const auto& s : y.steps) {
    DimVector nx = v.back();
    nx[static_cast<std::size_t>(s.vertex)] += s.mult;
    v.push_back(nx);
  }
  return v;
}

}  // namespace

long dim_F(const Quiver& q, const FlagType& y) {
  long d = 0;
  for (std::size_t r = 0; r < y.steps.size(); ++r)
    for (std::size_t s = r + 1; s < y.steps.size(); ++s)
      if (y.steps[r].vertex == y.steps[s].vertex) d += long{y.steps[r].mult} * y.steps[s].mult;
  (void)q;
  return d;
}

long dim_Ftilde(const Quiver& q, const FlagType& y) {
  auto v = cumulative_dims(q, y);
  long d = dim_F(q, y);
  for (const auto& h : q.arrows())
    for (std::size_t r = 1; r < v.size(); ++r)
      d += long{v[r][static_cast<std::size_t>(h.from)] - v[r - 1][static_cast<std::size_t>(h.from)]} *
           v[r][static_cast<std::size_t>(h.to)];
  return d;
}

LaurentPoly count_flagvar_poly(const Quiver& q, const FlagType& y) {
  LaurentPoly r(1);
  std::vector<int> pre(static_cast<std::size_t>(q.num_vertices()), 0);
  for (const auto& s : y.steps) {
    pre[static_cast<std::size_t>(s.vertex)] += s.mult;
    r *= gaussian_poly(pre[static_cast<std::size_t>(s.vertex)], s.mult);
  }
  return r;
}

BigInt count_flagvar(const Quiver& q, const FlagType& y, int qq) {
  return count_flagvar_poly(q, y).eval(BigRat(qq)).get_num();
}

namespace {

bool adjacent(const Quiver& q, int i, int j) { return i != j && (q.h(i, j) + q.h(j, i)) > 0; }

struct Group {
  int vertex;
  std::vector<int> mults;
  int total;
};

// Moves steps at the same vertex next to each other when only steps at
// non-adjacent vertices separate them, then merges runs.
std::vector<Group> group_steps(const Quiver& q, const FlagType& y) {
  auto st = y.steps;
  for (std::size_t r = 0; r < st.size(); ++r) {
    bool moved = true;
    while (moved) {
      moved = false;
      std::size_t end = r + 1;
      while (end < st.size() && st[end].vertex == st[r].vertex) ++end;
      for (std::size_t k = end; k < st.size(); ++k) {
        if (st[k].vertex == st[r].vertex) {
          auto s = st[k];
          st.erase(st.begin() + static_cast<std::ptrdiff_t>(k));
          st.insert(st.begin() + static_cast<std::ptrdiff_t>(end), s);
          moved = true;
          break;
        }
        if (adjacent(q, st[k].vertex, st[r].vertex)) break;
      }
    }
  }
  std::vector<Group> g;
  for (const auto& s : st) {
    if (!g.empty() && g.back().vertex == s.vertex) {
      g.back().mults.push_back(s.mult);
      g.back().total += s.mult;
    } else {
      g.push_back({s.vertex, {s.mult}, s.mult});
    }
  }
  return g;
}

class FiberCounter {
 public:
  FiberCounter(const Quiver& q, const Representation& x, const FlagType& y, int qq, std::uint64_t budget)
      : q_(q), F_(field(qq)), budget_(budget), groups_(group_steps(q, y)) {
    validate_representation(q, x);
    if (y.weight(q.num_vertices()) != x.dims) throw std::invalid_argument("count_fiber: weight mismatch");
    dims_ = x.dims;
    for (const auto& m : x.maps) {
      std::vector<fq::Vec> rows(static_cast<std::size_t>(m.rows), fq::Vec(static_cast<std::size_t>(m.cols)));
      for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = F_.from_int(m.at(r, c));
      X_.push_back(std::move(rows));
    }
    cur_.assign(static_cast<std::size_t>(q.num_vertices()), {});
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      bool dep = false;
      for (std::size_t g2 = g + 1; g2 < groups_.size(); ++g2)
        if (q.h(groups_[g2].vertex, groups_[g].vertex) > 0) dep = true;
      depends_.push_back(dep);
      BigInt mult = 1;
      int pre = 0;
      for (int a : groups_[g].mults) {
        pre += a;
        mult *= gaussian_value(pre, a, qq);
      }
      multinom_.push_back(mult);
    }
  }

  BigInt run() { return rec(0); }

 private:
  BigInt rec(std::size_t g) {
    if (g == groups_.size()) return 1;
    const int i = groups_[g].vertex;
    const auto ni = static_cast<std::size_t>(dims_[static_cast<std::size_t>(i)]);
    fq::Basis functionals;
    for (std::size_t h = 0; h < q_.arrows().size(); ++h) {
      const auto& ar = q_.arrows()[h];
      if (ar.from != i) continue;
      const auto nj = static_cast<std::size_t>(dims_[static_cast<std::size_t>(ar.to)]);
      if (nj == 0) continue;
      auto ann = fq::annihilator(F_, cur_[static_cast<std::size_t>(ar.to)], nj);
      for (const auto& phi : ann) {
        fq::Vec row(ni, 0);
        for (std::size_t r = 0; r < nj; ++r) {
          if (phi[r] == 0) continue;
          for (std::size_t c = 0; c < ni; ++c) row[c] = F_.add(row[c], F_.mul(phi[r], X_[h][r][c]));
        }
        functionals.push_back(std::move(row));
      }
    }
    auto A = fq::kernel(F_, functionals, ni);
    const fq::Basis W = cur_[static_cast<std::size_t>(i)];
    auto C = fq::complement(F_, W, A, ni);
    const int a = groups_[g].total;
    if (static_cast<int>(C.size()) < a) return 0;
    BigInt res = 0;
    if (!depends_[g]) {
      tick();
      fq::Basis U = W;
      for (int k = 0; k < a; ++k) U.push_back(C[static_cast<std::size_t>(k)]);
      cur_[static_cast<std::size_t>(i)] = std::move(U);
      res = gaussian_value(static_cast<int>(C.size()), a, F_.order()) * rec(g + 1);
    } else {
      fq::for_each_extension(F_, W, C, a, [&](const fq::Basis& U) {
        tick();
        cur_[static_cast<std::size_t>(i)] = U;
        res += rec(g + 1);
        return true;
      });
    }
    cur_[static_cast<std::size_t>(i)] = W;
    return res * multinom_[g];
  }

  void tick() {
    if (++used_ > budget_) throw BudgetExceeded("count_fiber: subspace enumeration budget exceeded");
  }

  const Quiver& q_;
  const FiniteField& F_;
  std::uint64_t budget_, used_ = 0;
  std::vector<Group> groups_;
  std::vector<bool> depends_;
  std::vector<BigInt> multinom_;
  DimVector dims_;
  std::vector<std::vector<fq::Vec>> X_;
  std::vector<fq::Basis> cur_;
};

}  // namespace

BigInt count_fiber(const Quiver& q, const Representation& x, const FlagType& y, int qq, std::uint64_t budget) {
  return FiberCounter(q, x, y, qq, budget).run();
}

PoincareResult interpolate_counts(const std::vector<int>& qs, const std::vector<BigInt>& counts,
                                  long degree_bound, std::size_t fit_points) {
  PoincareResult res;
  res.qs = qs;
  res.counts = counts;
  res.degree_bound = degree_bound;
  res.fit_points = fit_points;
  if (qs.size() != counts.size()) throw std::invalid_argument("interpolate_counts: size mismatch");
  if (fit_points > qs.size()) throw std::invalid_argument("interpolate_counts: too few samples");
  if (degree_bound < 0) {
    for (const auto& c : counts)
      if (c != 0) {
        res.alert = true;
        res.alert_reason = "nonempty fiber over an orbit of dimension > dim F~_y";
      }
    return res;
  }
  // Newton divided differences on the fitting points
  const std::size_t n = fit_points;
  std::vector<BigRat> dd(n);
  for (std::size_t k = 0; k < n; ++k) dd[k] = BigRat(counts[k]);
  for (std::size_t lvl = 1; lvl < n; ++lvl)
    for (std::size_t k = n - 1; k >= lvl; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / BigRat(qs[k] - qs[k - lvl]);
      if (k == lvl) break;
    }
  std::vector<BigRat> poly;  // ascending coefficients
  for (std::size_t k = n; k-- > 0;) {
    std::vector<BigRat> nx(poly.size() + 1, BigRat(0));
    for (std::size_t e = 0; e < poly.size(); ++e) {
      nx[e + 1] += poly[e];
      nx[e] -= poly[e] * qs[k];
    }
    nx[0] += dd[k];
    poly = std::move(nx);
  }
  while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
  for (std::size_t e = 0; e < poly.size(); ++e) {
    poly[e].canonicalize();
    if (poly[e].get_den() != 1) {
      res.alert = true;
      res.alert_reason = "non-integral interpolation coefficient";
    } else if (sgn(poly[e]) < 0) {
      res.alert = true;
      res.alert_reason = "negative interpolation coefficient";
    }
    if (sgn(poly[e]) != 0) res.poly.add_term(static_cast<int>(e), poly[e].get_num());
  }
  if (!res.alert && static_cast<long>(poly.size()) - 1 > degree_bound && !poly.empty()) {
    res.alert = true;
    res.alert_reason = "degree exceeds dimension bound";
  }
  if (!res.alert)
    for (std::size_t k = 0; k < qs.size(); ++k) {
      BigRat v = 0, z = qs[k], p = 1;
      for (const auto& c : poly) {
        v += c * p;
        p *= z;
      }
      if (v != BigRat(counts[k])) {
        res.alert = true;
        res.alert_reason = "held-out sample q=" + std::to_string(qs[k]) + " does not fit";
        break;
      }
    }
  if (res.alert) res.poly = LaurentPoly();
  return res;
}

std::vector<int> sample_prime_powers(long degree_bound, const std::vector<int>& preferred) {
  const std::size_t need = static_cast<std::size_t>(std::max<long>(degree_bound + 3, 5));
  std::vector<int> out;
  for (int q : preferred)
    if (out.size() < need && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  for (int q : default_prime_powers(need + out.size()))
    if (out.size() < need && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  return out;
}

PoincareResult poincare_fiber(const Quiver& q, const Representation& x, const FlagType& y, long degree_bound,
                              const std::vector<int>& qs, std::uint64_t budget) {
  const std::size_t fit = static_cast<std::size_t>(std::max<long>(degree_bound + 1, 0));
  if (qs.size() < fit + 2) throw std::invalid_argument("poincare_fiber: need degree_bound + 3 samples");
  std::vector<BigInt> counts;
  for (int qq : qs) counts.push_back(count_fiber(q, x, y, qq, budget));
  return interpolate_counts(qs, counts, degree_bound, fit);
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t k = 0; k < n; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex emu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < n;) {
        try {
          f(k);
        } catch (...) {
          std::lock_guard<std::mutex> lk(emu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::vector<FiberRecord> scan_weight(const Quiver& q, const RootSystem& rs, const DimVector& nu,
                                     const ScanOptions& opt) {
  auto orb = orbits(q, rs, nu);
  std::vector<FlagType> ys;
  if (opt.expanded_only)
    for (const auto& s : enumerate_sequences(nu)) ys.push_back(flag_from_sequence(s));
  else
    ys = enumerate_flag_types(q, nu, opt.flag_cap);
  std::vector<FiberRecord> recs;
  for (const auto& y : ys)
    for (std::size_t o = 0; o < orb.size(); ++o) recs.push_back({nu, y, static_cast<int>(o), {}, false});
  parallel_for(recs.size(), opt.jobs, [&](std::size_t k) {
    auto& r = recs[k];
    const auto& ob = orb[static_cast<std::size_t>(r.orbit)];
    long bound = std::min(dim_F(q, r.y), dim_Ftilde(q, r.y) - ob.dim);
    auto qs = sample_prime_powers(bound, opt.prime_powers);
    try {
      if (opt.count) {
        std::vector<BigInt> cs;
        for (int qq : qs) cs.push_back(opt.count(r.y, ob, qq));
        r.result = interpolate_counts(qs, cs, bound, static_cast<std::size_t>(std::max<long>(bound + 1, 0)));
      } else {
        r.result = poincare_fiber(q, ob.rep, r.y, bound, qs, opt.budget);
      }
    } catch (const BudgetExceeded&) {
      r.budget_exceeded = true;
      r.result.degree_bound = bound;
      r.result.qs = qs;
    }
  });
  if (opt.on_record)
    for (const auto& r : recs) opt.on_record(r);
  return recs;
}

EvenScanReport evenness_scan(const Quiver& q, const ScanOptions& opt) {
  EvenScanReport rep;
  auto rs = root_system(q);
  for (const auto& nu : dimension_vectors_up_to(q.num_vertices(), opt.nu_cap)) {
    auto recs = scan_weight(q, rs, nu, opt);
    for (auto& r : recs) {
      if (r.budget_exceeded) ++rep.incomplete;
      else if (r.result.alert) ++rep.alerts;
      rep.fibers.push_back(std::move(r));
    }
  }
  rep.verdict = rep.alerts ? "alerts" : rep.incomplete ? "incomplete" : "even-consistent";
  return rep;
}

}  // namespace quiverpar
