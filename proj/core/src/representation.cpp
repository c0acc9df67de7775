#include "quiverpar/representation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "quiverpar/laurent.hpp"
#include "quiverpar/linalg.hpp"

namespace quiverpar {

Representation zero_representation(const Quiver& q, const DimVector& dims) {
  Representation r;
  r.dims = dims;
  for (const auto& a : q.arrows())
    r.maps.emplace_back(dims[static_cast<std::size_t>(a.to)], dims[static_cast<std::size_t>(a.from)]);
  return r;
}

Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts) {
  const std::size_t n = static_cast<std::size_t>(q.num_vertices());
  DimVector dims(n, 0);
  for (const auto& p : parts) dims = dims + p.dims;
  Representation r = zero_representation(q, dims);
  DimVector off(n, 0);
  for (const auto& p : parts) {
    for (std::size_t h = 0; h < q.arrows().size(); ++h) {
      const auto& a = q.arrows()[h];
      const int ro = off[static_cast<std::size_t>(a.to)], co = off[static_cast<std::size_t>(a.from)];
      const IntMatrix& m = p.maps[h];
      for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.maps[h].at(ro + i, co + j) = m.at(i, j);
    }
    off = off + p.dims;
  }
  return r;
}

void validate_representation(const Quiver& q, const Representation& r) {
  if (r.dims.size() != static_cast<std::size_t>(q.num_vertices()) || r.maps.size() != q.arrows().size())
    throw std::invalid_argument("representation does not match quiver");
  for (std::size_t h = 0; h < r.maps.size(); ++h) {
    const auto& a = q.arrows()[h];
    if (r.maps[h].rows != r.dims[static_cast<std::size_t>(a.to)] ||
        r.maps[h].cols != r.dims[static_cast<std::size_t>(a.from)])
      throw std::invalid_argument("representation matrix shape mismatch");
  }
}

namespace {

template <class K>
long hom_dim_impl(const K& k, const Quiver& q, const Representation& M, const Representation& N) {
  const int n = q.num_vertices();
  std::vector<int> off(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    off[static_cast<std::size_t>(i) + 1] =
        off[static_cast<std::size_t>(i)] + N.dims[static_cast<std::size_t>(i)] * M.dims[static_cast<std::size_t>(i)];
  const int unknowns = off[static_cast<std::size_t>(n)];
  if (unknowns == 0) return 0;
  int eqs = 0;
  for (const auto& a : q.arrows())
    eqs += N.dims[static_cast<std::size_t>(a.to)] * M.dims[static_cast<std::size_t>(a.from)];
  Mat<K> A(static_cast<std::size_t>(eqs), static_cast<std::size_t>(unknowns), k);
  // f_i is N_i x M_i, unknown (r,c) of f_i at off[i] + r*M_i + c.
  auto var = [&](int i, int r, int c) {
    return static_cast<std::size_t>(off[static_cast<std::size_t>(i)] + r * M.dims[static_cast<std::size_t>(i)] + c);
  };
  std::size_t row = 0;
  for (std::size_t h = 0; h < q.arrows().size(); ++h) {
    const int i = q.arrows()[h].from, j = q.arrows()[h].to;
    const int Nj = N.dims[static_cast<std::size_t>(j)], Mi = M.dims[static_cast<std::size_t>(i)];
    const int Ni = N.dims[static_cast<std::size_t>(i)], Mj = M.dims[static_cast<std::size_t>(j)];
    // N_h f_i - f_j M_h = 0
    for (int r = 0; r < Nj; ++r)
      for (int c = 0; c < Mi; ++c, ++row) {
        for (int t = 0; t < Ni; ++t) {
          long v = N.maps[h].at(r, t);
          if (v) A.at(row, var(i, t, c)) = k.add(A.at(row, var(i, t, c)), k.from_int(v));
        }
        for (int t = 0; t < Mj; ++t) {
          long v = M.maps[h].at(t, c);
          if (v) A.at(row, var(j, r, t)) = k.sub(A.at(row, var(j, r, t)), k.from_int(v));
        }
      }
  }
  return unknowns - static_cast<long>(rank(k, A));
}

}  // namespace

long hom_dim(const Quiver& q, const Representation& m, const Representation& n) {
  return hom_dim_impl(QOps{}, q, m, n);
}

long hom_dim(const Quiver& q, const Representation& m, const Representation& n, const FiniteField& F) {
  return hom_dim_impl(FqOps{&F}, q, m, n);
}

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  for (const auto& h : q.arrows())
    s -= static_cast<long>(a[static_cast<std::size_t>(h.from)]) * b[static_cast<std::size_t>(h.to)];
  return s;
}

int RootSystem::find(const DimVector& root) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == root) return static_cast<int>(k);
  return -1;
}

std::string root_name(const DimVector& root) {
  std::string s;
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (root[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (root[i] != 1) s += std::to_string(root[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

namespace {

bool root_less(const DimVector& a, const DimVector& b) {
  int ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return a > b;  // a1 before a2 at equal height
}

DimVector reflect(const Quiver& q, const DimVector& v, int i) {
  long pairing = 0;
  for (int j = 0; j < q.num_vertices(); ++j) pairing += static_cast<long>(v[static_cast<std::size_t>(j)]) * q.symform(j, i);
  DimVector r = v;
  r[static_cast<std::size_t>(i)] -= static_cast<int>(pairing);
  return r;
}

bool is_positive(const DimVector& v) {
  bool any = false;
  for (int x : v) {
    if (x < 0) return false;
    any = any || x > 0;
  }
  return any;
}

// Source reflection S^-_k: input is a representation for orientation `cur`
// in which k is a source; output is for the orientation with arrows at k
// reversed. Works over Z and insists the cokernel is free.
Representation source_reflection(const std::vector<Arrow>& cur, const Representation& V, int k) {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < cur.size(); ++h) {
    if (cur[h].to == k) throw std::logic_error("reflection at a vertex that is not a source");
    if (cur[h].from == k) out.push_back(h);
  }
  const int dk = V.dims[static_cast<std::size_t>(k)];
  int D = 0;
  for (auto h : out) D += V.dims[static_cast<std::size_t>(cur[h].to)];
  const int W = dk + D;
  std::vector<std::vector<BigInt>> A(static_cast<std::size_t>(D), std::vector<BigInt>(static_cast<std::size_t>(W), 0));
  {
    int r0 = 0;
    for (auto h : out) {
      const IntMatrix& m = V.maps[h];
      for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) A[static_cast<std::size_t>(r0 + i)][static_cast<std::size_t>(j)] = m.at(i, j);
      r0 += m.rows;
    }
    for (int i = 0; i < D; ++i) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(dk + i)] = 1;
  }
  int r = 0;
  BigInt det = 1;
  for (int c = 0; c < dk && r < D; ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < D; ++i)
        if (A[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0 &&
            (best < 0 || abs(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) <
                             abs(A[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)])))
          best = i;
      if (best < 0) break;
      std::swap(A[static_cast<std::size_t>(r)], A[static_cast<std::size_t>(best)]);
      bool clean = true;
      for (int i = r + 1; i < D; ++i) {
        auto& row = A[static_cast<std::size_t>(i)];
        if (row[static_cast<std::size_t>(c)] == 0) continue;
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), row[static_cast<std::size_t>(c)].get_mpz_t(),
                   A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get_mpz_t());
        for (int j = 0; j < W; ++j) row[static_cast<std::size_t>(j)] -= f * A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        if (row[static_cast<std::size_t>(c)] != 0) clean = false;
      }
      if (clean) {
        det *= A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        ++r;
        break;
      }
    }
  }
  if (r != dk) throw std::logic_error("reflection functor: structure map not injective");
  if (abs(det) != 1) throw std::logic_error("reflection functor: cokernel has torsion");
  Representation res = V;
  res.dims[static_cast<std::size_t>(k)] = D - r;
  int col = 0;
  for (auto h : out) {
    const int dj = V.dims[static_cast<std::size_t>(cur[h].to)];
    IntMatrix m(D - r, dj);
    for (int i = 0; i < D - r; ++i)
      for (int j = 0; j < dj; ++j) {
        const BigInt& v = A[static_cast<std::size_t>(r + i)][static_cast<std::size_t>(dk + col + j)];
        if (!v.fits_slong_p()) throw std::overflow_error("reflection functor entry overflow");
        m.at(i, j) = v.get_si();
      }
    res.maps[h] = m;
    col += dj;
  }
  return res;
}

Representation interval_module(const Quiver& q, const DimVector& root) {
  Representation r = zero_representation(q, root);
  for (std::size_t h = 0; h < q.arrows().size(); ++h) {
    const auto& a = q.arrows()[h];
    if (root[static_cast<std::size_t>(a.from)] == 1 && root[static_cast<std::size_t>(a.to)] == 1) r.maps[h].at(0, 0) = 1;
  }
  return r;
}

}  // namespace

RootSystem root_system(const Quiver& q) {
  const int n = q.num_vertices();
  std::vector<DimVector> roots;
  for (int i = 0; i < n; ++i) {
    DimVector s(static_cast<std::size_t>(n), 0);
    s[static_cast<std::size_t>(i)] = 1;
    roots.push_back(s);
  }
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (int i = 0; i < n; ++i) {
      DimVector r = reflect(q, roots[k], i);
      if (is_positive(r) && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  std::sort(roots.begin(), roots.end(), root_less);

  RootSystem rs;
  rs.roots = roots;
  rs.reps.resize(roots.size());
  std::vector<char> comp_is_a(static_cast<std::size_t>(n), 0);
  for (const auto& c : q.components())
    for (int v : c.vertices) comp_is_a[static_cast<std::size_t>(v)] = c.type == 'A';

  std::map<DimVector, Representation> found;
  std::size_t needed = 0;
  for (const auto& r : roots) {
    int v = 0;
    while (r[static_cast<std::size_t>(v)] == 0) ++v;
    if (comp_is_a[static_cast<std::size_t>(v)]) found.emplace(r, interval_module(q, r));
    else ++needed;
  }
  if (needed > 0) {
    // Sink sweep: k_1 a sink of Q_0, Q_s = sigma_{k_s} Q_{s-1}, repeated periodically.
    std::vector<std::vector<Arrow>> orient{q.arrows()};
    std::vector<int> ks;
    const std::size_t limit = static_cast<std::size_t>(n) * (roots.size() + 2);
    std::size_t got = 0;
    for (std::size_t t = 0; t < limit && got < needed; ++t) {
      const auto& cur = orient.back();
      int sink = -1;
      for (int v = 0; v < n && sink < 0; ++v) {
        bool ok = true;
        for (const auto& a : cur) ok = ok && a.from != v;
        if (ok) sink = v;
      }
      ks.push_back(sink);
      std::vector<Arrow> next = cur;
      for (auto& a : next)
        if (a.to == sink) std::swap(a.from, a.to);
      // beta_t = s_{k_1} ... s_{k_{t-1}} alpha_{k_t}
      DimVector beta(static_cast<std::size_t>(n), 0);
      beta[static_cast<std::size_t>(sink)] = 1;
      for (std::size_t s = t; s-- > 0;) beta = reflect(q, beta, ks[s]);
      if (is_positive(beta) && !comp_is_a[static_cast<std::size_t>(sink)] && !found.count(beta)) {
        // simple at k_t as a representation of Q_{t-1} = orient[t]
        DimVector d(static_cast<std::size_t>(n), 0);
        d[static_cast<std::size_t>(sink)] = 1;
        Representation V;
        V.dims = d;
        for (const auto& a : cur)
          V.maps.emplace_back(d[static_cast<std::size_t>(a.to)], d[static_cast<std::size_t>(a.from)]);
        for (std::size_t s = t; s-- > 0;) V = source_reflection(orient[s + 1], V, ks[s]);
        if (V.dims != beta) throw std::logic_error("reflection functors produced the wrong dimension vector");
        found.emplace(beta, V);
        ++got;
      }
      orient.push_back(next);
    }
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto it = found.find(roots[k]);
    if (it == found.end()) throw std::logic_error("no representative for root " + root_name(roots[k]));
    rs.reps[k] = it->second;
  }
  return rs;
}

std::vector<DimVector> roots_by_tits_scan(const Quiver& q, int max_height) {
  const int n = q.num_vertices();
  std::vector<DimVector> out;
  for (const auto& v : dimension_vectors_up_to(n, max_height)) {
    long t = 0;
    for (int x : v) t += static_cast<long>(x) * x;
    for (const auto& a : q.arrows()) t -= static_cast<long>(v[static_cast<std::size_t>(a.from)]) * v[static_cast<std::size_t>(a.to)];
    if (t != 1) continue;
    // connected support
    std::vector<int> supp;
    for (int i = 0; i < n; ++i)
      if (v[static_cast<std::size_t>(i)] > 0) supp.push_back(i);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> st{supp[0]};
    seen[static_cast<std::size_t>(supp[0])] = 1;
    std::size_t cnt = 0;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      ++cnt;
      for (int y : supp)
        if (!seen[static_cast<std::size_t>(y)] && q.symform(x, y) != 0) {
          seen[static_cast<std::size_t>(y)] = 1;
          st.push_back(y);
        }
    }
    if (cnt == supp.size()) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

std::vector<KostantPartition> kostant_partitions(const RootSystem& rs, const DimVector& nu, std::size_t cap) {
  std::vector<KostantPartition> out;
  KostantPartition cur;
  std::function<void(std::size_t, const DimVector&)> rec = [&](std::size_t start, const DimVector& rest) {
    if (total(rest) == 0) {
      if (out.size() >= cap) throw BudgetExceeded("Kostant partition enumeration exceeded cap");
      out.push_back(cur);
      return;
    }
    for (std::size_t k = start; k < rs.roots.size(); ++k) {
      if (!leq(rs.roots[k], rest)) continue;
      cur.parts.push_back(static_cast<int>(k));
      rec(k, rest - rs.roots[k]);
      cur.parts.pop_back();
    }
  };
  rec(0, nu);
  return out;
}

std::string partition_name(const RootSystem& rs, const KostantPartition& p) {
  std::string s = "{";
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    if (k) s += ", ";
    s += root_name(rs.roots[static_cast<std::size_t>(p.parts[k])]);
  }
  return s + "}";
}

Representation orbit_rep(const Quiver& q, const RootSystem& rs, const KostantPartition& p) {
  std::vector<Representation> parts;
  for (int k : p.parts) parts.push_back(rs.reps[static_cast<std::size_t>(k)]);
  if (parts.empty()) return zero_representation(q, DimVector(static_cast<std::size_t>(q.num_vertices()), 0));
  return direct_sum(q, parts);
}

long orbit_dim(const Quiver& q, const Representation& rep) {
  long g = 0;
  for (int d : rep.dims) g += static_cast<long>(d) * d;
  return g - hom_dim(q, rep, rep);
}

bool orbit_less(const Orbit& a, const Orbit& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.lambda < b.lambda;
}

std::vector<Orbit> orbits(const Quiver& q, const RootSystem& rs, const DimVector& nu) {
  std::vector<Orbit> out;
  for (auto& p : kostant_partitions(rs, nu)) {
    Orbit o;
    o.rep = orbit_rep(q, rs, p);
    if (o.rep.dims.empty()) o.rep = zero_representation(q, nu);
    o.dim = orbit_dim(q, o.rep);
    o.name = partition_name(rs, p);
    o.lambda = std::move(p);
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), orbit_less);
  return out;
}

}  // namespace quiverpar
