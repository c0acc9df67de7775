#pragma once

// Brute-force reference computations over prime fields F_p. They use plain
// modular integer arithmetic and explicit vector sets, nothing from the library
// beyond the data types, so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "quiverpar/quiver.hpp"
#include "quiverpar/representation.hpp"

namespace oracle {

using quiverpar::DimVector;
using quiverpar::FlagType;
using quiverpar::Quiver;
using quiverpar::Representation;

// Vectors of F_p^n are coded as integers in [0, p^n), little-endian digits.
struct Space {
  int p, n;
  int size() const {
    int s = 1;
    for (int k = 0; k < n; ++k) s *= p;
    return s;
  }
  std::vector<int> digits(int v) const {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k, v /= p) d[static_cast<std::size_t>(k)] = v % p;
    return d;
  }
  int code(const std::vector<int>& d) const {
    int v = 0;
    for (int k = n - 1; k >= 0; --k) v = v * p + ((d[static_cast<std::size_t>(k)] % p + p) % p);
    return v;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
    return code(x);
  }
  int scale(int c, int a) const {
    auto x = digits(a);
    for (auto& e : x) e *= c;
    return code(x);
  }
};

// A subspace is the sorted list of its vectors.
using Sub = std::vector<int>;

inline Sub span_with(const Space& S, const Sub& U, int v) {
  std::set<int> out(U.begin(), U.end());
  for (int u : U)
    for (int c = 0; c < S.p; ++c) out.insert(S.add(u, S.scale(c, v)));
  return Sub(out.begin(), out.end());
}

inline int sub_dim(const Space& S, const Sub& U) {
  int d = 0;
  for (std::size_t s = 1; s < U.size(); s *= static_cast<std::size_t>(S.p)) ++d;
  return d;
}

// Every subspace of F_p^n.
inline std::vector<Sub> all_subspaces(const Space& S) {
  std::set<Sub> seen{{0}};
  std::vector<Sub> todo{{0}};
  while (!todo.empty()) {
    Sub U = todo.back();
    todo.pop_back();
    for (int v = 0; v < S.size(); ++v) {
      if (std::binary_search(U.begin(), U.end(), v)) continue;
      Sub W = span_with(S, U, v);
      if (seen.insert(W).second) todo.push_back(W);
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool contains(const Sub& big, const Sub& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Sub intersect(const Sub& a, const Sub& b) {
  Sub out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Image of vector v under an integer matrix (rows = target dim).
inline int apply(const quiverpar::IntMatrix& m, const Space& from, const Space& to, int v) {
  auto d = from.digits(v);
  std::vector<int> r(static_cast<std::size_t>(to.n), 0);
  for (int i = 0; i < m.rows; ++i) {
    long s = 0;
    for (int j = 0; j < m.cols; ++j) s += m.a[static_cast<std::size_t>(i * m.cols + j)] * d[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = static_cast<int>(((s % from.p) + from.p) % from.p);
  }
  return to.code(r);
}

using Chain = std::vector<std::vector<Sub>>;  // chain[k][i]: V^{k+1} at vertex i

// Visits every flag 0 = V^0 < V^1 < ... < V^k = V of x-stable graded
// subspaces where V^l / V^{l-1} has dimension a_l at vertex i_l, 0 elsewhere.
inline void for_each_stable_flag(const Quiver& q, const Representation& x, const FlagType& y, int p,
                                 const std::function<void(const Chain&)>& visit) {
  const int n = q.num_vertices();
  std::vector<Space> sp;
  std::vector<std::vector<Sub>> subs;
  for (int i = 0; i < n; ++i) {
    sp.push_back({p, x.dims[static_cast<std::size_t>(i)]});
    subs.push_back(all_subspaces(sp.back()));
  }
  std::vector<Sub> cur(static_cast<std::size_t>(n), Sub{0});
  Chain chain;
  auto stable = [&]() {
    for (std::size_t h = 0; h < q.arrows().size(); ++h) {
      const auto a = static_cast<std::size_t>(q.arrows()[h].from), b = static_cast<std::size_t>(q.arrows()[h].to);
      for (int v : cur[a])
        if (!std::binary_search(cur[b].begin(), cur[b].end(), apply(x.maps[h], sp[a], sp[b], v))) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t step) {
    if (step == y.steps.size()) {
      visit(chain);
      return;
    }
    const auto i = static_cast<std::size_t>(y.steps[step].vertex);
    const int target = sub_dim(sp[i], cur[i]) + y.steps[step].mult;
    const Sub saved = cur[i];
    for (const auto& U : subs[i]) {
      if (sub_dim(sp[i], U) != target || !contains(U, saved)) continue;
      cur[i] = U;
      if (stable()) {
        chain.push_back(cur);
        rec(step + 1);
        chain.pop_back();
      }
    }
    cur[i] = saved;
  };
  rec(0);
}

inline long fiber_count(const Quiver& q, const Representation& x, const FlagType& y, int p) {
  long c = 0;
  for_each_stable_flag(q, x, y, p, [&](const Chain&) { ++c; });
  return c;
}

// The coordinate subspace spanned by the first k basis vectors of F_p^n.
inline Sub coordinate_subspace(const Space& S, int k) {
  Sub U{0};
  for (int e = 0; e < k; ++e) {
    std::vector<int> d(static_cast<std::size_t>(S.n), 0);
    d[static_cast<std::size_t>(e)] = 1;
    U = span_with(S, U, S.code(d));
  }
  return U;
}

inline long count_subspaces(int p, int n, int k) {
  Space S{p, n};
  long c = 0;
  for (const auto& U : all_subspaces(S))
    if (sub_dim(S, U) == k) ++c;
  return c;
}

// Points of E_V over F_p as flat digit vectors, one block per arrow.
inline int rep_space_dim(const Quiver& q, const DimVector& nu) {
  int d = 0;
  for (const auto& a : q.arrows()) d += nu[static_cast<std::size_t>(a.from)] * nu[static_cast<std::size_t>(a.to)];
  return d;
}

inline Representation decode_rep(const Quiver& q, const DimVector& nu, long code, int p) {
  Representation r;
  r.dims = nu;
  for (const auto& a : q.arrows()) {
    quiverpar::IntMatrix m(nu[static_cast<std::size_t>(a.to)], nu[static_cast<std::size_t>(a.from)]);
    for (auto& e : m.a) {
      e = code % p;
      code /= p;
    }
    r.maps.push_back(m);
  }
  return r;
}

inline long encode_rep(const Representation& r, int p) {
  long code = 0, mul = 1;
  for (const auto& m : r.maps)
    for (long e : m.a) {
      code += (((e % p) + p) % p) * mul;
      mul *= p;
    }
  return code;
}

// GL_V(F_2)-orbits on E_V(F_2), by union-find over elementary transvections
// (each is an involution in characteristic 2). Returns orbit id per point.
inline std::vector<long> orbits_over_F2(const Quiver& q, const DimVector& nu) {
  const int D = rep_space_dim(q, nu);
  const long N = 1L << D;
  std::vector<long> parent(static_cast<std::size_t>(N));
  std::iota(parent.begin(), parent.end(), 0L);
  std::function<long(long)> find = [&](long a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  for (long c = 0; c < N; ++c) {
    const Representation x = decode_rep(q, nu, c, 2);
    for (int v = 0; v < q.num_vertices(); ++v) {
      const int d = nu[static_cast<std::size_t>(v)];
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) {
          if (s == t) continue;
          // g = I + E_{st} at vertex v: x_h -> g x_h for h into v, x_h g^{-1} = x_h g for h out of v.
          Representation y = x;
          for (std::size_t h = 0; h < q.arrows().size(); ++h) {
            auto& m = y.maps[h];
            const auto& m0 = x.maps[h];
            if (q.arrows()[h].to == v)
              for (int c2 = 0; c2 < m.cols; ++c2) m.at(s, c2) = (m0.a[static_cast<std::size_t>(s * m.cols + c2)] + m0.a[static_cast<std::size_t>(t * m.cols + c2)]) % 2;
            if (q.arrows()[h].from == v) {
              auto m1 = m;
              for (int r2 = 0; r2 < m.rows; ++r2)
                m.at(r2, t) = (m1.a[static_cast<std::size_t>(r2 * m.cols + t)] + m1.a[static_cast<std::size_t>(r2 * m.cols + s)]) % 2;
            }
          }
          const long a = find(c), b = find(encode_rep(y, 2));
          if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    }
  }
  std::vector<long> id(static_cast<std::size_t>(N));
  for (long c = 0; c < N; ++c) id[static_cast<std::size_t>(c)] = find(c);
  return id;
}

inline std::size_t count_distinct(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

// All orientations of the path on n vertices.
inline std::vector<Quiver> path_orientations(int n) {
  std::vector<Quiver> out;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<bool> fw;
    for (int k = 0; k + 1 < n; ++k) fw.push_back(!(mask >> k & 1));
    out.push_back(Quiver::type_A(n, fw));
  }
  return out;
}

}  // namespace oracle
