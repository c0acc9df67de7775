#include "quiverpar/typea.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "quiverpar/flagcount.hpp"
#include "quiverpar/linalg.hpp"

namespace quiverpar {

LaurentPoly typeA_X_count(const std::vector<int>& v, const std::vector<int>& d, int k) {
  if (v.size() != d.size()) throw std::invalid_argument("typeA_X_count: size mismatch");
  LaurentPoly res(1);
  int wprev = 0, dprev = 0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    const int e = d[a] - dprev;
    if (v[a] < 0 || e < 0 || e > v[a]) return {};
    res *= gaussian_poly(v[a], e).shifted(e * (wprev - dprev));
    wprev += v[a];
    dprev = d[a];
  }
  if (dprev != k) return {};
  return res;
}

namespace {

using Mat2 = std::vector<std::vector<int>>;

LaurentPoly x_from_cumulative(const std::vector<int>& G, const std::vector<int>& t, int k) {
  std::vector<int> v(G.size());
  int prev = 0;
  for (std::size_t b = 0; b < G.size(); ++b) {
    if (G[b] < prev || t[b] < 0 || t[b] > G[b]) return {};
    v[b] = G[b] - prev;
    prev = G[b];
  }
  return typeA_X_count(v, t, k);
}

LaurentPoly y_count(std::vector<int> f, const std::vector<int>& g, Mat2 c, std::vector<int> v, Mat2 D) {
  const std::size_t t = g.size();
  const int N = t ? g[t - 1] : 0;
  LaurentPoly res(1);
  while (true) {
    const std::size_t s = v.size();
    if (s == 0) return N == 0 ? res : LaurentPoly();
    if (s == 1) {
      if (v[0] != N || f[0] > N) return {};
      for (std::size_t b = 0; b < t; ++b)
        if (D[0][b] != g[b]) return {};
      return res;
    }
    if (D[0][t - 1] != v[0] || D[1][t - 1] != v[0] + v[1]) return {};
    // choices of U_1 inside U_2 containing phi_1
    std::vector<int> G(t), tg(t);
    for (std::size_t b = 0; b < t; ++b) {
      G[b] = D[1][b] - c[0][b];
      tg[b] = D[0][b] - c[0][b];
    }
    LaurentPoly x = x_from_cumulative(G, tg, v[0] - f[0]);
    if (x.is_zero()) return {};
    res *= x;
    f.erase(f.begin());
    c.erase(c.begin());
    D.erase(D.begin());
    v[1] += v[0];
    v.erase(v.begin());
  }
}

// ---- exact subspace arithmetic over Q ----

using QVec = std::vector<BigRat>;
using QBasis = std::vector<QVec>;
using QMatrix = std::vector<QVec>;  // rows

Mat<QOps> to_mat(const QBasis& rows, std::size_t dim) {
  Mat<QOps> m(rows.size(), dim, QOps{});
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = rows[r][c];
  return m;
}

int qrank(const QBasis& rows, std::size_t dim) {
  if (rows.empty() || dim == 0) return 0;
  return static_cast<int>(rank(QOps{}, to_mat(rows, dim)));
}

QBasis qnull(const QBasis& rows, std::size_t dim) {
  if (dim == 0) return {};
  return nullspace(QOps{}, to_mat(rows, dim));
}

QBasis whole(std::size_t dim) {
  QBasis b(dim, QVec(dim, BigRat(0)));
  for (std::size_t k = 0; k < dim; ++k) b[k][k] = 1;
  return b;
}

// {v in Q^{cols} : X v in span(W)}, X has `rows` rows.
QBasis preimage(const QMatrix& X, std::size_t rows, std::size_t cols, const QBasis& W) {
  QBasis ann = qnull(W, rows);
  QBasis fun;
  for (const auto& phi : ann) {
    QVec r(cols, BigRat(0));
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(phi[i]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[j] += phi[i] * X[i][j];
    }
    fun.push_back(std::move(r));
  }
  if (fun.empty()) return whole(cols);
  return qnull(fun, cols);
}

struct PathRep {
  std::vector<int> dims;
  std::vector<QMatrix> maps;  // maps[k] joins positions k and k+1
  std::vector<bool> fwd;      // true: k -> k+1, shape dims[k+1] x dims[k]
};

struct Step {
  int pos;
  int mult;
};

PathRep dual(const PathRep& r) {
  PathRep d = r;
  for (std::size_t k = 0; k < r.maps.size(); ++k) {
    const auto& M = r.maps[k];
    const std::size_t src = r.fwd[k] ? k : k + 1, dst = r.fwd[k] ? k + 1 : k;
    const auto R = static_cast<std::size_t>(r.dims[dst]), C = static_cast<std::size_t>(r.dims[src]);
    QMatrix T(C, QVec(R));
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) T[j][i] = M[i][j];
    d.maps[k] = std::move(T);
    d.fwd[k] = !r.fwd[k];
  }
  return d;
}

class CellRecursion {
 public:
  LaurentPoly run(int n, const PathRep& rep, const std::vector<Step>& steps, const std::vector<QBasis>& W,
                  const Mat2& D) {
    const std::size_t m = steps.size(), k = W.size();
    const auto last = static_cast<std::size_t>(n - 1);
    const int N = rep.dims[last];
    std::vector<int> g(k);
    for (std::size_t b = 0; b < k; ++b) g[b] = qrank(W[b], static_cast<std::size_t>(N));

    if (n == 1) {
      std::vector<int> f(m, 0), v(m, 0);
      Mat2 c(m, std::vector<int>(k, 0));
      f[m - 1] = N;
      c[m - 1] = g;
      for (std::size_t a = 0; a < m; ++a) v[a] = steps[a].pos == 0 ? steps[a].mult : 0;
      return y_count(f, g, c, v, D);
    }

    if (!rep.fwd[last - 1]) {
      PathRep d = dual(rep);
      std::vector<Step> ds(steps.rbegin(), steps.rend());
      std::vector<int> cum(m + 1, 0);  // dim V^r at the last position
      for (std::size_t r = 0; r < m; ++r)
        cum[r + 1] = cum[r] + (steps[r].pos == n - 1 ? steps[r].mult : 0);
      auto Dget = [&](std::size_t r, std::size_t b) { return r == 0 || b == 0 ? 0 : D[r - 1][b - 1]; };
      auto Wdim = [&](std::size_t b) { return b == 0 ? 0 : g[b - 1]; };
      std::vector<QBasis> dW(k);
      for (std::size_t b = 1; b <= k; ++b) {
        const std::size_t src = k - b;  // 1-based index of W, 0 meaning the zero space
        dW[b - 1] = src == 0 ? whole(static_cast<std::size_t>(N)) : qnull(W[src - 1], static_cast<std::size_t>(N));
      }
      Mat2 dD(m, std::vector<int>(k));
      for (std::size_t r = 1; r <= m; ++r)
        for (std::size_t b = 1; b <= k; ++b)
          dD[r - 1][b - 1] = N - cum[m - r] - Wdim(k - b) + Dget(m - r, k - b);
      return run(n, d, ds, dW, dD);
    }

    // arrow (n-2) -> (n-1)
    const auto prev = last - 1;
    const int Np = rep.dims[prev];
    const QMatrix& X = rep.maps[prev];
    std::vector<QBasis> Wp(k + 1);
    for (std::size_t r = 0; r <= k; ++r) {
      if (r == k) Wp[r] = whole(static_cast<std::size_t>(Np));
      else Wp[r] = preimage(X, static_cast<std::size_t>(N), static_cast<std::size_t>(Np), r == 0 ? QBasis{} : W[r - 1]);
    }
    std::vector<int> dWp(k + 1);
    for (std::size_t s = 0; s <= k; ++s) dWp[s] = qrank(Wp[s], static_cast<std::size_t>(Np));
    std::vector<Step> sp = steps;
    for (auto& st : sp)
      if (st.pos == n - 1) st.mult = 0;
    std::vector<int> e(m);
    for (std::size_t r = 0, acc = 0; r < m; ++r) {
      if (steps[r].pos == n - 2) acc += static_cast<std::size_t>(steps[r].mult);
      e[r] = static_cast<int>(acc);
    }
    std::vector<int> v(m);
    for (std::size_t a = 0; a < m; ++a) v[a] = steps[a].pos == n - 1 ? steps[a].mult : 0;

    LaurentPoly total;
    const std::size_t K = k + 1;
    Mat2 Dp(m, std::vector<int>(K, 0));
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t s) {
      if (r == m) {
        LaurentPoly sub = run(n - 1, rep, sp, Wp, Dp);
        if (sub.is_zero()) return;
        FlagPair fp;
        fp.g = g;
        fp.f.assign(m, 0);
        fp.c.assign(m, std::vector<int>(k, 0));
        for (std::size_t a = 0; a < m; ++a) {
          if (a + 1 == m) {
            fp.f[a] = N;
            fp.c[a] = g;
          } else {
            fp.f[a] = Dp[a][k] - Dp[a][0];
            for (std::size_t b = 0; b < k; ++b) fp.c[a][b] = Dp[a][b + 1] - Dp[a][0];
          }
        }
        LaurentPoly y = typeA_Y_count(fp, v, D);
        if (!y.is_zero()) total += sub * y;
        return;
      }
      const int er = e[r], erp = r ? e[r - 1] : 0;
      const int up = r ? Dp[r - 1][s] : 0;
      const int left = s ? Dp[r][s - 1] : 0;
      const int diag = (r && s) ? Dp[r - 1][s - 1] : 0;
      int lo = std::max({up, left, er + dWp[s] - Np, up + left - diag, 0});
      int hi = std::min({er, dWp[s], up + er - erp, left + dWp[s] - (s ? dWp[s - 1] : 0)});
      if (s + 1 == K) lo = std::max(lo, er), hi = std::min(hi, er);
      for (int val = lo; val <= hi; ++val) {
        Dp[r][s] = val;
        if (s + 1 == K) fill(r + 1, 0);
        else fill(r, s + 1);
      }
    };
    fill(0, 0);
    return total;
  }
};

std::vector<int> path_order(const Quiver& q, const DynkinComponent& comp) {
  auto adj = [&](int a, int b) { return q.h(a, b) + q.h(b, a) > 0; };
  int start = -1;
  for (int v : comp.vertices) {
    int deg = 0;
    for (int u : comp.vertices) deg += adj(u, v) ? 1 : 0;
    if (deg <= 1 && (start < 0 || v < start)) start = v;
  }
  std::vector<int> order{start};
  while (order.size() < comp.vertices.size()) {
    int nx = -1;
    for (int u : comp.vertices)
      if (adj(order.back(), u) && std::find(order.begin(), order.end(), u) == order.end()) nx = u;
    if (nx < 0) throw std::logic_error("path_order: component is not a path");
    order.push_back(nx);
  }
  return order;
}

}  // namespace

LaurentPoly typeA_Y_count(const FlagPair& fp, const std::vector<int>& v, const std::vector<std::vector<int>>& D) {
  return y_count(fp.f, fp.g, fp.c, v, D);
}

LaurentPoly typeA_cell_recursion(const Quiver& q, const Representation& x, const FlagType& y) {
  validate_representation(q, x);
  LaurentPoly res(1);
  for (const auto& comp : q.components()) {
    if (comp.type != 'A') throw std::invalid_argument("typeA_cell_recursion: component " + comp.name() + " is not of type A");
    auto order = path_order(q, comp);
    std::vector<int> pos(static_cast<std::size_t>(q.num_vertices()), -1);
    for (std::size_t k = 0; k < order.size(); ++k) pos[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    std::vector<Step> steps;
    for (const auto& s : y.steps)
      if (pos[static_cast<std::size_t>(s.vertex)] >= 0) steps.push_back({pos[static_cast<std::size_t>(s.vertex)], s.mult});
    if (steps.empty()) continue;
    PathRep rep;
    for (int v : order) rep.dims.push_back(x.dims[static_cast<std::size_t>(v)]);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      int found = -1;
      bool fwd = true;
      for (std::size_t h = 0; h < q.arrows().size(); ++h) {
        const auto& a = q.arrows()[h];
        if (a.from == order[k] && a.to == order[k + 1]) found = static_cast<int>(h), fwd = true;
        if (a.from == order[k + 1] && a.to == order[k]) found = static_cast<int>(h), fwd = false;
      }
      const auto& M = x.maps[static_cast<std::size_t>(found)];
      QMatrix Q(static_cast<std::size_t>(M.rows), QVec(static_cast<std::size_t>(M.cols)));
      for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) Q[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = M.at(r, c);
      rep.maps.push_back(std::move(Q));
      rep.fwd.push_back(fwd);
    }
    const int n = static_cast<int>(order.size());
    const auto N = static_cast<std::size_t>(rep.dims.back());
    Mat2 D(steps.size(), std::vector<int>(1, 0));
    int acc = 0;
    for (std::size_t r = 0; r < steps.size(); ++r) {
      if (steps[r].pos == n - 1) acc += steps[r].mult;
      D[r][0] = acc;
    }
    res *= CellRecursion().run(n, rep, steps, {whole(N)}, D);
    if (res.is_zero()) return res;
  }
  return res;
}

}  // namespace quiverpar
