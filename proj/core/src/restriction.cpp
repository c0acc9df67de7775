#include "quiverpar/restriction.hpp"

#include <functional>
#include <stdexcept>

#include "quiverpar/flagcount.hpp"
#include "quiverpar/linalg.hpp"

namespace quiverpar {

std::vector<Split> splits(const Quiver& q, const FlagType& y) {
  std::vector<Split> out;
  const std::size_t n = y.steps.size();
  std::vector<int> a1(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == n) {
      Split s;
      s.a1 = a1;
      for (std::size_t k = 0; k < n; ++k) {
        s.a2.push_back(y.steps[k].mult - a1[k]);
        if (a1[k]) s.y1.steps.push_back({y.steps[k].vertex, a1[k]});
        if (s.a2.back()) s.y2.steps.push_back({y.steps[k].vertex, s.a2.back()});
      }
      s.nu1 = s.y1.weight(q.num_vertices());
      s.nu2 = s.y2.weight(q.num_vertices());
      out.push_back(std::move(s));
      return;
    }
    for (int a = 0; a <= y.steps[r].mult; ++a) {
      a1[r] = a;
      rec(r + 1);
    }
  };
  rec(0);
  return out;
}

long shift_constant(const Quiver& q, const DimVector& nu1, const DimVector& nu2) {
  long M = 0;
  for (const auto& h : q.arrows())
    M += long{nu1[static_cast<std::size_t>(h.from)]} * nu2[static_cast<std::size_t>(h.to)];
  for (std::size_t i = 0; i < nu1.size(); ++i) M -= long{nu1[i]} * nu2[i];
  return M;
}

namespace {

// dim of {X : V_src -> V_dst | X(S_k) <= T_k for all k}
long hom_preserving(const FiniteField& F, std::size_t ns, std::size_t nt,
                    const std::vector<std::pair<fq::Basis, fq::Basis>>& pairs) {
  if (ns == 0 || nt == 0) return 0;
  FqOps k{&F};
  std::vector<fq::Vec> rows;
  for (const auto& [S, T] : pairs) {
    auto ann = fq::annihilator(F, T, nt);
    for (const auto& s : S)
      for (const auto& phi : ann) {
        fq::Vec row(ns * nt, 0);
        for (std::size_t i = 0; i < nt; ++i)
          for (std::size_t j = 0; j < ns; ++j) row[i * ns + j] = F.mul(phi[i], s[j]);
        rows.push_back(std::move(row));
      }
  }
  Mat<FqOps> m(rows.size(), ns * nt, k);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ns * nt; ++c) m.at(r, c) = rows[r][c];
  return static_cast<long>(ns * nt - (rows.empty() ? 0 : rank(k, m)));
}

BigInt count_Ftilde(const Quiver& q, const FlagType& y, int qq) {
  BigInt c = count_flagvar(q, y, qq), p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(qq),
                static_cast<unsigned long>(dim_Ftilde(q, y) - dim_F(q, y)));
  return c * p;
}

}  // namespace

BigInt count_split_pairs(const Quiver& q, const FlagType& y, const Split& s, int qq) {
  const FiniteField& F = field(qq);
  const auto nv = static_cast<std::size_t>(q.num_vertices());
  DimVector nu = y.weight(q.num_vertices());
  std::vector<fq::Basis> V2(nv);
  for (std::size_t i = 0; i < nv; ++i)
    for (int k = 0; k < s.nu2[i]; ++k) {
      fq::Vec v(static_cast<std::size_t>(nu[i]), 0);
      v[static_cast<std::size_t>(k)] = 1;
      V2[i].push_back(std::move(v));
    }
  auto idim = [&](const fq::Basis& A, const fq::Basis& B, std::size_t n) {
    fq::Basis u = A;
    u.insert(u.end(), B.begin(), B.end());
    return static_cast<int>(A.size() + B.size()) - static_cast<int>(fq::rref_basis(F, u, n).size());
  };
  std::vector<std::vector<fq::Basis>> flag;  // flag[r][i], r = 0..steps
  flag.emplace_back(nv);
  BigInt total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == y.steps.size()) {
      long dx = 0;
      for (const auto& h : q.arrows()) {
        const auto a = static_cast<std::size_t>(h.from), b = static_cast<std::size_t>(h.to);
        std::vector<std::pair<fq::Basis, fq::Basis>> pairs{{V2[a], V2[b]}};
        for (const auto& fl : flag) pairs.emplace_back(fl[a], fl[b]);
        dx += hom_preserving(F, static_cast<std::size_t>(nu[a]), static_cast<std::size_t>(nu[b]), pairs);
      }
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(qq), static_cast<unsigned long>(dx));
      total += p;
      return;
    }
    const auto i = static_cast<std::size_t>(y.steps[r].vertex);
    const auto n = static_cast<std::size_t>(nu[i]);
    const fq::Basis W = flag.back()[i];
    const int want = idim(W, V2[i], n) + s.a2[r];
    auto C = fq::complement(F, W, fq::identity(n), n);
    fq::for_each_extension(F, W, C, y.steps[r].mult, [&](const fq::Basis& U) {
      if (idim(U, V2[i], n) != want) return true;
      auto nx = flag.back();
      nx[i] = U;
      flag.push_back(std::move(nx));
      rec(r + 1);
      flag.pop_back();
      return true;
    });
  };
  rec(0);
  return total;
}

RestrictionDatum restriction_constants(const Quiver& q, const FlagType& y, const std::vector<int>& qs) {
  RestrictionDatum d;
  d.y = y;
  const long dy = dim_Ftilde(q, y);
  for (auto& s : splits(q, y)) {
    RestrictionTerm t;
    t.M = shift_constant(q, s.nu1, s.nu2);
    long m = -1;
    for (int qq : qs) {
      BigInt tot = count_split_pairs(q, y, s, qq);
      BigInt base = count_Ftilde(q, s.y1, qq) * count_Ftilde(q, s.y2, qq);
      long mq = -1;
      if (base != 0 && tot % base == 0) {
        BigInt r = tot / base;
        long e = 0;
        while (r > 1 && r % qq == 0) {
          r /= qq;
          ++e;
        }
        if (r == 1) mq = e;
      }
      if (mq < 0 || (m >= 0 && mq != m)) d.bundle_ok = false;
      m = mq;
    }
    t.m = m;
    t.shift = static_cast<int>(dy - dim_Ftilde(q, s.y1) - dim_Ftilde(q, s.y2) - 2 * m + t.M);
    t.split = std::move(s);
    d.terms.push_back(std::move(t));
  }
  return d;
}

TensorWordVector res_class(const QuantumGroup& f, const RestrictionDatum& d) {
  TensorWordVector out;
  for (const auto& t : d.terms) {
    auto a = f.theta_monomial(t.split.y2), b = f.theta_monomial(t.split.y1);
    RationalFunction sh(LaurentPoly::monomial(t.shift));
    for (const auto& [wa, ra] : a.c)
      for (const auto& [wb, rb] : b.c) out.add(wa, wb, ra * rb * sh);
  }
  return out;
}

}  // namespace quiverpar
