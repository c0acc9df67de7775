#include "quiverpar/parity.hpp"

#include <algorithm>
#include <map>

namespace quiverpar {

StalkData stalk_tables(const Quiver& q, const RootSystem& rs, const DimVector& nu, const ScanOptions& opt) {
  StalkData s;
  s.nu = nu;
  s.orbits = orbits(q, rs, nu);
  s.ys = opt.expanded_only ? std::vector<FlagType>{} : enumerate_flag_types(q, nu, opt.flag_cap);
  if (opt.expanded_only)
    for (const auto& seq : enumerate_sequences(nu)) s.ys.push_back(flag_from_sequence(seq));
  std::map<FlagType, std::size_t> yi;
  for (std::size_t k = 0; k < s.ys.size(); ++k) {
    yi[s.ys[k]] = k;
    s.dFt.push_back(dim_Ftilde(q, s.ys[k]));
  }
  s.table.assign(s.ys.size(), std::vector<LaurentPoly>(s.orbits.size()));
  s.fibers = scan_weight(q, rs, nu, opt);
  for (const auto& r : s.fibers) {
    if (r.budget_exceeded) ++s.incomplete;
    else if (r.result.alert) ++s.alerts;
    else s.table[yi.at(r.y)][static_cast<std::size_t>(r.orbit)] = r.result.poly;
  }
  return s;
}

std::vector<int> resolution_candidates(const StalkData& s, int orbit) {
  const auto& lam = s.orbits[static_cast<std::size_t>(orbit)];
  std::vector<int> out;
  for (std::size_t y = 0; y < s.ys.size(); ++y) {
    if (s.dFt[y] != lam.dim) continue;
    if (s.table[y][static_cast<std::size_t>(orbit)] != LaurentPoly(1)) continue;
    bool ok = true;
    for (std::size_t mu = 0; mu < s.orbits.size() && ok; ++mu)
      if (static_cast<int>(mu) != orbit && s.orbits[mu].dim >= lam.dim && !s.table[y][mu].is_zero()) ok = false;
    if (ok) out.push_back(static_cast<int>(y));
  }
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
    return s.ys[static_cast<std::size_t>(a)].steps.size() < s.ys[static_cast<std::size_t>(b)].steps.size();
  });
  return out;
}

std::optional<int> find_resolution(const StalkData& s, int orbit) {
  auto c = resolution_candidates(s, orbit);
  if (c.empty()) return std::nullopt;
  return c.front();
}

std::vector<int> default_order(const StalkData& s) {
  std::vector<int> o(s.orbits.size());
  for (std::size_t k = 0; k < o.size(); ++k) o[k] = static_cast<int>(k);
  return o;
}

namespace {

void sub_scaled(std::vector<LaurentPoly>& acc, const LaurentPoly& c, const std::vector<LaurentPoly>& t) {
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (!t[k].is_zero()) acc[k] -= c * t[k];
}

std::string alert(const StalkData& s, const std::string& what) {
  std::string nu;
  for (int v : s.nu) nu += (nu.empty() ? "" : ",") + std::to_string(v);
  return "PARITY-ALERT nu=(" + nu + "): " + what;
}

bool palindromic(const LaurentPoly& c, long width) {
  for (const auto& [e, v] : c.terms())
    if (c.coeff(static_cast<int>(width) - e) != v) return false;
  return true;
}

}  // namespace

std::vector<LaurentPoly> split_top(const StalkData& s, const std::vector<int>& order,
                                   const std::vector<std::vector<LaurentPoly>>& parity,
                                   const std::vector<LaurentPoly>& table, int lambda,
                                   std::vector<std::string>* alerts) {
  std::vector<LaurentPoly> rt = table;
  const long dl = s.orbits[static_cast<std::size_t>(lambda)].dim;
  const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), lambda) - order.begin());
  for (std::size_t p = pos; p-- > 0;) {
    const auto mu = static_cast<std::size_t>(order[p]);
    const LaurentPoly r = rt[mu];
    if (r.is_zero()) continue;
    const long w = dl - s.orbits[mu].dim;
    // the summand's multiplicity is palindromic about w/2; the top summand
    // only has stalk degrees strictly below w/2
    LaurentPoly c;
    for (const auto& [e, v] : r.terms()) {
      if (2L * e < w) continue;
      if (e > w && alerts) alerts->push_back(alert(s, "stalk degree beyond dimension bound at " + s.orbits[mu].name));
      c.add_term(e, v);
      if (2L * e != w) c.add_term(static_cast<int>(w - e), v);
    }
    if (!c.nonnegative() && alerts) alerts->push_back(alert(s, "negative multiplicity at " + s.orbits[mu].name));
    if (!c.is_zero()) sub_scaled(rt, c, parity[mu]);
    if (!rt[mu].nonnegative() && alerts)
      alerts->push_back(alert(s, "negative residual at " + s.orbits[mu].name + " while splitting " +
                                     s.orbits[static_cast<std::size_t>(lambda)].name));
  }
  return rt;
}

PeelResult peel(const StalkData& s, const std::vector<int>& order) {
  PeelResult p;
  p.order = order;
  const std::size_t n = s.orbits.size();
  p.resolution.assign(n, -1);
  p.parity.assign(n, std::vector<LaurentPoly>(n));
  for (int lam : order) {
    const auto L = static_cast<std::size_t>(lam);
    auto r = find_resolution(s, lam);
    if (!r) {
      p.alerts.push_back(alert(s, "no resolution found for " + s.orbits[L].name));
      continue;
    }
    p.resolution[L] = *r;
    auto E = split_top(s, order, p.parity, s.table[static_cast<std::size_t>(*r)], lam, &p.alerts);
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (mu == L) continue;
      if (s.orbits[mu].dim >= s.orbits[L].dim && !E[mu].is_zero())
        p.alerts.push_back(alert(s, "parity table of " + s.orbits[L].name + " not supported below it"));
    }
    p.parity[L] = std::move(E);
  }
  p.decomposition.assign(s.ys.size(), std::vector<LaurentPoly>(n));
  for (std::size_t y = 0; y < s.ys.size(); ++y) {
    auto rt = s.table[y];
    for (std::size_t k = order.size(); k-- > 0;) {
      const auto mu = static_cast<std::size_t>(order[k]);
      LaurentPoly c = rt[mu];
      if (c.is_zero()) continue;
      if (!c.nonnegative()) p.alerts.push_back(alert(s, "negative multiplicity of " + s.orbits[mu].name + " in y=" + std::to_string(y)));
      if (!palindromic(c, s.dFt[y] - s.orbits[mu].dim))
        p.alerts.push_back(alert(s, "non-palindromic multiplicity of " + s.orbits[mu].name + " in y=" + std::to_string(y)));
      sub_scaled(rt, c, p.parity[mu]);
      p.decomposition[y][mu] = c;
    }
    for (const auto& v : rt)
      if (!v.is_zero()) {
        p.alerts.push_back(alert(s, "nonzero terminal residual for y=" + std::to_string(y)));
        break;
      }
  }
  return p;
}

std::vector<std::vector<LaurentPoly>> k_decomposition(const StalkData& s, const PeelResult& p) {
  std::vector<std::vector<LaurentPoly>> C(s.ys.size(), std::vector<LaurentPoly>(s.orbits.size()));
  for (std::size_t y = 0; y < s.ys.size(); ++y)
    for (std::size_t l = 0; l < s.orbits.size(); ++l)
      for (const auto& [k, v] : p.decomposition[y][l].terms())
        C[y][l].add_term(static_cast<int>(s.dFt[y] - s.orbits[l].dim - 2L * k), v);
  return C;
}

ParityBasis parity_basis(const QuantumGroup& f, const StalkData& s, const PeelResult& p) {
  ParityBasis pb;
  const std::size_t n = s.orbits.size();
  auto C = k_decomposition(s, p);
  pb.b.assign(n, {});
  pb.transition.assign(n, std::vector<LaurentPoly>(n));
  pb.unitriangular = true;
  for (int lam : p.order) {
    const auto L = static_cast<std::size_t>(lam);
    const int y = p.resolution[L];
    if (y < 0) {
      pb.unitriangular = false;
      continue;
    }
    const auto Y = static_cast<std::size_t>(y);
    if (C[Y][L] != LaurentPoly(1)) pb.unitriangular = false;
    WordVector b = f.theta_monomial(s.ys[Y]);
    pb.transition[L][L] = 1;
    for (int mu : p.order) {
      const auto M = static_cast<std::size_t>(mu);
      if (mu == lam) break;
      if (C[Y][M].is_zero()) continue;
      b -= pb.b[M].scaled(RationalFunction(C[Y][M]));
      for (std::size_t k = 0; k < n; ++k) pb.transition[L][k] -= C[Y][M] * pb.transition[M][k];
    }
    for (std::size_t mu = 0; mu < n; ++mu) {
      auto it = std::find(p.order.begin(), p.order.end(), static_cast<int>(mu));
      auto il = std::find(p.order.begin(), p.order.end(), lam);
      if (it > il && !C[Y][mu].is_zero()) pb.unitriangular = false;
    }
    pb.b[L] = std::move(b);
  }
  pb.rank = f.rank_in_f(pb.b, s.nu);
  pb.dim_f = f.dim_f(s.nu);
  pb.theta_consistent = true;
  for (std::size_t y = 0; y < s.ys.size() && pb.theta_consistent; ++y) {
    WordVector d = f.theta_monomial(s.ys[y]);
    for (std::size_t l = 0; l < n; ++l)
      if (!C[y][l].is_zero()) d -= pb.b[l].scaled(RationalFunction(C[y][l]));
    pb.theta_consistent = f.is_zero_in_f(d);
  }
  return pb;
}

bool Conj14Report::all_coincide() const {
  if (!evenness_certificate) return false;
  for (const auto& e : entries)
    if (!e.coincide) return false;
  return true;
}

Conj14Report conjecture14_check(const QuantumGroup& f, const StalkData& s, const PeelResult& p,
                                const ParityBasis& b) {
  Conj14Report rep;
  rep.evenness_certificate = s.alerts == 0 && s.incomplete == 0 && p.ok();
  for (int lam : p.order) {
    const auto L = static_cast<std::size_t>(lam);
    Conj14Entry e;
    e.orbit = lam;
    const auto& E = p.parity[L];
    e.table_ok = p.resolution[L] >= 0 && E[L] == LaurentPoly(1);
    for (std::size_t mu = 0; mu < s.orbits.size() && e.table_ok; ++mu) {
      if (mu == L) continue;
      const long w = s.orbits[L].dim - s.orbits[mu].dim;
      if (!E[mu].nonnegative()) e.table_ok = false;
      if (!E[mu].is_zero() && (w <= 0 || 2L * E[mu].max_exp() >= w)) e.table_ok = false;
    }
    e.resolutions_agree = true;
    for (int y : resolution_candidates(s, lam)) {
      std::vector<std::string> al;
      auto E2 = split_top(s, p.order, p.parity, s.table[static_cast<std::size_t>(y)], lam, &al);
      ++e.resolutions_tested;
      if (E2 != E || !al.empty()) e.resolutions_agree = false;
    }
    e.bar_invariant = p.resolution[L] >= 0 && f.is_zero_in_f(b.b[L].bar() - b.b[L]);
    e.coincide = rep.evenness_certificate && e.table_ok && e.resolutions_agree && e.bar_invariant;
    rep.entries.push_back(e);
  }
  return rep;
}

std::vector<std::vector<int>> refining_orders(const StalkData& s, std::size_t cap) {
  auto base = default_order(s);
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  for (std::size_t k = 0; k < base.size();) {
    std::size_t e = k;
    while (e < base.size() && s.orbits[static_cast<std::size_t>(base[e])].dim == s.orbits[static_cast<std::size_t>(base[k])].dim) ++e;
    if (e - k > 1) groups.emplace_back(k, e);
    k = e;
  }
  std::vector<std::vector<int>> out{base};
  auto cur = base;
  while (out.size() < cap) {
    // odometer over per-group permutations
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto b = cur.begin() + static_cast<std::ptrdiff_t>(groups[g].first);
      auto e = cur.begin() + static_cast<std::ptrdiff_t>(groups[g].second);
      if (std::next_permutation(b, e)) break;
    }
    if (g == groups.size()) break;
    out.push_back(cur);
  }
  return out;
}

}  // namespace quiverpar
