#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "quiverpar/finite_field.hpp"
#include "quiverpar/flagcount.hpp"
#include "quiverpar/klr.hpp"
#include "quiverpar/parity.hpp"
#include "quiverpar/qf.hpp"
#include "quiverpar/representation.hpp"
#include "quiverpar/restriction.hpp"
#include "quiverpar/typea.hpp"

namespace quiverpar::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "quiverpar-0.1.0";

const std::vector<std::string> kSubcommands = {"orbits",   "fibers", "klr-check", "f-dim",
                                               "even-scan", "basis",  "res-check"};

Quiver default_quiver(const std::string& type) {
  if (type.size() < 2) throw ConfigError("bad quiver type '" + type + "'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(type.substr(1), &used);
    if (used != type.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ConfigError("bad quiver type '" + type + "'");
  }
  switch (type[0]) {
    case 'A':
      if (n >= 1) return Quiver::type_A(n);
      break;
    case 'D':
      if (n >= 4) return Quiver::type_D(n);
      break;
    case 'E':
      if (n >= 6 && n <= 8) return Quiver::type_E(n);
      break;
  }
  throw ConfigError("unsupported quiver type '" + type + "'");
}

json nu_json(const DimVector& nu) { return json(nu); }

std::string nu_string(const DimVector& nu) {
  std::string s = "(";
  for (std::size_t k = 0; k < nu.size(); ++k) s += (k ? "," : "") + std::to_string(nu[k]);
  return s + ")";
}

json rep_json(const Quiver& q, const Representation& r) {
  json maps = json::array();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& m = r.maps[a];
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols; ++j) row.push_back(m.a[static_cast<std::size_t>(i * m.cols + j)]);
      rows.push_back(row);
    }
    maps.push_back({{"from", q.name(q.arrows()[a].from)}, {"to", q.name(q.arrows()[a].to)}, {"matrix", rows}});
  }
  return {{"dims", r.dims}, {"maps", maps}};
}

json poly_rows(const std::vector<LaurentPoly>& row) {
  json out = json::array();
  for (const auto& p : row) out.push_back(laurent_to_json(p));
  return out;
}

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
  }
  fs::rename(tmp, p);
}

// Shared state of one subcommand invocation.
struct Run {
  const RunConfig& cfg;
  const Quiver& q;
  RootSystem rs;
  ResultStore store;
  std::ostream& out;
  std::atomic<bool> defect{false};
  std::atomic<bool> incomplete{false};
  std::map<DimVector, std::vector<Orbit>> orbit_cache;  // only touched from the calling thread

  Run(const RunConfig& c, const Quiver& qv, std::ostream& o)
      : cfg(c), q(qv), rs(root_system(qv)), store(c.out / "records"), out(o) {}

  json rec(const std::string& kind, const DimVector& nu, const std::string& y, const std::string& lambda,
           std::optional<int> qq, json payload, const std::string& status) const {
    return ResultStore::make_record(kind, q, nu, y, lambda, qq, std::move(payload), status);
  }

  ScanOptions scan_options() {
    ScanOptions opt;
    opt.prime_powers = cfg.prime_powers;
    opt.budget = cfg.budget;
    opt.flag_cap = cfg.flag_cap;
    opt.expanded_only = cfg.expanded_only;
    opt.jobs = cfg.jobs;
    opt.count = [this](const FlagType& y, const Orbit& o, int qq) {
      const DimVector nu = y.weight(q.num_vertices());
      const std::string ys = y.to_string(q);
      if (auto hit = store.get(rec("fiber-count", nu, ys, o.name, qq, {}, "ok")))
        return BigInt((*hit)["payload"]["count"].get<std::string>());
      BigInt c = count_fiber(q, o.rep, y, qq, cfg.budget);
      store.put(rec("fiber-count", nu, ys, o.name, qq, {{"count", c.get_str()}}, "ok"));
      return c;
    };
    opt.on_record = [this](const FiberRecord& r) { record_fiber(r); };
    return opt;
  }

  const std::vector<Orbit>& orbits_of(const DimVector& nu) {
    auto it = orbit_cache.find(nu);
    if (it == orbit_cache.end()) it = orbit_cache.emplace(nu, orbits(q, rs, nu)).first;
    return it->second;
  }

  void record_fiber(const FiberRecord& r) {
    const auto& orb = orbits_of(r.nu);
    const Orbit& o = orb[static_cast<std::size_t>(r.orbit)];
    const std::string ys = r.y.to_string(q);
    json counts = json::array();
    for (const auto& c : r.result.counts) counts.push_back(c.get_str());
    json payload = {{"poly_t", laurent_to_json(r.result.poly)},
                    {"degree_bound", r.result.degree_bound},
                    {"qs", r.result.qs},
                    {"counts", counts},
                    {"fit_points", r.result.fit_points},
                    {"held_out", r.result.counts.size() - std::min(r.result.counts.size(), r.result.fit_points)}};
    std::string status = "ok";
    if (r.budget_exceeded) {
      status = "incomplete";
      incomplete = true;
    } else if (r.result.alert) {
      status = "alert";
      payload["reason"] = r.result.alert_reason;
      json alert = payload;
      alert["quiver_arrows"] = json::array();
      for (const auto& a : q.arrows()) alert["quiver_arrows"].push_back({q.name(a.from), q.name(a.to)});
      alert["representative"] = rep_json(q, o.rep);
      alert["orbit_dim"] = o.dim;
      store.put(rec("evenness-alert", r.nu, ys, o.name, std::nullopt, alert, "alert"));
    }
    store.put(rec("poincare", r.nu, ys, o.name, std::nullopt, payload, status));
  }
};

// ---------------------------------------------------------------- subcommands

json cmd_orbits(Run& run) {
  json rows = json::array();
  run.out << std::left << std::setw(12) << "nu" << std::setw(28) << "lambda" << "dim\n";
  for (const auto& nu : run.cfg.nus) {
    for (const auto& o : orbits(run.q, run.rs, nu)) {
      run.out << std::setw(12) << nu_string(nu) << std::setw(28) << o.name << o.dim << "\n";
      json payload = {{"dim", o.dim}, {"representative", rep_json(run.q, o.rep)}};
      run.store.put(run.rec("orbit", nu, "", o.name, std::nullopt, payload, "ok"));
      rows.push_back({{"nu", nu}, {"lambda", o.name}, {"dim", o.dim}});
    }
  }
  return {{"rows", rows}};
}

json stalk_json(const Run& run, const StalkData& s) {
  json orbs = json::array();
  for (const auto& o : s.orbits) orbs.push_back({{"lambda", o.name}, {"dim", o.dim}});
  json rows = json::array();
  for (std::size_t y = 0; y < s.ys.size(); ++y)
    rows.push_back({{"y", s.ys[y].to_string(run.q)}, {"dim_Ftilde", s.dFt[y]}, {"stalks_t", poly_rows(s.table[y])}});
  return {{"nu", s.nu}, {"orbits", orbs}, {"rows", rows}, {"alerts", s.alerts}, {"incomplete", s.incomplete}};
}

void print_stalks(Run& run, const StalkData& s) {
  run.out << "nu = " << nu_string(s.nu) << "\n  " << std::left << std::setw(24) << "y";
  for (const auto& o : s.orbits) run.out << std::setw(18) << o.name;
  run.out << "\n";
  for (std::size_t y = 0; y < s.ys.size(); ++y) {
    run.out << "  " << std::setw(24) << s.ys[y].to_string(run.q);
    for (const auto& p : s.table[y]) run.out << std::setw(18) << p.to_string("t");
    run.out << "\n";
  }
}

json cmd_fibers(Run& run) {
  json tables = json::array();
  auto opt = run.scan_options();
  for (const auto& nu : run.cfg.nus) {
    auto s = stalk_tables(run.q, run.rs, nu, opt);
    print_stalks(run, s);
    json t = stalk_json(run, s);
    run.store.put(run.rec("stalk-table", nu, "", "", std::nullopt, t, s.incomplete ? "incomplete" : "ok"));
    tables.push_back(std::move(t));
  }
  return {{"tables", tables}};
}

bool all_type_A(const Quiver& q) {
  return std::all_of(q.components().begin(), q.components().end(),
                     [](const DynkinComponent& c) { return c.type == 'A'; });
}

json cmd_even_scan(Run& run) {
  auto opt = run.scan_options();
  const bool typeA = all_type_A(run.q);
  std::size_t fibers = 0, alerts = 0, incomplete = 0, cell_checked = 0, cell_mismatch = 0;
  json per_nu = json::array();
  run.out << std::left << std::setw(12) << "nu" << std::setw(9) << "fibers" << std::setw(8) << "alerts"
          << std::setw(12) << "incomplete" << (typeA ? "cell-mismatch" : "") << "\n";
  for (const auto& nu : run.cfg.nus) {
    auto recs = scan_weight(run.q, run.rs, nu, opt);
    const auto& orb = run.orbits_of(nu);
    std::size_t a = 0, inc = 0, mis = 0;
    for (const auto& r : recs) {
      if (r.budget_exceeded) {
        ++inc;
        continue;
      }
      if (r.result.alert) {
        ++a;
        continue;
      }
      if (typeA) {
        ++cell_checked;
        if (typeA_cell_recursion(run.q, orb[static_cast<std::size_t>(r.orbit)].rep, r.y) != r.result.poly) ++mis;
      }
    }
    fibers += recs.size();
    alerts += a;
    incomplete += inc;
    cell_mismatch += mis;
    run.out << std::setw(12) << nu_string(nu) << std::setw(9) << recs.size() << std::setw(8) << a << std::setw(12)
            << inc << (typeA ? std::to_string(mis) : "") << "\n";
    per_nu.push_back({{"nu", nu}, {"fibers", recs.size()}, {"alerts", a}, {"incomplete", inc}});
  }
  // Disagreement between two independent computations of the same polynomial
  // is a defect, not a finding.
  if (cell_mismatch) run.defect = true;
  std::string verdict = alerts ? "alerts" : incomplete ? "incomplete" : "even-consistent";
  run.out << "verdict: " << verdict << " (" << fibers << " fibers, " << alerts << " alerts)\n";
  json s = {{"verdict", verdict}, {"fibers", fibers}, {"alerts", alerts}, {"incomplete", incomplete}, {"per_nu", per_nu}};
  if (typeA) s["cell_recursion"] = {{"checked", cell_checked}, {"mismatches", cell_mismatch}};
  return s;
}

json cmd_klr_check(Run& run) {
  json rows = json::array();
  std::size_t total_fail = 0;
  run.out << std::left << std::setw(12) << "nu" << std::setw(8) << "checks" << "failures\n";
  for (const auto& nu : run.cfg.nus) {
    auto rep = check_relations(run.q, nu, run.cfg.klr_degree_bound);
    std::map<std::string, std::pair<std::size_t, std::size_t>> fam;
    json failed = json::array();
    for (const auto& r : rep.results) {
      auto& f = fam[r.family];
      ++f.first;
      if (!r.straightening_ok || !r.action_ok) {
        ++f.second;
        failed.push_back({{"family", r.family}, {"instance", r.instance}});
      }
    }
    json fj = json::object();
    for (const auto& [k, v] : fam) fj[k] = {{"checks", v.first}, {"failures", v.second}};
    const std::size_t nf = rep.failures();
    total_fail += nf;
    run.out << std::setw(12) << nu_string(nu) << std::setw(8) << rep.results.size() << nf << "\n";
    json payload = {{"families", fj}, {"failed", failed}, {"degree_bound", run.cfg.klr_degree_bound}};
    run.store.put(run.rec("klr-check", nu, "", "", std::nullopt, payload, nf ? "fail" : "ok"));
    rows.push_back({{"nu", nu}, {"checks", rep.results.size()}, {"failures", nf}, {"families", fj}});
  }
  if (total_fail) run.defect = true;
  return {{"rows", rows}, {"failures", total_fail}};
}

json cmd_f_dim(Run& run) {
  QuantumGroup f(run.q);
  json rows = json::array();
  bool all_eq = true;
  run.out << std::left << std::setw(12) << "nu" << std::setw(10) << "dim f_nu" << "#Lambda_V\n";
  for (const auto& nu : run.cfg.nus) {
    const std::size_t d = f.dim_f(nu);
    const std::size_t k = kostant_partitions(run.rs, nu).size();
    all_eq = all_eq && d == k;
    run.out << std::setw(12) << nu_string(nu) << std::setw(10) << d << k << (d == k ? "" : "  MISMATCH") << "\n";
    run.store.put(run.rec("f-dim", nu, "", "", std::nullopt, {{"dim_f", d}, {"kostant", k}}, d == k ? "ok" : "fail"));
    rows.push_back({{"nu", nu}, {"dim_f", d}, {"kostant", k}});
  }
  json serre = json::array();
  bool serre_ok = true;
  for (const auto& s : serre_check(f)) {
    serre_ok = serre_ok && s.in_radical;
    serre.push_back({{"i", run.q.name(s.i)}, {"j", run.q.name(s.j)}, {"in_radical", s.in_radical}});
  }
  run.out << "serre relations: " << (serre_ok ? "ok" : "FAIL") << "\n";
  if (!all_eq || !serre_ok) run.defect = true;
  return {{"rows", rows}, {"serre", serre}, {"all_equal", all_eq}};
}

json matrix_json(const std::vector<std::vector<LaurentPoly>>& m) {
  json out = json::array();
  for (const auto& r : m) out.push_back(poly_rows(r));
  return out;
}

json cmd_basis(Run& run) {
  QuantumGroup f(run.q);
  auto opt = run.scan_options();
  json per_nu = json::array();
  for (const auto& nu : run.cfg.nus) {
    auto s = stalk_tables(run.q, run.rs, nu, opt);
    json j = {{"nu", nu}};
    auto ynames = [&](int y) { return y < 0 ? std::string("-") : s.ys[static_cast<std::size_t>(y)].to_string(run.q); };
    if (s.incomplete || s.alerts) {
      j["status"] = s.incomplete ? "incomplete" : "evenness-alert";
      run.out << "nu = " << nu_string(nu) << ": skipped (" << j["status"].get<std::string>() << ")\n";
      per_nu.push_back(j);
      continue;
    }
    auto p = peel(s, default_order(s));
    std::size_t orders = 0, disagreeing = 0;
    for (const auto& o : refining_orders(s)) {
      ++orders;
      auto p2 = peel(s, o);
      if (p2.parity != p.parity || p2.decomposition != p.decomposition) ++disagreeing;
    }
    if (disagreeing) p.alerts.push_back("peel result depends on the orbit order (" + std::to_string(disagreeing) + " of " +
                                        std::to_string(orders) + " orders differ)");
    for (const auto& a : p.alerts)
      run.store.put(run.rec("parity-alert", nu, "", "", std::nullopt,
                            {{"finding", a}, {"stalks", stalk_json(run, s)}}, "alert"));

    json orbs = json::array();
    for (std::size_t l = 0; l < s.orbits.size(); ++l) {
      json e = {{"lambda", s.orbits[l].name}, {"dim", s.orbits[l].dim}, {"resolution", ynames(p.resolution[l])}};
      if (p.ok()) e["parity_t"] = poly_rows(p.parity[l]);
      orbs.push_back(e);
    }
    j["orbits"] = orbs;
    j["orders_tested"] = orders;
    j["parity_alerts"] = p.alerts;
    run.out << "nu = " << nu_string(nu) << "\n";
    for (std::size_t l = 0; l < s.orbits.size(); ++l)
      run.out << "  E(" << s.orbits[l].name << ")  y = " << ynames(p.resolution[l]) << "\n";
    if (!p.ok()) {
      run.out << "  PARITY-ALERT: " << p.alerts.front() << "\n";
      j["status"] = "parity-alert";
      per_nu.push_back(j);
      continue;
    }
    auto C = k_decomposition(s, p);
    auto pb = parity_basis(f, s, p);
    auto c14 = conjecture14_check(f, s, p, pb);
    json ys = json::array();
    for (const auto& y : s.ys) ys.push_back(y.to_string(run.q));
    j["ys"] = ys;
    j["decomposition_q"] = matrix_json(C);
    j["transition_q"] = matrix_json(pb.transition);
    j["rank"] = pb.rank;
    j["dim_f"] = pb.dim_f;
    j["basis_ok"] = pb.ok();
    json ce = json::array();
    for (const auto& e : c14.entries)
      ce.push_back({{"lambda", s.orbits[static_cast<std::size_t>(e.orbit)].name},
                    {"table_ok", e.table_ok},
                    {"resolutions_agree", e.resolutions_agree},
                    {"resolutions_tested", e.resolutions_tested},
                    {"bar_invariant", e.bar_invariant},
                    {"coincide", e.coincide}});
    j["coincidence"] = {{"evenness_certificate", c14.evenness_certificate}, {"entries", ce},
                        {"all", c14.all_coincide()}};
    j["status"] = pb.ok() ? "ok" : "rank-deficient";
    for (std::size_t l = 0; l < s.orbits.size(); ++l) {
      run.out << "  b[" << s.orbits[l].name << "] =";
      bool any = false;
      for (std::size_t m = 0; m < s.orbits.size(); ++m) {
        if (pb.transition[l][m].is_zero()) continue;
        run.out << (any ? " + " : " ") << "(" << pb.transition[l][m].to_string() << ")"
                << f.monomial_string(s.ys[static_cast<std::size_t>(p.resolution[m])]);
        any = true;
      }
      run.out << (any ? "" : " 0") << "\n";
    }
    run.out << "  rank " << pb.rank << " / dim f " << pb.dim_f << ", coincidence " << (c14.all_coincide() ? "yes" : "no")
            << "\n";
    // A rank-deficient or inconsistent basis means the pipeline is wrong.
    if (!pb.ok()) run.defect = true;
    run.store.put(run.rec("basis", nu, "", "", std::nullopt, j, pb.ok() ? "ok" : "fail"));
    per_nu.push_back(j);
  }
  return {{"per_nu", per_nu}};
}

json terms_json(const Quiver& q, const RestrictionDatum& d) {
  json out = json::array();
  for (const auto& t : d.terms)
    out.push_back({{"y1", t.split.y1.to_string(q)},
                   {"y2", t.split.y2.to_string(q)},
                   {"m", t.m},
                   {"M", t.M},
                   {"shift", t.shift}});
  return out;
}

json cmd_res_check(Run& run) {
  QuantumGroup f(run.q);
  json rows = json::array();
  std::size_t checked = 0, bad = 0;
  run.out << std::left << std::setw(12) << "nu" << std::setw(8) << "ys" << "mismatches\n";
  for (const auto& nu : run.cfg.nus) {
    const auto ys = enumerate_flag_types(run.q, nu, run.cfg.flag_cap);
    std::vector<json> recs(ys.size());
    std::vector<char> ok(ys.size(), 0);
    parallel_for(ys.size(), run.cfg.jobs, [&](std::size_t k) {
      auto d = restriction_constants(run.q, ys[k]);
      ok[k] = d.bundle_ok && res_class(f, d).c == f.coproduct(f.theta_monomial(ys[k])).c;
      recs[k] = run.rec("restriction", nu, ys[k].to_string(run.q), "", std::nullopt,
                        {{"terms", terms_json(run.q, d)}, {"bundle_ok", d.bundle_ok}, {"matches_coproduct", bool(ok[k])}},
                        ok[k] ? "ok" : "fail");
    });
    std::size_t nb = 0;
    for (std::size_t k = 0; k < ys.size(); ++k) {
      run.store.put(recs[k]);
      if (!ok[k]) ++nb;
    }
    checked += ys.size();
    bad += nb;
    run.out << std::setw(12) << nu_string(nu) << std::setw(8) << ys.size() << nb << "\n";
    rows.push_back({{"nu", nu}, {"ys", ys.size()}, {"mismatches", nb}});
  }
  if (bad) run.defect = true;
  return {{"rows", rows}, {"checked", checked}, {"mismatches", bad}};
}

}  // namespace

// ---------------------------------------------------------------- config

Quiver parse_quiver(const json& j) {
  if (!j.is_object()) throw ConfigError("quiver must be a JSON object");
  const std::string type = j.value("type", "");
  if (!j.contains("vertices")) {
    if (type.empty()) throw ConfigError("quiver needs \"type\" or \"vertices\"");
    return default_quiver(type);
  }
  try {
    std::vector<std::string> names;
    for (const auto& v : j.at("vertices")) names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    auto idx = [&](const json& v) {
      const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end()) throw ConfigError("arrow endpoint '" + s + "' is not a vertex");
      return static_cast<int>(it - names.begin());
    };
    std::vector<Arrow> arrows;
    for (const auto& a : j.value("arrows", json::array())) {
      if (a.is_array() && a.size() == 2) arrows.push_back({idx(a[0]), idx(a[1])});
      else arrows.push_back({idx(a.at("from")), idx(a.at("to"))});
    }
    return Quiver(names, arrows, type);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed quiver: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid quiver: ") + e.what());
  }
}

RunConfig parse_config(const json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  try {
    if (!j.contains("quiver")) throw ConfigError("config has no \"quiver\"");
    const json& qj = j.at("quiver");
    if (qj.is_string()) {
      const fs::path p = base_dir / qj.get<std::string>();
      std::ifstream f(p);
      if (!f) throw ConfigError("missing quiver file " + p.string());
      json parsed;
      try {
        parsed = json::parse(f);
      } catch (const json::exception& e) {
        throw ConfigError("cannot parse " + p.string() + ": " + e.what());
      }
      c.quiver = parse_quiver(parsed);
    } else {
      c.quiver = parse_quiver(qj);
    }
    const int n = c.quiver->num_vertices();

    if (j.contains("nu")) {
      for (const auto& v : j.at("nu")) {
        DimVector nu = v.get<DimVector>();
        if (static_cast<int>(nu.size()) != n) throw ConfigError("nu " + v.dump() + " has the wrong length");
        if (std::any_of(nu.begin(), nu.end(), [](int x) { return x < 0; }) || total(nu) == 0)
          throw ConfigError("nu " + v.dump() + " must be nonnegative and nonzero");
        c.nus.push_back(nu);
      }
    } else {
      const int cap = j.value("nu_cap", 0);
      if (cap <= 0) throw ConfigError("need a positive \"nu_cap\" or an explicit \"nu\" list");
      c.nus = dimension_vectors_up_to(n, cap);
    }
    if (c.nus.empty()) throw ConfigError("no dimension vectors selected");

    for (const auto& v : j.value("prime_powers", json::array())) {
      const int p = v.get<int>();
      if (!is_prime_power(p) || p > 256) throw ConfigError("prime_powers: " + std::to_string(p) + " is not a prime power <= 256");
      c.prime_powers.push_back(p);
    }
    if (j.contains("budget")) {
      const auto b = j.at("budget").get<long long>();
      if (b <= 0) throw ConfigError("budget must be positive");
      c.budget = static_cast<std::uint64_t>(b);
    }
    if (j.contains("flag_cap")) {
      const auto b = j.at("flag_cap").get<long long>();
      if (b <= 0) throw ConfigError("flag_cap must be positive");
      c.flag_cap = static_cast<std::size_t>(b);
    }
    c.expanded_only = j.value("expanded_only", false);
    c.klr_degree_bound = j.value("klr_degree_bound", 2);
    if (c.klr_degree_bound < 0) throw ConfigError("klr_degree_bound must be >= 0");
    if (j.contains("out")) c.out = base_dir / j.at("out").get<std::string>();
    else c.out = base_dir / "results";
    if (j.contains("jobs")) {
      const int jb = j.at("jobs").get<int>();
      if (jb <= 0) throw ConfigError("jobs must be positive");
      c.jobs = static_cast<unsigned>(jb);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  return c;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw ConfigError("cannot parse " + path.string() + ": " + e.what());
  }
  return parse_config(j, path.parent_path());
}

json laurent_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c.get_str()}));
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j) p.add_term(t.at(0).get<int>(), BigInt(t.at(1).get<std::string>()));
  return p;
}

// ---------------------------------------------------------------- store

ResultStore::ResultStore(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

json ResultStore::make_record(const std::string& kind, const Quiver& q, const DimVector& nu, const std::string& y,
                              const std::string& lambda, std::optional<int> qq, json payload,
                              const std::string& status) {
  return {{"kind", kind},
          {"quiver", q.canonical_string()},
          {"nu", nu_json(nu)},
          {"y", y},
          {"lambda", lambda},
          {"q", qq ? json(*qq) : json(nullptr)},
          {"payload", std::move(payload)},
          {"status", status},
          {"version", kVersion}};
}

std::string ResultStore::key(const json& rec) {
  const std::string id = rec.at("kind").dump() + "|" + rec.at("quiver").dump() + "|" + rec.at("nu").dump() + "|" +
                         rec.at("y").dump() + "|" + rec.at("lambda").dump() + "|" + rec.at("q").dump() + "|" +
                         rec.at("version").dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : id) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::optional<json> ResultStore::get(const json& probe) const {
  const fs::path p = dir_ / (key(probe) + ".json");
  std::ifstream f(p);
  if (!f) return std::nullopt;
  json rec;
  try {
    rec = json::parse(f);
  } catch (const json::exception&) {
    return std::nullopt;  // torn write from an interrupted run; recompute
  }
  for (const char* k : {"kind", "quiver", "nu", "y", "lambda", "q", "version"})
    if (rec.value(k, json()) != probe.at(k)) return std::nullopt;
  if (rec.value("status", "") == "incomplete") return std::nullopt;
  std::lock_guard<std::mutex> lk(mu_);
  ++hits_;
  return rec;
}

void ResultStore::put(const json& rec) {
  const fs::path p = dir_ / (key(rec) + ".json");
  const std::string text = rec.dump(2) + "\n";
  std::lock_guard<std::mutex> lk(mu_);
  {
    std::ifstream f(p, std::ios::binary);
    if (f) {
      std::stringstream ss;
      ss << f.rdbuf();
      if (ss.str() == text) return;
    }
  }
  write_file(p, text);
  ++writes_;
}

// ---------------------------------------------------------------- driver

int run_subcommand(const std::string& sub, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.quiver) throw ConfigError("no quiver configured");
  Run run(cfg, *cfg.quiver, out);
  json body;
  try {
    if (sub == "orbits") body = cmd_orbits(run);
    else if (sub == "fibers") body = cmd_fibers(run);
    else if (sub == "even-scan") body = cmd_even_scan(run);
    else if (sub == "klr-check") body = cmd_klr_check(run);
    else if (sub == "f-dim") body = cmd_f_dim(run);
    else if (sub == "basis") body = cmd_basis(run);
    else if (sub == "res-check") body = cmd_res_check(run);
    else throw ConfigError("unknown subcommand '" + sub + "'");
  } catch (const BudgetExceeded& e) {
    run.incomplete = true;
    body["error"] = e.what();
    out << "budget exhausted: " << e.what() << "\n";
  }
  json summary = {{"subcommand", sub},
                  {"quiver", cfg.quiver->canonical_string()},
                  {"type", cfg.quiver->type_string()},
                  {"version", kVersion},
                  {"incomplete", run.incomplete.load()},
                  {"defect", run.defect.load()},
                  {"result", body}};
  write_file(cfg.out / (sub + ".json"), summary.dump(2) + "\n");
  if (run.defect) return kDefect;
  if (run.incomplete) return kBudget;
  return kOk;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Exact computations for KLR algebras, quiver flag fibers and parity sheaves"};
  app.set_version_flag("--version", kVersion);
  std::string sub, config, out_dir;
  unsigned jobs = 0;
  app.add_option("subcommand", sub, "orbits | fibers | klr-check | f-dim | even-scan | basis | res-check")
      ->required()
      ->check(CLI::IsMember(kSubcommands));
  app.add_option("--config", config, "JSON run configuration")->required();
  app.add_option("--out", out_dir, "output directory (overrides the config)");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }
  try {
    RunConfig cfg = load_config(config);
    if (!out_dir.empty()) cfg.out = out_dir;
    if (jobs) cfg.jobs = jobs;
    return run_subcommand(sub, cfg, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace quiverpar::cli
