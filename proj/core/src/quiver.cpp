#include "quiverpar/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace quiverpar {

int total(const DimVector& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  DimVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  DimVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool leq(const DimVector& a, const DimVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Quiver::Quiver(std::vector<std::string> names, std::vector<Arrow> arrows,
               const std::string& declared_type)
    : names_(std::move(names)), arrows_(std::move(arrows)) {
  const int n = num_vertices();
  if (n == 0) throw std::invalid_argument("quiver without vertices");
  {
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate vertex label");
  }
  hmat_.assign(static_cast<std::size_t>(n * n), 0);
  for (const auto& a : arrows_) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw std::invalid_argument("arrow endpoint out of range");
    if (a.from == a.to) throw std::invalid_argument("quiver has a loop at " + name(a.from));
    ++hmat_[static_cast<std::size_t>(a.from * n + a.to)];
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int e = h(i, j) + h(j, i);
      if (e > 1) throw std::invalid_argument("multiple edges between " + name(i) + " and " + name(j));
      if (e == 1) adj[static_cast<std::size_t>(i)].push_back(j);
    }
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    DynkinComponent c{'A', 0, {}};
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(comps_.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)])
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(s)];
          stack.push_back(w);
        }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    const int nv = static_cast<int>(c.vertices.size());
    int edges = 0, branch = -1, nbranch = 0;
    for (int v : c.vertices) {
      int d = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
      edges += d;
      if (d > 3) throw std::invalid_argument("vertex of degree > 3: not a Dynkin quiver");
      if (d == 3) {
        branch = v;
        ++nbranch;
      }
    }
    edges /= 2;
    if (edges != nv - 1) throw std::invalid_argument("underlying graph has a cycle: not a Dynkin quiver");
    c.rank = nv;
    if (nbranch > 1) throw std::invalid_argument("two branch points: not a Dynkin quiver");
    if (nbranch == 1) {
      std::vector<int> arms;
      for (int w : adj[static_cast<std::size_t>(branch)]) {
        int len = 1, prev = branch, cur = w;
        while (true) {
          int next = -1;
          for (int x : adj[static_cast<std::size_t>(cur)])
            if (x != prev) next = x;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) c.type = 'D';
      else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) c.type = 'E';
      else throw std::invalid_argument("branched tree is not of type D or E");
    }
    comps_.push_back(std::move(c));
  }
  if (!declared_type.empty() && declared_type != type_string())
    throw std::invalid_argument("declared type " + declared_type + " but quiver is " + type_string());
}

Quiver Quiver::type_A(int n, const std::vector<bool>& forward) {
  std::vector<std::string> names;
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  for (int k = 0; k + 1 < n; ++k) {
    bool f = forward.empty() ? true : forward.at(static_cast<std::size_t>(k));
    arrows.push_back(f ? Arrow{k, k + 1} : Arrow{k + 1, k});
  }
  return Quiver(names, arrows);
}

Quiver Quiver::type_D(int n, bool inward) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  std::vector<Arrow> arrows;
  const int b = n - 3;  // branch vertex index
  auto add = [&](int leaf_side, int center_side) {
    arrows.push_back(inward ? Arrow{leaf_side, center_side} : Arrow{center_side, leaf_side});
  };
  for (int k = 0; k < b; ++k) add(k, k + 1);
  add(n - 2, b);
  add(n - 1, b);
  return Quiver(names, arrows);
}

Quiver Quiver::type_E(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  std::vector<Arrow> arrows;
  for (int k = 0; k + 2 < n; ++k) arrows.push_back({k, k + 1});
  arrows.push_back({n - 1, 2});
  return Quiver(names, arrows);
}

int Quiver::index(const std::string& nm) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (names_[static_cast<std::size_t>(i)] == nm) return i;
  throw std::invalid_argument("unknown vertex '" + nm + "'");
}

int Quiver::h(int i, int j) const {
  const int n = num_vertices();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("vertex index out of range");
  return hmat_[static_cast<std::size_t>(i * n + j)];
}

int Quiver::symform(int i, int j) const {
  if (i == j) {
    h(i, j);
    return 2;
  }
  return -h(i, j) - h(j, i);
}

std::string Quiver::type_string() const {
  std::vector<std::string> parts;
  for (const auto& c : comps_) parts.push_back(c.name());
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "x" : "") + parts[k];
  return s;
}

std::string Quiver::canonical_string() const {
  std::ostringstream os;
  os << type_string() << ";";
  for (const auto& n : names_) os << n << ",";
  os << ";";
  for (const auto& a : arrows_) os << names_[static_cast<std::size_t>(a.from)] << ">"
                                   << names_[static_cast<std::size_t>(a.to)] << ",";
  return os.str();
}

DimVector FlagType::weight(int num_vertices) const {
  DimVector w(static_cast<std::size_t>(num_vertices), 0);
  for (const auto& s : steps) w.at(static_cast<std::size_t>(s.vertex)) += s.mult;
  return w;
}

std::vector<int> FlagType::expansion() const {
  std::vector<int> e;
  for (const auto& s : steps)
    for (int k = 0; k < s.mult; ++k) e.push_back(s.vertex);
  return e;
}

FlagType FlagType::expanded() const { return flag_from_sequence(expansion()); }

std::vector<int> FlagType::mults() const {
  std::vector<int> a;
  for (const auto& s : steps) a.push_back(s.mult);
  return a;
}

int FlagType::length() const {
  int s = 0;
  for (const auto& st : steps) s += st.mult;
  return s;
}

std::string FlagType::to_string(const Quiver& q) const {
  std::string s = "(";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (k) s += " ";
    s += q.name(steps[k].vertex);
    if (steps[k].mult != 1) s += "^(" + std::to_string(steps[k].mult) + ")";
  }
  return s + ")";
}

FlagType flag_from_sequence(const std::vector<int>& seq) {
  FlagType y;
  for (int v : seq) y.steps.push_back({v, 1});
  return y;
}

FlagType parse_flag_type(const Quiver& q, const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '(') body.erase(body.begin());
  if (!body.empty() && body.back() == ')') body.pop_back();
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream is(body);
  std::string tok;
  FlagType y;
  while (is >> tok) {
    int mult = 1;
    auto caret = tok.find("^(");
    if (caret != std::string::npos) {
      auto close = tok.find(')', caret);
      if (close == std::string::npos) throw std::invalid_argument("bad flag type token " + tok);
      mult = std::stoi(tok.substr(caret + 2, close - caret - 2));
      tok = tok.substr(0, caret);
    }
    if (mult < 1) throw std::invalid_argument("flag step multiplicity must be positive");
    y.steps.push_back({q.index(tok), mult});
  }
  return y;
}

std::vector<FlagType> enumerate_flag_types(const Quiver& q, const DimVector& nu, std::size_t cap) {
  std::vector<FlagType> out;
  FlagType cur;
  DimVector rest = nu;
  std::function<void()> rec = [&]() {
    if (total(rest) == 0) {
      if (out.size() >= cap) throw BudgetExceeded("flag type enumeration exceeded cap");
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < q.num_vertices(); ++i)
      for (int a = 1; a <= rest[static_cast<std::size_t>(i)]; ++a) {
        rest[static_cast<std::size_t>(i)] -= a;
        cur.steps.push_back({i, a});
        rec();
        cur.steps.pop_back();
        rest[static_cast<std::size_t>(i)] += a;
      }
  };
  rec();
  return out;
}

std::vector<std::vector<int>> enumerate_sequences(const DimVector& nu) {
  std::vector<int> seq;
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (int k = 0; k < nu[i]; ++k) seq.push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  do out.push_back(seq);
  while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

std::vector<DimVector> dimension_vectors_up_to(int n, int cap, bool include_zero) {
  std::vector<DimVector> out;
  DimVector cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      if (include_zero || total(cur) > 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, cap);
  std::stable_sort(out.begin(), out.end(),
                   [](const DimVector& a, const DimVector& b) { return total(a) < total(b); });
  return out;
}

}  // namespace quiverpar
