#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiverpar {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  int from;
  int to;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct DynkinComponent {
  char type;  // 'A', 'D' or 'E'
  int rank;
  std::vector<int> vertices;
  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

using DimVector = std::vector<int>;

int total(const DimVector& v);
DimVector operator+(const DimVector& a, const DimVector& b);
DimVector operator-(const DimVector& a, const DimVector& b);
bool leq(const DimVector& a, const DimVector& b);  // componentwise

class Quiver {
 public:
  // Validates that the underlying graph is a disjoint union of ADE diagrams.
  // A nonempty declared type ("D4", "A1xA2") must match the detected one.
  Quiver(std::vector<std::string> names, std::vector<Arrow> arrows,
         const std::string& declared_type = "");

  // Linear quiver 1 - 2 - ... - n; forward[k] orients edge k as k -> k+1.
  static Quiver type_A(int n, const std::vector<bool>& forward = {});
  // D_n: path 1 - ... - (n-2) with n-1 and n attached to n-2. All arrows
  // point into the branch vertex when inward is true.
  static Quiver type_D(int n, bool inward = true);
  static Quiver type_E(int n);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int h(int i, int j) const;
  int symform(int i, int j) const;
  const std::vector<DynkinComponent>& components() const { return comps_; }
  std::string type_string() const;
  // Stable textual description, used for hashing and record keys.
  std::string canonical_string() const;

 private:
  std::vector<std::string> names_;
  std::vector<Arrow> arrows_;
  std::vector<int> hmat_;
  std::vector<DynkinComponent> comps_;
};

struct FlagStep {
  int vertex;
  int mult;
  friend auto operator<=>(const FlagStep&, const FlagStep&) = default;
};

// y = (i_1^(a_1) ... i_k^(a_k)).
struct FlagType {
  std::vector<FlagStep> steps;

  DimVector weight(int num_vertices) const;
  std::vector<int> expansion() const;  // the sequence in I^nu
  FlagType expanded() const;
  std::vector<int> mults() const;
  int length() const;  // sum of multiplicities
  std::string to_string(const Quiver& q) const;
  friend auto operator<=>(const FlagType&, const FlagType&) = default;
};

FlagType flag_from_sequence(const std::vector<int>& seq);
// Parses "(1^(2) 2)" / "(1,1,2)" style names using the quiver's vertex labels.
FlagType parse_flag_type(const Quiver& q, const std::string& s);

std::vector<FlagType> enumerate_flag_types(const Quiver& q, const DimVector& nu,
                                           std::size_t cap = 1000000);
std::vector<std::vector<int>> enumerate_sequences(const DimVector& nu);
std::vector<DimVector> dimension_vectors_up_to(int num_vertices, int cap, bool include_zero = false);

}  // namespace quiverpar
