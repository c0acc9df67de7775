#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "quiverpar/laurent.hpp"
#include "quiverpar/mpoly.hpp"
#include "quiverpar/quiver.hpp"

namespace quiverpar {

using Seq = std::vector<int>;            // element of I^nu
using Perm = std::vector<std::uint8_t>;  // one-line notation, 0-based
using Word = std::vector<int>;           // letters l for tau(l), 0-based

Perm identity_perm(int m);
Perm simple_perm(int m, int l);
Perm compose(const Perm& u, const Perm& v);  // (uv)(k) = u(v(k))
Perm word_perm(int m, const Word& w);
int perm_length(const Perm& w);
Seq act_on_seq(const Perm& w, const Seq& i);
std::vector<Perm> all_perms(int m);

struct KlrKey {
  Seq idem;  // right idempotent
  Perm w;
  friend auto operator<=>(const KlrKey&, const KlrKey&) = default;
};

// Sum of P * tau_{c(w)} * 1_i, c(w) the lexicographically minimal reduced
// word of w, P a polynomial in the variables at the left idempotent w.i.
struct KlrElement {
  std::map<KlrKey, MPoly> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const KlrKey& k, const MPoly& p);
  KlrElement& operator+=(const KlrElement& o);
  KlrElement& operator-=(const KlrElement& o);
  KlrElement operator-() const;
  KlrElement scaled(const BigInt& s) const;
  friend KlrElement operator+(KlrElement a, const KlrElement& b) { return a += b; }
  friend KlrElement operator-(KlrElement a, const KlrElement& b) { return a -= b; }
  friend bool operator==(const KlrElement& a, const KlrElement& b) { return a.terms == b.terms; }
};

using PolElement = std::map<Seq, MPoly>;

class KlrAlgebra {
 public:
  KlrAlgebra(const Quiver& q, DimVector nu);
  KlrAlgebra(const KlrAlgebra&) = delete;
  KlrAlgebra& operator=(const KlrAlgebra&) = delete;

  const Quiver& quiver() const { return q_; }
  const DimVector& nu() const { return nu_; }
  int m() const { return m_; }
  const std::vector<Seq>& sequences() const { return seqs_; }

  KlrElement idem(const Seq& i) const;
  KlrElement x(const Seq& i, int k) const;    // x_i(k), k 0-based
  KlrElement tau(const Seq& i, int l) const;  // tau_i(l), l 0-based
  KlrElement poly(const Seq& i, const MPoly& p) const;
  KlrElement one() const;

  KlrElement multiply(const KlrElement& u, const KlrElement& v) const;
  KlrElement mul_tau_left(int l, const KlrElement& e) const;
  KlrElement mul_x_left(int k, const KlrElement& e) const;
  KlrElement mul_poly_left(const MPoly& p, const KlrElement& e) const;
  KlrElement project_left(const Seq& j, const KlrElement& e) const;
  KlrElement word_element(const Word& w, const Seq& i) const;  // tau_w 1_i in normal form

  const Word& canonical_word(const Perm& w) const;
  int tau_degree(const Perm& w, const Seq& i) const;
  std::optional<int> degree(const KlrElement& e) const;  // nullopt when inhomogeneous

  // Q_{i,l}(x_u, x_v) and the braid correction polynomial at idempotent i.
  MPoly q_poly(const Seq& i, int l, int u, int v) const;
  MPoly braid_correction(const Seq& i, int l) const;

  PolElement act(const KlrElement& u, const PolElement& f) const;
  MPoly act_tau(int l, const Seq& c, const MPoly& g) const;

  LaurentPoly graded_rank(const Seq& j, const Seq& i) const;

  std::string to_string(const KlrElement& e) const;
  KlrElement parse(const std::string& s) const;

 private:
  KlrElement tau_times_canonical(int l, const Perm& w, const Seq& i) const;
  KlrElement rewrite_correction(const Word& from, const Word& to, const Seq& i) const;
  std::vector<std::pair<int, bool>> braid_path(const Word& from, const Word& to) const;

  Quiver q_;
  DimVector nu_;
  int m_;
  std::vector<Seq> seqs_;

  mutable std::mutex mu_;
  mutable std::map<Perm, Word> canon_;
  mutable std::map<std::tuple<int, Perm, Seq>, KlrElement> tau_cache_;
  mutable std::map<std::tuple<Word, Word, Seq>, KlrElement> corr_cache_;
  mutable std::map<std::pair<Word, Word>, std::vector<std::pair<int, bool>>> path_cache_;
};

// e = (-1)^{l_m} x^delta tau_{w0} 1_{(i..i)}, delta = (m-1,...,1,0); the algebra
// must have nu = m*i. Idempotency is verified before returning.
KlrElement divided_idempotent(const KlrAlgebra& A, int vertex);

// Image of u1 (x) u2 under R_{nu1} (x) R_{nu2} -> R_{nu1+nu2}.
KlrElement induction_embed(const KlrAlgebra& A1, const KlrAlgebra& A2, const KlrAlgebra& A,
                           const KlrElement& u1, const KlrElement& u2);

// 1_y: the tensor product of divided idempotents along y, embedded in R_nu.
KlrElement flag_idempotent(const KlrAlgebra& A, const FlagType& y);

struct ProjectiveClass {
  FlagType y;
  Seq ui;
  LaurentPoly afact;  // [a]!, so that [P_ui] = [a]! [P_y]
  long la;            // l_a
};
ProjectiveClass projective_class(const FlagType& y);

// Graded dimensions of R*e in degrees [dmin, dmax], e with left and right
// idempotent i; computed as ranks of {b e : b basis element of R 1_i}.
std::vector<long> left_ideal_graded_dims(const KlrAlgebra& A, const KlrElement& e, const Seq& i,
                                         int dmin, int dmax);
// Graded dimensions of R 1_i (free count of the basis).
std::vector<long> free_graded_dims(const KlrAlgebra& A, const Seq& i, int dmin, int dmax);

struct RelationResult {
  std::string family;
  std::string instance;
  bool straightening_ok = false;
  bool action_ok = false;
};

struct RelationReport {
  std::vector<RelationResult> results;
  std::size_t failures() const;
};

RelationReport check_relations(const Quiver& q, const DimVector& nu, int degree_bound = 2);

}  // namespace quiverpar
