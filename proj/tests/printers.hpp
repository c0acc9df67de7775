#pragma once

// gtest printers, so failed comparisons show polynomials rather than bytes.

#include <ostream>

#include "quiverpar/laurent.hpp"
#include "quiverpar/mpoly.hpp"
#include "quiverpar/qf.hpp"

namespace quiverpar {

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RationalFunction& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const MPoly& p, std::ostream* os) { *os << p.to_string(); }

inline void print_word(const QWord& w, std::ostream* os) {
  *os << "(";
  for (std::size_t k = 0; k < w.size(); ++k) *os << (k ? " " : "") << w[k];
  *os << ")";
}

inline void PrintTo(const WordVector& u, std::ostream* os) {
  if (u.c.empty()) *os << "0";
  bool first = true;
  for (const auto& [w, r] : u.c) {
    *os << (first ? "" : " + ") << "[" << r.to_string() << "]";
    print_word(w, os);
    first = false;
  }
}

inline void PrintTo(const TensorWordVector& t, std::ostream* os) {
  if (t.c.empty()) *os << "0";
  bool first = true;
  for (const auto& [k, r] : t.c) {
    *os << (first ? "" : " + ") << "[" << r.to_string() << "]";
    print_word(k.first, os);
    *os << "x";
    print_word(k.second, os);
    first = false;
  }
}

}  // namespace quiverpar
