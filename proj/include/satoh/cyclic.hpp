#pragma once

#include <set>

#include "satoh/tensor.hpp"

namespace satoh {

// Lexicographically least rotation of w.
Word canonical_rotation(const Word& w);
// Mirror image of a cyclic word (reversal).
Word mirror_word(const Word& w);
// Canonical form of the mirror necklace.
Word mirror_necklace(const Word& w);

// Homogeneous element of C(H) = T(H)/[T(H),T(H)].  Keys are canonical
// necklace words of length `degree`.
struct CyclicClass {
  int genus = 0;
  int degree = 0;
  std::map<Word, Rat> terms;

  CyclicClass(int g = 0, int k = 0) : genus(g), degree(k) {}

  void add(const Word& w, const Rat& c);  // canonicalizes the key
  bool is_zero() const { return terms.empty(); }
  bool integral() const;
  Rat coeff(const Word& w) const;

  CyclicClass& operator+=(const CyclicClass& o);
  CyclicClass& operator-=(const CyclicClass& o);
  CyclicClass& operator*=(const Rat& c);

  // zero classes compare equal whatever their nominal degree
  bool operator==(const CyclicClass& o) const {
    if (terms.empty() && o.terms.empty()) return true;
    return genus == o.genus && degree == o.degree && terms == o.terms;
  }
};

// Throws std::invalid_argument on non-homogeneous input.
CyclicClass cyclic_project(const TensorElement& t);

// Element of B_k(H) = C_k(H)/Mir_k(H).  Free part on non-chiral bracelets
// (canonical key = least of the two mirror necklaces, sign ledger for odd
// degree); torsion part on chiral necklaces, coefficients mod 2.
struct BClass {
  int genus = 0;
  int degree = 0;
  std::map<Word, Int> free_part;
  std::set<Word> torsion;

  bool is_zero() const { return free_part.empty() && torsion.empty(); }
  bool operator==(const BClass& o) const = default;
};

// Reduction modulo Mir_k; requires integral input.
BClass mirror_reduce(const CyclicClass& c);

struct CountReport {
  long long necklaces = 0;
  long long bracelets = 0;
  long long chiral = 0;  // necklaces equal to their own mirror
  long long b_free_rank = 0;
  long long b_torsion_rank = 0;
  bool operator==(const CountReport& o) const = default;
};

// Closed formulas (Burnside / reversal counts).
CountReport counts(int k, int n);
// Explicit enumeration over all n^k words; oracle for the formulas.
CountReport brute_counts(int k, int n);

}  // namespace satoh
