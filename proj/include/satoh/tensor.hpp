#pragma once

#include <map>

#include "satoh/basics.hpp"

namespace satoh {

// Sparse noncommutative polynomial over the letters of H.  Keys are byte
// words (see basics.hpp); the empty word is the constant term.
struct TensorElement {
  int genus = 0;
  std::map<Word, Rat> terms;

  explicit TensorElement(int g = 0) : genus(g) {}

  void add(const Word& w, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool integral() const;
  Rat coeff(const Word& w) const;

  // -1 when zero
  int min_degree() const;
  int max_degree() const;
  TensorElement graded_part(int deg) const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rat& c);

  bool operator==(const TensorElement& o) const {
    if (terms.empty() && o.terms.empty()) return true;
    return genus == o.genus && terms == o.terms;
  }
};

TensorElement tensor_letter(int genus, Letter x);
TensorElement tensor_one(int genus);

// max_deg < 0 means no truncation.
TensorElement tensor_product(const TensorElement& a, const TensorElement& b,
                             int max_deg);

// exp of an element with no constant term; includes the constant term 1.
TensorElement tensor_exp(const TensorElement& x, int max_deg);

// log(f) = sum (-1)^{k+1} (f-1)^k / k; throws if the constant term is not 1.
TensorElement tensor_log(const TensorElement& f, int max_deg);

}  // namespace satoh
