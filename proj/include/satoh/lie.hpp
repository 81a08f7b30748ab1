#pragma once

#include <utility>
#include <vector>

#include "satoh/tensor.hpp"

namespace satoh {

// Element of the free Lie ring in the Lyndon-word basis.  Keys are Lyndon
// byte words; mixed degrees allowed.
struct LieElement {
  int genus = 0;
  std::map<Word, Rat> terms;

  explicit LieElement(int g = 0) : genus(g) {}

  void add(const Word& w, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool integral() const;
  Rat coeff(const Word& w) const;
  bool homogeneous() const;
  int degree() const;  // -1 when zero, top degree otherwise
  LieElement graded_part(int deg) const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rat& c);

  bool operator==(const LieElement& o) const {
    if (terms.empty() && o.terms.empty()) return true;
    return genus == o.genus && terms == o.terms;
  }
};

bool is_lyndon_word(const Word& w);

// All Lyndon words of length k over letters {0..n-1}, lexicographic order.
std::vector<Word> lyndon_basis(int n, int k);

// Witt's formula: dim of the degree-k part of the free Lie ring on n letters.
long long witt_dimension(int n, int k);

// w = uv with v the longest proper Lyndon suffix; w must be Lyndon, |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

// Tensor expansion of the standard bracketing of a Lyndon word (integer
// coefficients; w itself appears with coefficient 1 as the lex-least word).
const std::map<Word, Int>& lyndon_tensor(const Word& w);

LieElement lie_letter(int genus, Letter x);
TensorElement lie_to_tensor(const LieElement& x);

// Throws std::invalid_argument("not a Lie element") when t is not in the
// image of the embedding.
LieElement tensor_to_lie(const TensorElement& t);

LieElement lie_bracket(const LieElement& x, const LieElement& y);

// The left-normed bracket [[...[x1,x2],x3]...,xm] of a letter sequence.
LieElement left_normed_bracket(int genus, const Word& seq);

// x = sum of coeff * left-normed brackets; x must have integer coefficients.
// Throws std::invalid_argument on non-integral input.
std::vector<std::pair<Int, Word>> left_normed_decompose(const LieElement& x);

// Truncated log(exp x * exp y).
LieElement bch(const LieElement& x, const LieElement& y, int max_deg);

}  // namespace satoh
