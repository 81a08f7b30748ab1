#pragma once

#include <string>
#include <vector>

#include "satoh/lie.hpp"

namespace satoh {

// Freely reduced word in the surface-group generators alpha_i, beta_i.
// Signed letters: +(x+1) for a generator, -(x+1) for its inverse, where x is
// the basis letter byte from basics.hpp.
struct GroupWord {
  int genus = 0;
  std::vector<int> letters;

  explicit GroupWord(int g = 0) : genus(g) {}

  bool is_identity() const { return letters.empty(); }
  // appends a signed letter with free reduction
  void push(int signed_letter);

  bool operator==(const GroupWord& o) const = default;
};

GroupWord gw_letter(int genus, Letter x, int sign = 1);
GroupWord gw_multiply(const GroupWord& u, const GroupWord& v);
GroupWord gw_invert(const GroupWord& u);
// [u, v] = u v u^{-1} v^{-1}
GroupWord gw_commutator(const GroupWord& u, const GroupWord& v);

// zeta^{-1} = prod_{i=1}^g [beta_i^{-1}, alpha_i]
GroupWord boundary_word_inverse(int genus);
GroupWord boundary_word(int genus);

// Tokens "a1", "b2^-1", whitespace separated.  Throws std::invalid_argument.
GroupWord parse_group_word(const std::string& s, int genus);
std::string group_word_string(const GroupWord& w);

// Truncated Magnus expansion, x -> 1 + x, x^{-1} -> 1 - x + x^2 - ...
TensorElement magnus(const GroupWord& w, int max_deg);

// Degree-m part of magnus(w) - 1 as a Lie element.  Requires w in the m-th
// lower-central-series term (all lower degrees vanish), else throws
// std::domain_error("not in Gamma_m").
LieElement leading_lie_class(const GroupWord& w, int m);

}  // namespace satoh
