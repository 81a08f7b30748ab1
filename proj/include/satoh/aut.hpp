#pragma once

#include "satoh/groupword.hpp"

namespace satoh {

// Automorphism of the free surface group, stored with explicit inverse
// images.  Both directions are verified on construction.
struct FreeAutomorphism {
  int genus = 0;
  std::vector<GroupWord> fwd;  // image of generator x, indexed by letter byte
  std::vector<GroupWord> inv;  // image under the inverse automorphism

  FreeAutomorphism(int g, std::vector<GroupWord> forward,
                   std::vector<GroupWord> inverse);

  static FreeAutomorphism identity(int genus);
};

GroupWord apply_aut(const FreeAutomorphism& f, const GroupWord& w);

// (f * g)(x) = f(g(x))
FreeAutomorphism aut_compose(const FreeAutomorphism& f,
                             const FreeAutomorphism& g);
FreeAutomorphism aut_invert(const FreeAutomorphism& f);
// f g f^{-1} g^{-1}
FreeAutomorphism aut_commutator(const FreeAutomorphism& f,
                                const FreeAutomorphism& g);

// K_{xy}: x -> y^{-1} x y, other generators fixed (x != y).
FreeAutomorphism aut_K(int genus, Letter x, Letter y);
// K_{xyz}: x -> x [y, z], other generators fixed (x, y, z distinct).
FreeAutomorphism aut_K3(int genus, Letter x, Letter y, Letter z);

// Grammar: aut := 'K' gen gen | 'K3' gen gen gen | '[' aut ',' aut ']'
//               | aut '*' aut | 'inv(' aut ')'
// Generators written a1..ag, b1..bg.  Throws std::invalid_argument.
FreeAutomorphism parse_automorphism(const std::string& s, int genus);

}  // namespace satoh
