#pragma once

#include "satoh/cyclic.hpp"
#include "satoh/intlinalg.hpp"
#include "satoh/lie.hpp"

namespace satoh {

// Degree-k derivation of the free Lie ring, as a finite sum of
// covector (x) tensor LieElement-of-degree-(k+1) terms.  The covector byte x
// stands for the coordinate dual x^* (not the omega-dual).
struct Derivation {
  int genus = 0;
  int degree = 0;  // k
  std::map<Letter, LieElement> terms;

  Derivation(int g = 0, int k = 0) : genus(g), degree(k) {}

  void add_term(Letter covector, const LieElement& value);
  const LieElement* term(Letter covector) const;
  bool is_zero() const { return terms.empty(); }
  bool integral() const;

  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  Derivation& operator*=(const Rat& c);

  // zero derivations compare equal whatever their nominal degree
  bool operator==(const Derivation& o) const {
    if (terms.empty() && o.terms.empty()) return true;
    return genus == o.genus && degree == o.degree && terms == o.terms;
  }
};

LieElement omega_element(int genus);

// Leibniz extension of d to an arbitrary Lie element.
LieElement eval(const Derivation& d, const LieElement& x);
LieElement eval_omega(const Derivation& d);
bool is_symplectic(const Derivation& d);

// Integral section of eval_omega: eval_omega(omega_lift(l)) = l.
// Requires l integral, homogeneous of degree >= 3.
Derivation omega_lift(const LieElement& l);

// Contraction of the covector against the first tensor slot.
CyclicClass satoh_trace(const Derivation& d);

Derivation deriv_bracket(const Derivation& d1, const Derivation& d2);

// Leibniz action of d on cyclic tensors.
CyclicClass act_on_cyclic(const Derivation& d, const CyclicClass& c);

// Coordinate systems used by the lattice computations.
std::vector<std::pair<Letter, Word>> derivation_basis(int k, int genus);
std::vector<Word> necklace_basis(int k, int genus);

std::vector<Int> derivation_coordinates(
    const Derivation& d, const std::vector<std::pair<Letter, Word>>& basis);
std::vector<Int> cyclic_coordinates(const CyclicClass& c,
                                    const std::vector<Word>& basis);

// Basis of the symplectic kernel D_k as integer vectors in the
// derivation_basis(k, genus) coordinates (memoized).
const LatticeBasis& symplectic_kernel_lattice(int k, int genus);

// HNF basis of Tr(D_k) in necklace_basis(k, genus) coordinates (memoized).
// Throws std::domain_error("degree/genus beyond lattice budget") when
// (k+1 > 4 or genus > 3) and allow_big is false.
const LatticeBasis& cbar_lattice(int k, int genus, bool allow_big = false);
bool cbar_in_budget(int k, int genus);

struct PsiResult {
  CyclicClass representative;
  bool zero = false;  // membership in the cbar lattice
};

// psi(l) = satoh_trace(omega_lift(l)), reduced by cbar membership.
PsiResult psi(const LieElement& l);

}  // namespace satoh
