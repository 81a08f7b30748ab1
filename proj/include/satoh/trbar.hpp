#pragma once

#include <utility>

#include "satoh/aut.hpp"
#include "satoh/trees.hpp"

namespace satoh {

enum class ReduceMode { none, cbar, mir };

// Obstruction class in C_{k+1}(H), optionally reduced modulo the trace
// lattice (cbar) or the mirror subspace (mir).
struct ObstructionValue {
  int degree = 0;  // necklace degree k+1
  CyclicClass representative;
  ReduceMode mode = ReduceMode::none;
  bool zero = false;   // meaningful under cbar/mir; plain is_zero otherwise
  BClass mir_value;    // filled under mir mode
};

// Closed three-term formula on a tree presentation of a trace-free symplectic
// derivation.  Throws std::domain_error("not symplectic" / "not trace-free" /
// "genus too small") and std::logic_error("non-integral result").
ObstructionValue trbar_formula(const TreeSum& d, ReduceMode mode);

// Direct route: the obstruction of a lift f of the derivation, read off the
// boundary word.  Throws std::domain_error("not in A_k" / "derivation not
// symplectic") and std::invalid_argument on a degree-cap overrun.
ObstructionValue trbar_direct(const FreeAutomorphism& f, int k, ReduceMode mode,
                              int max_degree = 8);

// Reduction modulo the mirror subspace.
BClass tr_mir(const TreeSum& d);
BClass tr_mir(const FreeAutomorphism& f, int k, int max_degree = 8);

// Element of the second exterior power mod 2.
struct WedgeClass {
  std::set<std::pair<Letter, Letter>> bits;  // pairs (x, y) with x < y

  void flip(Letter x, Letter y);  // toggles x wedge y; drops diagonal pairs
  bool is_zero() const { return bits.empty(); }
  bool operator==(const WedgeClass& o) const = default;
};

// Antisymmetric degree-2 obstruction; only defined on degree-2 tree sums.
// Throws std::invalid_argument("tr_as: degree 2 only").
WedgeClass tr_as(const TreeSum& d);

// iota(x wedge y) = xxy + yyx, a 2-torsion class of degree 3.
BClass iota(const WedgeClass& w, int genus);

// The degree-2k half-ladder 1/2 (u-u) with u = [[...[a_1,a_2],...],a_{k+1}].
// Requires g >= k+2; throws std::domain_error("genus too small").
TreeSum witness(int k, int genus);

// The two five-leaf factors whose bracket is 2 * witness(3, genus).
std::pair<TreeSum, TreeSum> witness_bracket_factors(int genus);
// Nested tripod bracket equal (as a derivation) to the first factor.
TreeSum witness_tripod_decomposition(int genus);

struct WitnessReport {
  bool trace_free = false;
  bool symplectic = false;
  bool mir_nonzero = false;
  bool coordinate_one = false;       // the m a_1 mbar torsion coordinate
  bool decomposition_checked = false;  // only for k = 3
  bool decomposition_ok = false;

  bool ok() const {
    return trace_free && symplectic && mir_nonzero && coordinate_one &&
           (!decomposition_checked || decomposition_ok);
  }
};

WitnessReport witness_check(int k, int genus);

}  // namespace satoh
