#pragma once

#include <string>
#include <vector>

#include "satoh/derivation.hpp"

namespace satoh {

// Planar binary tree with basis-letter leaves.  Child order encodes the
// planar orientation.
struct RootedTree {
  Letter label = 0;              // valid for leaves
  std::vector<RootedTree> kids;  // empty (leaf) or exactly two

  bool is_leaf() const { return kids.empty(); }
  const RootedTree& left() const { return kids[0]; }
  const RootedTree& right() const { return kids[1]; }
  int leaf_count() const;

  static RootedTree leaf(Letter x);
  static RootedTree node(RootedTree l, RootedTree r);

  // total order via serialization; used for AS canonicalization
  std::string serial() const;
  bool operator==(const RootedTree& o) const = default;
};

// One edge-rooted tree diagram: value = coeff * (half ? 1/2 : 1) * (lhs-rhs).
// half requires lhs == rhs (the generator u-u of the integral lattice).
struct TreeTerm {
  Int coeff = 1;
  bool half = false;
  RootedTree lhs, rhs;

  bool operator==(const TreeTerm& o) const = default;
};

struct TreeSum {
  int genus = 0;
  std::vector<TreeTerm> terms;

  // AS canonical form: children of every internal node sorted (swap flips
  // the sign), the two halves sorted (sign-free), equal diagrams merged.
  // A half term with an even coefficient is rewritten as a whole term.
  void normalize();
  bool is_zero() const { return terms.empty(); }

  bool operator==(const TreeSum& o) const {
    if (terms.empty() && o.terms.empty()) return true;
    return genus == o.genus && terms == o.terms;
  }
};

TreeSum tree_sum_single(int genus, RootedTree lhs, RootedTree rhs,
                        Int coeff = 1, bool half = false);

LieElement lie_of_rooted(int genus, const RootedTree& t);

// Levine's expansion eta(T) = sum_v omega(v,-) (x) lie(T_v).
Derivation eta(const TreeSum& ts);

// The doubling operation D: double each external edge once.
TreeSum tree_double(const TreeSum& ts);

// delta on a bracketed word (>= 2 letters): sum over leaves of the local
// doubling, left children with +, right children with -.
LieElement delta(int genus, const RootedTree& w);

// Sum over all ways of omega-connecting a leaf of s with a leaf of t.
TreeSum tree_bracket(const TreeSum& s, const TreeSum& t);

// Independent trace oracle: omega-connect two leaves and read the necklace
// around the resulting loop.  Equals satoh_trace(eta(ts)).
CyclicClass diagrammatic_trace(const TreeSum& ts);

// JSON: [{"coeff": 1, "half": false, "tree": [lhs, rhs]}, ...] with subtrees
// as nested two-element arrays and leaves as generator-name strings.
std::string tree_sum_to_json(const TreeSum& ts);
TreeSum tree_sum_from_json(const std::string& text, int genus);

}  // namespace satoh
