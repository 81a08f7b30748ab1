#include "satoh/trees.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <tuple>

namespace satoh {

int RootedTree::leaf_count() const {
  if (is_leaf()) return 1;
  return kids[0].leaf_count() + kids[1].leaf_count();
}

RootedTree RootedTree::leaf(Letter x) {
  RootedTree t;
  t.label = x;
  return t;
}

RootedTree RootedTree::node(RootedTree l, RootedTree r) {
  RootedTree t;
  t.kids.push_back(std::move(l));
  t.kids.push_back(std::move(r));
  return t;
}

std::string RootedTree::serial() const {
  if (is_leaf()) return std::string(1, static_cast<char>(label + 1));
  return "(" + kids[0].serial() + kids[1].serial() + ")";
}

namespace {

// AS normal form of a rooted subtree: children sorted, sign tracked.
int as_canon(RootedTree& t) {
  if (t.is_leaf()) return 1;
  int s = as_canon(t.kids[0]) * as_canon(t.kids[1]);
  if (t.kids[1].serial() < t.kids[0].serial()) {
    std::swap(t.kids[0], t.kids[1]);
    s = -s;
  }
  return s;
}

}  // namespace

void TreeSum::normalize() {
  std::map<std::pair<std::string, std::string>, std::pair<TreeTerm, Rat>> acc;
  for (TreeTerm term : terms) {
    if (term.half && !(term.lhs == term.rhs))
      throw std::invalid_argument("half-symmetric term with distinct halves");
    int sign = as_canon(term.lhs) * as_canon(term.rhs);
    std::string sl = term.lhs.serial(), sr = term.rhs.serial();
    if (sr < sl) {
      std::swap(term.lhs, term.rhs);
      std::swap(sl, sr);
    }
    Rat c = Rat(term.coeff) * sign * (term.half ? Rat(1, 2) : Rat(1));
    auto key = std::make_pair(sl, sr);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, std::make_pair(std::move(term), c));
    else
      it->second.second += c;
  }
  terms.clear();
  for (auto& [key, tc] : acc) {
    auto& [term, c] = tc;
    if (c == 0) continue;
    if (is_integral(c)) {
      term.coeff = c.get_num();
      term.half = false;
    } else if (c.get_den() == 2 && term.lhs == term.rhs) {
      term.coeff = c.get_num();
      term.half = true;
    } else {
      throw std::invalid_argument("tree sum off the integral lattice");
    }
    terms.push_back(std::move(term));
  }
}

TreeSum tree_sum_single(int genus, RootedTree lhs, RootedTree rhs, Int coeff,
                        bool half) {
  TreeSum ts;
  ts.genus = genus;
  ts.terms.push_back(TreeTerm{std::move(coeff), half, std::move(lhs),
                              std::move(rhs)});
  ts.normalize();
  return ts;
}

LieElement lie_of_rooted(int genus, const RootedTree& t) {
  if (t.is_leaf()) return lie_letter(genus, t.label);
  return lie_bracket(lie_of_rooted(genus, t.left()),
                     lie_of_rooted(genus, t.right()));
}

namespace {

// All (leaf label, tree rerooted at that leaf) pairs of the half `t`, where
// `across` is the other half of the edge-rooted diagram.
void collect_rerooted(const RootedTree& t, const RootedTree& across,
                      std::vector<std::pair<Letter, RootedTree>>& out) {
  if (t.is_leaf()) {
    out.emplace_back(t.label, across);
    return;
  }
  collect_rerooted(t.left(), RootedTree::node(t.right(), across), out);
  collect_rerooted(t.right(), RootedTree::node(across, t.left()), out);
}

std::vector<std::pair<Letter, RootedTree>> rerooted_leaves(
    const TreeTerm& term) {
  std::vector<std::pair<Letter, RootedTree>> out;
  collect_rerooted(term.lhs, term.rhs, out);
  collect_rerooted(term.rhs, term.lhs, out);
  return out;
}

Rat term_factor(const TreeTerm& term) {
  return Rat(term.coeff) * (term.half ? Rat(1, 2) : Rat(1));
}

}  // namespace

Derivation eta(const TreeSum& ts) {
  int degree = ts.terms.empty() ? 0 : ts.terms[0].lhs.leaf_count() +
                                          ts.terms[0].rhs.leaf_count() - 2;
  Derivation out(ts.genus, degree);
  for (const auto& term : ts.terms) {
    Rat f = term_factor(term);
    for (const auto& [x, tv] : rerooted_leaves(term)) {
      // omega(x, -) = +bar(x)^* for a-letters, -bar(x)^* for b-letters
      LieElement v = lie_of_rooted(ts.genus, tv);
      v *= is_a(x) ? f : -f;
      out.add_term(bar(x), v);
    }
  }
  if (!out.integral())
    throw std::logic_error("eta: non-integral result");
  return out;
}

TreeSum tree_double(const TreeSum& ts) {
  TreeSum out;
  out.genus = ts.genus;
  for (const auto& term : ts.terms) {
    // Doubling the external edge of leaf x splits its vertex in two, one copy
    // of x on each side: (L, R | x) becomes (L, x | x, R).
    std::vector<std::pair<Letter, RootedTree>> leaves;
    if (term.half) {
      // the two copies of each doubling coincide, absorbing the 1/2
      collect_rerooted(term.lhs, term.rhs, leaves);
    } else {
      leaves = rerooted_leaves(term);
    }
    // The two halves of an edge-rooted diagram carry opposite planar
    // handedness, so doublings taken from the two sides enter with opposite
    // signs (reflected 5-vertex diagrams are negatives of each other).
    std::size_t lhs_count = static_cast<std::size_t>(term.lhs.leaf_count());
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const auto& [x, tv] = leaves[i];
      if (tv.is_leaf())
        throw std::invalid_argument("tree_double: degree too small");
      Int c = i < lhs_count ? -term.coeff : term.coeff;
      RootedTree xl = RootedTree::leaf(x);
      out.terms.push_back(TreeTerm{std::move(c), false,
                                   RootedTree::node(tv.left(), xl),
                                   RootedTree::node(xl, tv.right())});
    }
  }
  out.normalize();
  return out;
}

LieElement delta(int genus, const RootedTree& w) {
  if (w.is_leaf())
    throw std::invalid_argument("delta: word needs at least two letters");
  const RootedTree& l = w.left();
  const RootedTree& r = w.right();
  LieElement whole = lie_of_rooted(genus, w);
  LieElement out(genus);
  if (l.is_leaf())
    out += lie_bracket(lie_letter(genus, l.label), whole);
  else
    out += lie_bracket(delta(genus, l), lie_of_rooted(genus, r));
  if (r.is_leaf())
    out -= lie_bracket(whole, lie_letter(genus, r.label));
  else
    out += lie_bracket(lie_of_rooted(genus, l), delta(genus, r));
  return out;
}

TreeSum tree_bracket(const TreeSum& s, const TreeSum& t) {
  if (s.genus != t.genus && !s.terms.empty() && !t.terms.empty())
    throw std::invalid_argument("genus mismatch");
  std::map<std::pair<std::string, std::string>, std::pair<TreeTerm, Rat>> acc;
  for (const auto& st : s.terms) {
    Rat fs = term_factor(st);
    auto sre = rerooted_leaves(st);
    for (const auto& tt : t.terms) {
      Rat ft = term_factor(tt);
      auto tre = rerooted_leaves(tt);
      for (const auto& [xs, ss] : sre) {
        for (const auto& [xt, tv] : tre) {
          int w = omega_pairing(xs, xt);
          if (w == 0) continue;
          TreeTerm glued{1, false, ss, tv};
          int sign = as_canon(glued.lhs) * as_canon(glued.rhs);
          std::string sl = glued.lhs.serial(), sr = glued.rhs.serial();
          if (sr < sl) {
            std::swap(glued.lhs, glued.rhs);
            std::swap(sl, sr);
          }
          Rat c = fs * ft * w * sign;
          auto key = std::make_pair(sl, sr);
          auto it = acc.find(key);
          if (it == acc.end())
            acc.emplace(key, std::make_pair(glued, c));
          else
            it->second.second += c;
        }
      }
    }
  }
  TreeSum out;
  out.genus = s.genus;
  for (auto& [key, tc] : acc) {
    auto& [term, c] = tc;
    if (c == 0) continue;
    if (is_integral(c)) {
      term.coeff = c.get_num();
    } else if (c.get_den() == 2 && term.lhs == term.rhs) {
      term.coeff = c.get_num();
      term.half = true;
    } else {
      throw std::logic_error("tree_bracket: non-integral coefficient");
    }
    out.terms.push_back(std::move(term));
  }
  out.normalize();
  return out;
}

namespace {

// Contributions of omega-connecting the rerooted tree's leaves against the
// contracted leaf labeled v_label: walk to each leaf, accumulating the
// tensor expansions of the sibling subtrees passed on the way.
void necklace_walk(int genus, const RootedTree& t, Letter v_label,
                   const TensorElement& suffix, int sign, const Rat& factor,
                   CyclicClass& out) {
  if (t.is_leaf()) {
    int w = omega_pairing(v_label, t.label);
    if (w == 0) return;
    for (const auto& [word, c] : suffix.terms)
      out.add(word, c * factor * (w * sign));
    return;
  }
  necklace_walk(genus, t.left(), v_label,
                tensor_product(lie_to_tensor(lie_of_rooted(genus, t.right())),
                               suffix, -1),
                sign, factor, out);
  necklace_walk(genus, t.right(), v_label,
                tensor_product(lie_to_tensor(lie_of_rooted(genus, t.left())),
                               suffix, -1),
                -sign, factor, out);
}

}  // namespace

CyclicClass diagrammatic_trace(const TreeSum& ts) {
  int degree = ts.terms.empty() ? 0 : ts.terms[0].lhs.leaf_count() +
                                          ts.terms[0].rhs.leaf_count() - 2;
  CyclicClass out(ts.genus, degree);
  for (const auto& term : ts.terms) {
    Rat f = term_factor(term);
    for (const auto& [x, tv] : rerooted_leaves(term))
      necklace_walk(ts.genus, tv, x, tensor_one(ts.genus), 1, f, out);
  }
  return out;
}

namespace {

using nlohmann::json;

json tree_to_json(const RootedTree& t) {
  if (t.is_leaf()) return json(letter_name(t.label));
  return json::array({tree_to_json(t.left()), tree_to_json(t.right())});
}

RootedTree tree_from_json(const json& j, int genus) {
  if (j.is_string()) return RootedTree::leaf(parse_letter(j.get<std::string>(), genus));
  if (j.is_array() && j.size() == 2)
    return RootedTree::node(tree_from_json(j[0], genus),
                            tree_from_json(j[1], genus));
  throw std::invalid_argument("tree JSON: expected leaf string or 2-array");
}

}  // namespace

std::string tree_sum_to_json(const TreeSum& ts) {
  json arr = json::array();
  for (const auto& term : ts.terms) {
    json t;
    if (term.coeff.fits_slong_p())
      t["coeff"] = term.coeff.get_si();
    else
      t["coeff"] = term.coeff.get_str();
    t["half"] = term.half;
    t["tree"] = json::array({tree_to_json(term.lhs), tree_to_json(term.rhs)});
    arr.push_back(std::move(t));
  }
  return arr.dump();
}

TreeSum tree_sum_from_json(const std::string& text, int genus) {
  json doc = json::parse(text);
  if (doc.is_object()) doc = json::array({doc});
  if (!doc.is_array())
    throw std::invalid_argument("tree JSON: expected object or array");
  TreeSum out;
  out.genus = genus;
  for (const auto& j : doc) {
    TreeTerm term;
    if (j.contains("coeff")) {
      const auto& c = j.at("coeff");
      term.coeff = c.is_string() ? Int(c.get<std::string>())
                                 : Int(c.get<long>());
    }
    term.half = j.value("half", false);
    const auto& tr = j.at("tree");
    if (!tr.is_array() || tr.size() != 2)
      throw std::invalid_argument("tree JSON: 'tree' must be a 2-array");
    term.lhs = tree_from_json(tr[0], genus);
    term.rhs = tree_from_json(tr[1], genus);
    out.terms.push_back(std::move(term));
  }
  out.normalize();
  return out;
}

}  // namespace satoh
